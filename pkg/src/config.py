from pathlib import Path
from typing import Any

import yaml
from loguru import logger
from pydantic import BaseModel, Field, PositiveInt

BASE_PATH = Path(__file__).resolve().parent.parent
DEFAULT_CONFIG_PATH = BASE_PATH / "configs" / "default.yaml"

DEFAULT_SEARCH_BUDGET = 10**7
DEFAULT_EXACT_BUDGET = 5 * 10**7


class SolverConfig(BaseModel):
    """
    Knobs shared by the searches, the exact solver and the fixture sampler
    """
    search_budget: PositiveInt = DEFAULT_SEARCH_BUDGET
    exact_budget: PositiveInt = DEFAULT_EXACT_BUDGET
    k_max: PositiveInt = 4
    fixture_attempts: PositiveInt = 10_000
    jobs: PositiveInt = 1


class BatchSpec(BaseModel):
    """
    Spec for coloring every graph file of a directory
    """
    input_dir: Path
    pattern: str = "*.txt"
    method: str = "auto"
    jobs: PositiveInt = 1
    search_budget: PositiveInt = DEFAULT_SEARCH_BUDGET
    exact_budget: PositiveInt = DEFAULT_EXACT_BUDGET
    files: list[Path] = Field(default_factory=list)


def load_config(config_path: Path | None = None, overrides: dict[str, Any] | None = None) -> SolverConfig:
    """Load solver config from yaml and apply overrides

    Args:
        config_path (Path | None, optional): Yaml file, the packaged default is used when None.
        overrides (dict[str, Any] | None, optional): Values that win over the file, None values are skipped.

    Returns:
        SolverConfig: Validated config
    """
    content: dict[str, Any] = {}
    path = config_path or DEFAULT_CONFIG_PATH
    if path.exists():
        with open(path, "r") as f:
            content = yaml.safe_load(f) or {}
    elif config_path is not None:
        raise FileNotFoundError(f"config not found at {config_path}")
    for key, value in (overrides or {}).items():
        if value is not None:
            content[key] = value
    config = SolverConfig(**content)
    logger.debug("Solver config: {}", config.model_dump_json())
    return config
