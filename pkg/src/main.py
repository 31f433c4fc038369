import asyncio
import traceback
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from pathlib import Path

from loguru import logger
from pydantic import BaseModel

from src.coloring.auto import run_method
from src.coloring.coloring import verify_coloring
from src.config import BatchSpec, SolverConfig
from src.core.graph import Edge
from src.core.io import read_graph
from src.errors import InternalFault, OddColorError


class BatchRecord(BaseModel):
    """Outcome of coloring one graph file"""
    file: str
    vertices: int | None = None
    edges: int | None = None
    colors: int | None = None
    provenance: str | None = None
    removed_edge: Edge | None = None
    valid: bool = False
    error: str | None = None
    exit_code: int = 0


def color_file(path: Path, method: str, config: SolverConfig) -> BatchRecord:
    """Color and verify one file; errors of the package become part of the record"""
    record = BatchRecord(file=Path(path).name)
    try:
        g = read_graph(path)
        record.vertices, record.edges = g.vertex_count, g.edge_count
        outcome = run_method(g, method, config)
        coloring = outcome.coloring
        report = verify_coloring(coloring.parent, coloring)
        record.colors = coloring.k
        record.provenance = coloring.provenance
        record.removed_edge = outcome.removed_edge
        record.valid = report.valid
        if not report.valid:
            record.error = f"violation {report.describe()}"
            record.exit_code = 1
    except OddColorError as e:
        record.error = str(e)
        record.exit_code = e.exit_code
    return record


async def _worker(queue: asyncio.Queue, executor: Executor, spec: BatchSpec, config: SolverConfig, results: list):
    loop = asyncio.get_running_loop()
    while True:
        idx, path = await queue.get()
        try:
            logger.debug("Coloring {}", path)
            results[idx] = await loop.run_in_executor(executor, color_file, path, spec.method, config)
        except Exception as e:
            logger.error("Batch item {} failed: {}", path, traceback.format_exc())
            results[idx] = BatchRecord(file=Path(path).name, error=repr(e), exit_code=InternalFault.exit_code)
        finally:
            queue.task_done()


async def execute_batch(spec: BatchSpec) -> list[BatchRecord]:
    files = spec.files or sorted(spec.input_dir.glob(spec.pattern))
    config = SolverConfig(search_budget=spec.search_budget, exact_budget=spec.exact_budget, jobs=spec.jobs)
    results: list[BatchRecord | None] = [None] * len(files)
    queue: asyncio.Queue = asyncio.Queue()
    for idx, path in enumerate(files):
        queue.put_nowait((idx, path))

    # one worker process per job; a single job stays in-process
    executor: Executor = ProcessPoolExecutor(spec.jobs) if spec.jobs > 1 else ThreadPoolExecutor(1)
    with executor:
        workers = [asyncio.create_task(_worker(queue, executor, spec, config, results)) for _ in range(spec.jobs)]
        try:
            await queue.join()
        finally:
            for task in workers:
                task.cancel()
            await asyncio.gather(*workers, return_exceptions=True)
    return [r for r in results if r is not None]


def run_batch(spec: BatchSpec) -> list[BatchRecord]:
    logger.info("Batch over {} files", len(spec.files) or "all matching")
    return asyncio.run(execute_batch(spec))
