"""
Command line front end for odd edge-colorings.
"""
import functools
from pathlib import Path

import click
from loguru import logger
from rich.console import Console
from rich.table import Table

from src.coloring.auto import Method, run_method
from src.coloring.coloring import verify_coloring
from src.coloring.exact import exact_odd_chromatic_index
from src.config import BatchSpec, SolverConfig, load_config
from src.core.io import format_coloring, format_graph, read_coloring, read_graph
from src.errors import InternalFault, OddColorError, PreconditionError
from src.export.dot import export_dot
from src.generators.families import CUBIC_BASES, circulant, star_obstruction_graph, subdivided_cubic_graph, wheel
from src.generators.fixtures import Profile, random_fixture
from src.main import run_batch
from src.utils.setup_logger import setup_logger

FAMILIES = ["wheel", "subdivided-cubic", "star-obstruction", "circulant", "random"]

GRAPH_PATH = click.Path(exists=True, file_okay=True, dir_okay=False, readable=True, path_type=Path)


def graceful_exit(command):
    """Turn package errors into a message on stderr and the error's exit code"""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        ctx = click.get_current_context()
        try:
            return command(*args, **kwargs)
        except OddColorError as e:
            logger.debug("{} failed: {!r}", ctx.command_path, e)
            click.echo(str(e), err=True)
            ctx.exit(e.exit_code)
        except FileNotFoundError as e:
            click.echo(str(e), err=True)
            ctx.exit(PreconditionError.exit_code)
    return wrapper


@click.group()
@click.option(
    "--log-level",
    type=click.Choice(["TRACE", "DEBUG", "INFO", "WARNING"], case_sensitive=False),
    default="WARNING",
    help="Logger level"
)
@click.option(
    "--log-file",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Also write logs to this file"
)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, readable=True, path_type=Path),
    default=None,
    help="Solver config yaml"
)
@click.pass_context
def cli(ctx: click.Context, log_level: str, log_file: Path | None, config_path: Path | None) -> None:
    setup_logger(log_level.upper(), log_file)
    ctx.obj = load_config(config_path)


def _config(ctx: click.Context, **overrides) -> SolverConfig:
    return ctx.obj.model_copy(update={k: v for k, v in overrides.items() if v is not None})


@cli.command()
@click.argument("graph", type=GRAPH_PATH)
@click.option("--max-k", type=click.IntRange(1), default=None, help="Largest number of colors tried")
@click.option("--budget", type=click.IntRange(1), default=None, help="Search nodes allowed")
@click.pass_context
@graceful_exit
def chi(ctx: click.Context, graph: Path, max_k: int | None, budget: int | None) -> None:
    """
    Exact odd chromatic index with a witness coloring
    """
    config = _config(ctx, k_max=max_k, exact_budget=budget)
    g = read_graph(graph)
    result = exact_odd_chromatic_index(g, config.k_max, config.exact_budget)
    logger.info("Exact search visited {} nodes", result.nodes)
    click.echo(result.describe())
    if result.witness is not None:
        click.echo(format_coloring(result.witness.assignment), nl=False)


@cli.command()
@click.argument("graph", type=GRAPH_PATH)
@click.option(
    "-m",
    "--method",
    type=click.Choice([m.value for m in Method]),
    default=Method.Auto.value,
    help="Coloring procedure"
)
@click.option("--budget", type=click.IntRange(1), default=None, help="Extensions allowed in path and cycle searches")
@click.pass_context
@graceful_exit
def color(ctx: click.Context, graph: Path, method: str, budget: int | None) -> None:
    """
    Odd edge-coloring by a constructive procedure

    The first output line "# provenance NAME" names the construction used:
    tree, even-order, eulerian-remove, two-even-vertices, dominating-even-vertex,
    dominating-even-vertex/wheel, star-parity/CASE or exact-search.
    """
    config = _config(ctx, search_budget=budget)
    g = read_graph(graph)
    outcome = run_method(g, method, config)
    coloring = outcome.coloring
    if not verify_coloring(coloring.parent, coloring):
        raise InternalFault(f"{coloring.provenance} produced an invalid coloring")
    logger.info("Colored {} with {} classes", graph.name, coloring.k)
    click.echo(f"# provenance {coloring.provenance}")
    if outcome.removed_edge is not None:
        click.echo("# removed {} {}".format(*outcome.removed_edge))
    click.echo(format_coloring(coloring.assignment), nl=False)


@cli.command()
@click.argument("graph", type=GRAPH_PATH)
@click.argument("coloring", type=GRAPH_PATH)
@graceful_exit
def verify(graph: Path, coloring: Path) -> None:
    """
    Check that every color class induces an odd subgraph
    """
    report = verify_coloring(read_graph(graph), read_coloring(coloring))
    if report.valid:
        click.echo("valid")
        return
    click.echo(f"violation {report.describe()}")
    click.get_current_context().exit(1)


@cli.command()
@click.argument("family", type=click.Choice(FAMILIES))
@click.argument("n", type=click.IntRange(1), required=False)
@click.option("--base", type=click.Choice(sorted(CUBIC_BASES)), default="k33", help="Cubic base of subdivided-cubic")
@click.option("--jumps", type=click.IntRange(1), multiple=True, help="Circulant jumps, repeatable")
@click.option("--profile", type=click.Choice([p.value for p in Profile]), default=Profile.Tree.value, help="Random fixture profile")
@click.option("--seed", type=click.INT, default=0, help="Random fixture seed")
@click.pass_context
@graceful_exit
def gen(ctx: click.Context, family: str, n: int | None, base: str, jumps: tuple[int, ...], profile: str, seed: int) -> None:
    """
    Write a graph of a named family as an edge list
    """
    match family:
        case "wheel":
            g = wheel(n or 4)
        case "subdivided-cubic":
            g = subdivided_cubic_graph(base)
        case "star-obstruction":
            g = star_obstruction_graph()
        case "circulant":
            if n is None or not jumps:
                raise PreconditionError("circulant needs an order and at least one --jumps")
            g = circulant(n, jumps)
        case _:
            g = random_fixture(profile, seed, ctx.obj.fixture_attempts)
    click.echo(format_graph(g), nl=False)


@cli.command("export-dot")
@click.argument("graph", type=GRAPH_PATH)
@click.option("--coloring", type=GRAPH_PATH, default=None, help="Coloring file drawn as edge colors")
@graceful_exit
def export_dot_command(graph: Path, coloring: Path | None) -> None:
    """
    Graphviz DOT text of a graph
    """
    g = read_graph(graph)
    assignment = read_coloring(coloring) if coloring else None
    click.echo(export_dot(g, assignment), nl=False)


@cli.command()
@click.argument("input_dir", type=click.Path(exists=True, file_okay=False, readable=True, path_type=Path))
@click.option(
    "-m",
    "--method",
    type=click.Choice([m.value for m in Method]),
    default=Method.Auto.value,
    help="Coloring procedure"
)
@click.option("-j", "--jobs", type=click.IntRange(1, 64), default=None, help="Num parallel workers")
@click.option("--pattern", type=click.STRING, default="*.txt", help="Glob of graph files")
@click.pass_context
@graceful_exit
def batch(ctx: click.Context, input_dir: Path, method: str, jobs: int | None, pattern: str) -> None:
    """
    Color and verify every graph file of a directory
    """
    config: SolverConfig = ctx.obj
    spec = BatchSpec(
        input_dir=input_dir.resolve(),
        pattern=pattern,
        method=method,
        jobs=jobs or config.jobs,
        search_budget=config.search_budget,
        exact_budget=config.exact_budget,
    )
    logger.info(f"[blue]Run batch with spec:\n{spec.model_dump_json(indent=2)}[/blue]")
    records = run_batch(spec)

    table = Table(title=f"{method} over {input_dir}")
    for column in ("file", "n", "m", "colors", "provenance", "valid", "error"):
        table.add_column(column)
    for r in records:
        table.add_row(
            r.file,
            str(r.vertices if r.vertices is not None else "-"),
            str(r.edges if r.edges is not None else "-"),
            str(r.colors if r.colors is not None else "-"),
            r.provenance or "-",
            "yes" if r.valid else "no",
            r.error or "",
        )
    Console().print(table)
    failed = [r for r in records if r.error]
    for r in failed:
        click.echo(f"{r.file}: exit {r.exit_code}, {r.error}", err=True)
    if failed:
        click.echo(f"{len(failed)} of {len(records)} files failed", err=True)
    if any(r.error and r.exit_code in (1, InternalFault.exit_code) for r in records):
        ctx.exit(1)


if __name__ == "__main__":
    cli()
