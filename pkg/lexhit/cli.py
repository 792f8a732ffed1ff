"""
Command-line interface for the lexhit package.
"""

import functools
import json
import logging
import sys
from typing import Any, Callable, Optional

import click

from . import __version__
from .config import Settings
from .core.hypergraph import rank
from .exceptions import BoundViolationError, LexHitError
from .models.enumeration import RunReport
from .models.families import EmitKind
from .models.sets import VertexSet
from .session import HypergraphSession

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

_LEVELS = click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False)
_stderr_handler: Optional[logging.Handler] = None


def _configure_logging(level: str) -> None:
    global _stderr_handler
    package_logger = logging.getLogger("lexhit")
    if _stderr_handler is not None:
        package_logger.removeHandler(_stderr_handler)
    _stderr_handler = logging.StreamHandler(sys.stderr)
    _stderr_handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    package_logger.addHandler(_stderr_handler)
    package_logger.setLevel(level.upper())


def _handle_errors(func: Callable[..., Any]) -> Callable[..., Any]:
    """Report library errors on stderr and exit 1 for bound failures, 2 otherwise."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except BoundViolationError as e:
            click.echo(f"error: {e.message}", err=True)
            sys.exit(EXIT_NEGATIVE)
        except LexHitError as e:
            click.echo(f"error: {e.message}", err=True)
            sys.exit(EXIT_ERROR)

    return wrapper


def _open(ctx: click.Context, path: str, minimize_edges: bool = False) -> HypergraphSession:
    return HypergraphSession.from_file(path, ctx.obj, minimize_edges=minimize_edges)


def _line(session: HypergraphSession, vs: VertexSet) -> str:
    return " ".join(session.names(vs))


def _dump_report(report: Any) -> str:
    return json.dumps(report.model_dump(mode="json"), sort_keys=True)


file_argument = click.argument("file", type=click.Path(dir_okay=False))
minimize_option = click.option(
    "--minimize-edges",
    is_flag=True,
    help="Drop edges that are proper supersets of other edges before running.",
)


@click.group()
@click.option(
    "--log-level",
    type=_LEVELS,
    default=None,
    help="Log level for messages on stderr (default: $LEXHIT_LOG_LEVEL or WARNING).",
)
@click.version_option(version=__version__)
@click.pass_context
@_handle_errors
def main(ctx: click.Context, log_level: Optional[str]) -> None:
    """
    Enumerate minimal hitting sets in lexicographic order.

    \b
    Exit codes:
      0  success, or a true verdict
      1  false verdict, no transversal (lexmin/lexmax), failed verification or bound
      2  usage, parse or brute-force cap error
    """
    settings = Settings.from_env().with_overrides(log_level=log_level)
    _configure_logging(settings.log_level)
    ctx.obj = settings


@main.command("enumerate")
@file_argument
@click.option("--limit", type=click.IntRange(min=0), default=None, help="Stop after N outputs.")
@click.option("--json", "as_json", is_flag=True, help="Emit one JSON record per line.")
@click.option("--stats", is_flag=True, help="Write a run report to stderr when done.")
@minimize_option
@click.pass_context
@_handle_errors
def enumerate_command(
    ctx: click.Context,
    file: str,
    limit: Optional[int],
    as_json: bool,
    stats: bool,
    minimize_edges: bool,
) -> None:
    """Print the minimal transversals of FILE in lex-ascending order, one per line."""
    session = _open(ctx, file, minimize_edges)
    enumerator = session.enumeration.enumerator()
    produced = 0
    for solution in enumerator if limit != 0 else ():
        if as_json:
            record = {"index": produced, "vertices": session.names(solution)}
            click.echo(json.dumps(record))
        else:
            click.echo(_line(session, solution))
        produced += 1
        if produced == limit:
            break

    if produced == 0 and limit != 0 and enumerator.stats.complete:
        click.echo("no transversal exists", err=True)
    if stats:
        h = session.hypergraph
        report = RunReport.from_stats(h.n, h.m, rank(h), [enumerator.stats])
        click.echo(_dump_report(report), err=True)


@main.command()
@file_argument
@minimize_option
@click.pass_context
@_handle_errors
def lexmin(ctx: click.Context, file: str, minimize_edges: bool) -> None:
    """Print the lex-smallest minimal transversal of FILE."""
    session = _open(ctx, file, minimize_edges)
    solution = session.enumeration.lex_smallest()
    if solution is None:
        click.echo("no transversal exists", err=True)
        sys.exit(EXIT_NEGATIVE)
    click.echo(_line(session, solution))


@main.command()
@file_argument
@minimize_option
@click.pass_context
@_handle_errors
def lexmax(ctx: click.Context, file: str, minimize_edges: bool) -> None:
    """Print the lex-largest minimal transversal of FILE."""
    session = _open(ctx, file, minimize_edges)
    solution = session.enumeration.lex_largest()
    if solution is None:
        click.echo("no transversal exists", err=True)
        sys.exit(EXIT_NEGATIVE)
    click.echo(_line(session, solution))


@main.command()
@file_argument
@minimize_option
@click.pass_context
@_handle_errors
def count(ctx: click.Context, file: str, minimize_edges: bool) -> None:
    """Print the number of minimal transversals of FILE."""
    click.echo(str(_open(ctx, file, minimize_edges).enumeration.count()))


include_option = click.option(
    "--include", default="", help="Vertices to contain, comma or space separated."
)
exclude_option = click.option(
    "--exclude", default="", help="Vertices to avoid, comma or space separated."
)


@main.command()
@file_argument
@include_option
@exclude_option
@click.option("--stats", is_flag=True, help="Write oracle work counters to stderr.")
@click.pass_context
@_handle_errors
def extend(ctx: click.Context, file: str, include: str, exclude: str, stats: bool) -> None:
    """Print true if --include extends to a minimal transversal avoiding --exclude."""
    session = _open(ctx, file)
    result = session.extension.decide(include, exclude)
    click.echo("true" if result.value else "false")
    if stats:
        click.echo(_dump_report(result), err=True)
    if not result.value:
        sys.exit(EXIT_NEGATIVE)


@main.command()
@file_argument
@include_option
@exclude_option
@click.option(
    "--emit",
    type=click.Choice([kind.value for kind in EmitKind]),
    default=EmitKind.MCIF.value,
    show_default=True,
    help="Which artifact of the reduction chain to print.",
)
@click.option(
    "--punctured", is_flag=True, help="Drop the include vertex from its candidate edges."
)
@click.pass_context
@_handle_errors
def reduce(
    ctx: click.Context, file: str, include: str, exclude: str, emit: str, punctured: bool
) -> None:
    """Print the extension query as an Independent Family instance, circuit or formula."""
    session = _open(ctx, file)
    click.echo(session.reductions.emit(EmitKind(emit), include, exclude, punctured), nl=False)


@main.command()
@file_argument
@click.option(
    "--max-n",
    type=click.IntRange(min=0),
    default=None,
    help="Largest vertex count to brute-force (default: $LEXHIT_BRUTEFORCE_CAP or 20).",
)
@click.pass_context
@_handle_errors
def verify(ctx: click.Context, file: str, max_n: Optional[int]) -> None:
    """Check the enumeration of FILE against brute force."""
    ctx.obj = ctx.obj.with_overrides(bruteforce_cap=max_n)
    report = _open(ctx, file).reference.verify()
    click.echo(f"equal: {'yes' if report.equal else 'no'}")
    click.echo(f"ordered: {'yes' if report.ordered else 'no'}")
    click.echo(f"bounds: {'ok' if report.bounds_ok else report.bound_error}")
    click.echo(f"transversals: {report.produced} (expected {report.expected})")
    click.echo("PASS" if report.passed else "FAIL")
    if not report.passed:
        sys.exit(EXIT_NEGATIVE)


@main.command()
@file_argument
@click.option("--repeat", type=click.IntRange(min=1), default=1, show_default=True)
@minimize_option
@click.pass_context
@_handle_errors
def bench(ctx: click.Context, file: str, repeat: int, minimize_edges: bool) -> None:
    """Run the full enumeration REPEAT times and print a JSON run report."""
    report = _open(ctx, file, minimize_edges).enumeration.bench(repeat)
    click.echo(json.dumps(report.model_dump(mode="json"), indent=2, sort_keys=True))


if __name__ == "__main__":
    main()
