"""Command-line front end: ``leavitt SUBCOMMAND FILE [OPTIONS]``.

Exit codes: 0 success, 1 a ``check`` that fails, 2 usage or parse error,
3 domain error.
"""

from __future__ import annotations

import json
import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Sequence

import click
import typer
from rich.console import Console
from rich.logging import RichHandler

from leavitt_spectrum.catalog import GRAPH_TEXTS, named_graph
from leavitt_spectrum.constructions import (
    DerivedGraph,
    hedge_graph,
    quotient_graph,
    restriction_graph,
    serialize_derived,
)
from leavitt_spectrum.context import Context
from leavitt_spectrum.errors import DomainError, InputError
from leavitt_spectrum.graph import Graph, parse_graph, serialize_graph, to_dot
from leavitt_spectrum.laurent import FieldSpec, LaurentPrime, parse_field, parse_poly
from leavitt_spectrum.lattice import closure_stages, enumerate_hsat
from leavitt_spectrum.report import (
    build_report,
    build_spectrum_report,
    graph_model,
    render_payload,
    render_report,
    render_spectrum,
    render_tails,
    tail_model,
)
from leavitt_spectrum.spectrum import (
    Verdict,
    is_prime_algebra,
    is_primitive_algebra,
    is_simple_algebra,
)
from leavitt_spectrum.tails import enumerate_maximal_tails

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3


class OutputFormat(str, Enum):
    json = "json"
    text = "text"


class Property(str, Enum):
    prime = "prime"
    primitive = "primitive"
    simple = "simple"


app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Structural classification of Leavitt path algebras of finite graphs.",
)

FileArg = typer.Argument(..., help="Graph file ('vertex NAME' / 'edge NAME SOURCE RANGE' lines)")
FormatOpt = typer.Option(OutputFormat.text, "--format", help="Output format")
SetOpt = typer.Option(..., "--set", help="Comma-separated vertex names")


def _setup_logging(level: str) -> None:
    if not isinstance(logging.getLevelName(level.upper()), int):
        raise typer.BadParameter(f"unknown log level {level!r}", param_hint="--log-level")
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), rich_tracebacks=True)],
        force=True,
    )


@app.callback()
def configure(
    ctx: typer.Context,
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Logging level"),
) -> None:
    """Structural classification of Leavitt path algebras of finite graphs."""
    context = Context(log_level=log_level) if log_level else Context()
    _setup_logging(context.log_level)
    ctx.obj = context


def _context(ctx: typer.Context) -> Context:
    return ctx.obj if isinstance(ctx.obj, Context) else Context()


def _console() -> Console:
    return Console(soft_wrap=True)


def _load(path: Path) -> Graph:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse_graph(text)


def _vertex_set(g: Graph, text: str) -> frozenset[str]:
    names = [name.strip() for name in text.split(",") if name.strip()]
    return g.check_vertices(names)


def _emit(payload: Any, fmt: OutputFormat, text: Optional[str] = None) -> None:
    if fmt is OutputFormat.json:
        typer.echo(json.dumps(payload, indent=2, ensure_ascii=False))
    elif text is not None:
        typer.echo(text, nl=not text.endswith("\n"))
    else:
        render_payload(payload, _console())


def _primes(field: FieldSpec, polys: Optional[list[str]], assert_irreducible: bool):
    if not polys:
        return None
    return [
        LaurentPrime.from_poly(parse_poly(p, field), assert_irreducible=assert_irreducible)
        for p in polys
    ]


@app.command()
def analyze(
    ctx: typer.Context,
    file: Path = FileArg,
    field: Optional[str] = typer.Option(None, "--field", help="'q' or 'gf:P'"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", min=1),
    poly: Optional[list[str]] = typer.Option(None, "--poly", help="Laurent prime generator (repeatable)"),
    assert_irreducible: bool = typer.Option(False, "--assert-irreducible"),
    fmt: OutputFormat = FormatOpt,
) -> None:
    """Print the full structural report of the graph."""
    context = _context(ctx)
    g = _load(file)
    k = parse_field(field or context.default_field)
    degree = max_degree or context.default_max_degree
    report = build_report(
        g, k, degree, primes=_primes(k, poly, assert_irreducible), context=context
    )
    data = report.model_dump(mode="json")
    if fmt is OutputFormat.json:
        _emit(data, fmt)
    else:
        render_report(data, _console())


_CHECKS = {
    Property.prime: lambda g, context: is_prime_algebra(g),
    Property.primitive: lambda g, context: is_primitive_algebra(g),
    Property.simple: lambda g, context: is_simple_algebra(g, context=context),
}


@app.command()
def check(
    ctx: typer.Context,
    prop: Property = typer.Argument(..., metavar="prime|primitive|simple"),
    file: Path = FileArg,
    fmt: OutputFormat = FormatOpt,
) -> None:
    """Decide whether L_K(E) is prime, primitive or simple; exit 1 when it is not."""
    g = _load(file)
    verdict: Verdict = _CHECKS[prop](g, _context(ctx))
    witness = verdict.witness
    if fmt is OutputFormat.json:
        _emit(
            {
                "property": prop.value,
                "holds": verdict.holds,
                "witness": witness.to_dict() if witness else None,
                "reason": witness.describe() if witness else None,
            },
            fmt,
        )
    elif not verdict.holds:
        typer.echo(f"not {prop.value}: {witness.describe()}")
    if not verdict.holds:
        raise typer.Exit(EXIT_CHECK_FAILED)


@app.command()
def tails(ctx: typer.Context, file: Path = FileArg, fmt: OutputFormat = FormatOpt) -> None:
    """List the maximal tails with their kind."""
    g = _load(file)
    data = [tail_model(t).model_dump(mode="json") for t in enumerate_maximal_tails(g, context=_context(ctx))]
    if fmt is OutputFormat.json:
        _emit({"maximal_tails": data}, fmt)
    else:
        render_tails(data, _console())


@app.command()
def closure(file: Path = FileArg, vertices: str = SetOpt, fmt: OutputFormat = FormatOpt) -> None:
    """Print the hereditary saturated closure of a vertex set and its stages."""
    g = _load(file)
    X = _vertex_set(g, vertices)
    stages = closure_stages(g, X)
    _emit(
        {
            "set": sorted(X),
            "closure": sorted(stages[-1]),
            "stages": [sorted(stage) for stage in stages],
        },
        fmt,
    )


@app.command()
def hsat(ctx: typer.Context, file: Path = FileArg, fmt: OutputFormat = FormatOpt) -> None:
    """List every hereditary saturated subset."""
    g = _load(file)
    lattice = enumerate_hsat(g, context=_context(ctx))
    _emit({"hsat": [sorted(H) for H in lattice]}, fmt)


def _derived_payload(d: DerivedGraph) -> dict[str, Any]:
    return {
        "graph": graph_model(d.graph).model_dump(mode="json"),
        "provenance": d.provenance,
        "name_map": {
            name: list(origin) if isinstance(origin, tuple) else origin
            for name, origin in d.name_map.items()
        },
    }


@app.command()
def quotient(file: Path = FileArg, vertices: str = SetOpt, fmt: OutputFormat = FormatOpt) -> None:
    """Print the quotient graph E/H for a hereditary H."""
    g = _load(file)
    d = quotient_graph(g, _vertex_set(g, vertices))
    _emit(_derived_payload(d), fmt, serialize_derived(d))


@app.command()
def restrict(file: Path = FileArg, vertices: str = SetOpt, fmt: OutputFormat = FormatOpt) -> None:
    """Print the restriction graph E_H for a hereditary H."""
    g = _load(file)
    d = restriction_graph(g, _vertex_set(g, vertices))
    _emit(_derived_payload(d), fmt, serialize_derived(d))


@app.command()
def hedge(
    ctx: typer.Context,
    file: Path = FileArg,
    vertices: str = SetOpt,
    bound: Optional[int] = typer.Option(None, "--bound", min=1, help="Longest entering path kept"),
    fmt: OutputFormat = FormatOpt,
) -> None:
    """Print the hedge graph over a nonempty hereditary saturated H."""
    g = _load(file)
    h = hedge_graph(
        g, _vertex_set(g, vertices), bound if bound is not None else _context(ctx).hedge_bound
    )
    payload = _derived_payload(h.derived)
    payload.update(finite=h.finite, truncated=h.truncated)
    text = serialize_derived(h.derived)
    if h.truncated:
        text = "# truncated: entering paths longer than the bound were left out\n" + text
    _emit(payload, fmt, text)


@app.command("spectrum")
def spectrum_command(
    ctx: typer.Context,
    file: Path = FileArg,
    field: Optional[str] = typer.Option(None, "--field", help="'q' or 'gf:P'"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", min=1),
    poly: Optional[list[str]] = typer.Option(None, "--poly", help="Laurent prime generator (repeatable)"),
    assert_irreducible: bool = typer.Option(False, "--assert-irreducible"),
    fmt: OutputFormat = FormatOpt,
) -> None:
    """List the prime ideals of L_K(E)."""
    context = _context(ctx)
    g = _load(file)
    k = parse_field(field or context.default_field)
    degree = max_degree or context.default_max_degree
    report = build_spectrum_report(
        g, k, degree, primes=_primes(k, poly, assert_irreducible), context=context
    )
    data = report.model_dump(mode="json")
    if fmt is OutputFormat.json:
        _emit(data, fmt)
    else:
        render_spectrum(data, _console())


@app.command()
def dot(file: Path = FileArg) -> None:
    """Export the graph as Graphviz DOT source."""
    typer.echo(to_dot(_load(file)), nl=False)


@app.command()
def catalog(
    name: str = typer.Argument(..., help=f"One of {', '.join(GRAPH_TEXTS)}"),
) -> None:
    """Print a named reference graph in the graph file format."""
    typer.echo(serialize_graph(named_graph(name)), nl=False)


def _click_classes(name: str, *roots: type) -> tuple[type, ...]:
    """Collect ``name`` from the click package and from the copy typer may bundle."""
    found = {getattr(click.exceptions, name)}
    for root in roots:
        found.update(cls for cls in root.__mro__ if cls.__name__ == name)
    return tuple(found)


# typer releases that vendor click raise their own exception classes
USAGE_ERRORS = _click_classes("ClickException", typer.BadParameter)
ABORTS = _click_classes("Abort", getattr(typer, "Abort", click.Abort))


def _error(message: str) -> None:
    typer.echo(f"error: {message}", err=True)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Run the command line and return its exit code."""
    command = typer.main.get_command(app)
    try:
        result = command.main(
            args=list(argv) if argv is not None else None,
            prog_name="leavitt",
            standalone_mode=False,
        )
    except USAGE_ERRORS as exc:
        exc.show()
        return EXIT_USAGE
    except ABORTS:
        _error("aborted")
        return EXIT_USAGE
    except InputError as exc:
        _error(str(exc))
        return EXIT_USAGE
    except DomainError as exc:
        _error(str(exc))
        return EXIT_DOMAIN
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(run())


__all__ = ["app", "main", "run"]
