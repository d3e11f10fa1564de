"""JSON report models and their text rendering."""

from __future__ import annotations

from typing import Annotated, Any, Literal, Optional, Union

from pydantic import BaseModel, Field
from rich.console import Console
from rich.panel import Panel
from rich.table import Table
from rich.text import Text

from leavitt_spectrum.context import Context
from leavitt_spectrum.graph import Graph
from leavitt_spectrum.laurent import FieldSpec, LaurentPrime, Rationals
from leavitt_spectrum.spectrum import (
    GradedPrime,
    PrimeIdealDescriptor,
    Verdict,
    is_prime_algebra,
    is_primitive_algebra,
    is_simple_algebra,
    recognize_algebra,
    spectrum,
)
from leavitt_spectrum.tails import MaximalTail, enumerate_maximal_tails

SYMBOLIC_Q = "M_tau tails x Spec(Q[x,x^-1])* (infinite)"


class EdgeModel(BaseModel):
    """One edge of the analysed graph."""

    name: str
    source: str
    range: str


class GraphModel(BaseModel):
    """The analysed graph."""

    vertices: list[str]
    edges: list[EdgeModel]


class TailModel(BaseModel):
    """A maximal tail."""

    members: list[str]
    kind: Literal["gamma", "tau"]
    no_exit_cycle: Optional[list[str]] = Field(
        default=None, description="Edge names of the cycle without exits in the tail"
    )


class GradedEntry(BaseModel):
    """A graded prime I(H)."""

    type: Literal["graded"] = "graded"
    H: list[str]
    tail: list[str]


class NonGradedEntry(BaseModel):
    """A nongraded prime over a tau tail."""

    type: Literal["nongraded"] = "nongraded"
    H: list[str]
    tail: list[str]
    polynomial: str
    mu: list[str] = Field(description="Edge names of the exitless cycle of the quotient graph")
    mu_closure: list[str]
    matrix_size: Union[int, Literal["infinite"]]


SpectrumEntry = Annotated[Union[GradedEntry, NonGradedEntry], Field(discriminator="type")]


class RecognizedModel(BaseModel):
    """The recognised isomorphism type of the algebra."""

    tag: str
    label: str
    size: Optional[int] = None
    witness: Optional[dict[str, Any]] = None


class SpectrumReport(BaseModel):
    """Maximal tails and prime ideals of L_K(E)."""

    graph: GraphModel
    field: str
    max_degree: int
    maximal_tails: list[TailModel]
    spectrum: list[SpectrumEntry]
    nongraded_symbolic: Optional[str] = Field(
        default=None,
        description="Set when the nongraded primes form an infinite family that is not listed",
    )


class Report(SpectrumReport):
    """Full structural report on L_K(E)."""

    prime: bool
    primitive: bool
    simple: bool
    witnesses: dict[str, Optional[str]]
    recognized: RecognizedModel


def graph_model(g: Graph) -> GraphModel:
    return GraphModel(
        vertices=list(g.vertices),
        edges=[EdgeModel(name=e.name, source=e.source, range=e.range) for e in g.edges],
    )


def tail_model(t: MaximalTail) -> TailModel:
    cycle = t.no_exit_cycle
    return TailModel(
        members=sorted(t.members),
        kind=t.kind.value,
        no_exit_cycle=list(cycle.edge_names) if cycle else None,
    )


def entry_model(d: PrimeIdealDescriptor) -> Union[GradedEntry, NonGradedEntry]:
    if isinstance(d, GradedPrime):
        return GradedEntry(H=sorted(d.H), tail=sorted(d.tail.members))
    return NonGradedEntry(
        H=sorted(d.H),
        tail=sorted(d.tail.members),
        polynomial=str(d.prime),
        mu=list(d.structure.mu.edge_names),
        mu_closure=sorted(d.structure.mu_closure),
        matrix_size=d.structure.matrix_size,
    )


def build_spectrum_report(
    g: Graph,
    k: FieldSpec,
    max_degree: int,
    *,
    primes: Optional[list[LaurentPrime]] = None,
    context: Optional[Context] = None,
) -> SpectrumReport:
    """Compute the tails and the prime spectrum of ``g`` as a report model."""
    return SpectrumReport(**_spectrum_fields(g, k, max_degree, primes, context))


def _spectrum_fields(g, k, max_degree, primes, context) -> dict[str, Any]:
    tails = enumerate_maximal_tails(g, context=context)
    symbolic = None
    if isinstance(k, Rationals) and primes is None and any(t.kind.value == "tau" for t in tails):
        symbolic = SYMBOLIC_Q
    return {
        "graph": graph_model(g),
        "field": str(k),
        "max_degree": max_degree,
        "maximal_tails": [tail_model(t) for t in tails],
        "spectrum": [
            entry_model(d) for d in spectrum(g, k, max_degree, primes=primes, context=context)
        ],
        "nongraded_symbolic": symbolic,
    }


def _describe(verdict: Verdict) -> Optional[str]:
    return verdict.witness.describe() if verdict.witness is not None else None


def build_report(
    g: Graph,
    k: FieldSpec,
    max_degree: int,
    *,
    primes: Optional[list[LaurentPrime]] = None,
    context: Optional[Context] = None,
) -> Report:
    """Compute the full structural report of ``g``."""
    prime = is_prime_algebra(g)
    primitive = is_primitive_algebra(g)
    simple = is_simple_algebra(g, context=context)
    algebra = recognize_algebra(g)
    return Report(
        **_spectrum_fields(g, k, max_degree, primes, context),
        prime=prime.holds,
        primitive=primitive.holds,
        simple=simple.holds,
        witnesses={
            "prime": _describe(prime),
            "primitive": _describe(primitive),
            "simple": _describe(simple),
        },
        recognized=RecognizedModel(
            tag=algebra.kind.value,
            label=algebra.label,
            size=algebra.size,
            witness=algebra.witness,
        ),
    )


def report_schema() -> dict[str, Any]:
    """Return the JSON Schema of :class:`Report`."""
    return Report.model_json_schema()


def _set(names: list[str]) -> str:
    return "{" + ", ".join(names) + "}"


def render_tails(maximal_tails: list[dict[str, Any]], console: Console) -> None:
    tails = Table(title="Maximal tails")
    tails.add_column("M")
    tails.add_column("kind")
    tails.add_column("cycle without exits in M")
    for t in maximal_tails:
        cycle = t.get("no_exit_cycle")
        tails.add_row(_set(t["members"]), t["kind"], "(" + " ".join(cycle) + ")" if cycle else "-")
    console.print(tails)


def render_spectrum(data: dict[str, Any], console: Console) -> None:
    """Print the tails and spectrum parts of a report payload."""
    render_tails(data["maximal_tails"], console)

    primes = Table(title=f"Prime spectrum over {data['field']} (degree <= {data['max_degree']})")
    primes.add_column("type")
    primes.add_column("H")
    primes.add_column("tail")
    primes.add_column("polynomial")
    primes.add_column("n")
    for entry in data["spectrum"]:
        primes.add_row(
            entry["type"],
            _set(entry["H"]),
            _set(entry["tail"]),
            entry.get("polynomial", "-"),
            str(entry.get("matrix_size", "-")),
        )
    console.print(primes)
    if data.get("nongraded_symbolic"):
        console.print(f"nongraded primes: {data['nongraded_symbolic']}", markup=False)


def render_report(data: dict[str, Any], console: Console) -> None:
    """Print a full report payload (``Report.model_dump(mode='json')``)."""
    lines = []
    for name in ("prime", "primitive", "simple"):
        witness = data["witnesses"].get(name)
        suffix = f" ({witness})" if witness else ""
        lines.append(f"{name}: {'yes' if data[name] else 'no'}{suffix}")
    recognized = data["recognized"]
    lines.append(f"algebra: {recognized['label']}")
    console.print(Panel(Text("\n".join(lines)), title="L_K(E)", border_style="blue"))
    render_spectrum(data, console)


def render_payload(data: Any, console: Console) -> None:
    """Print a plain payload of sets, lists and scalars as ``key: value`` lines."""
    if not isinstance(data, dict):
        console.print(str(data), markup=False)
        return
    for key, value in data.items():
        if isinstance(value, list) and value and isinstance(value[0], list):
            console.print(f"{key}:", markup=False)
            for item in value:
                console.print(f"  {_set(item)}", markup=False)
        elif isinstance(value, list):
            console.print(f"{key}: {_set([str(v) for v in value])}", markup=False)
        elif isinstance(value, dict):
            console.print(f"{key}:", markup=False)
            for inner_key, inner in value.items():
                console.print(f"  {inner_key}: {inner}", markup=False)
        else:
            console.print(f"{key}: {value}", markup=False)


__all__ = [
    "GradedEntry",
    "GraphModel",
    "NonGradedEntry",
    "Report",
    "SpectrumReport",
    "TailModel",
    "build_report",
    "build_spectrum_report",
    "entry_model",
    "graph_model",
    "render_payload",
    "render_report",
    "render_spectrum",
    "render_tails",
    "report_schema",
    "tail_model",
]
