"""Leavitt path algebras of finite graphs: lattices, tails and prime spectra.

The package works on the graph alone. Hereditary saturated sets, maximal
tails and cycles without exits determine the prime and primitive ideals of
L_K(E), and whether L_K(E) is prime, primitive or simple.
"""

from leavitt_spectrum.context import Context
from leavitt_spectrum.graph import Edge, Graph, parse_graph, serialize_graph
from leavitt_spectrum.lattice import closure, enumerate_hsat
from leavitt_spectrum.laurent import LaurentPrime, enumerate_laurent_primes, parse_field
from leavitt_spectrum.spectrum import (
    is_prime_algebra,
    is_primitive_algebra,
    is_simple_algebra,
    recognize_algebra,
    spectrum,
)
from leavitt_spectrum.tails import enumerate_maximal_tails

__all__ = [
    "Context",
    "Edge",
    "Graph",
    "LaurentPrime",
    "closure",
    "enumerate_hsat",
    "enumerate_laurent_primes",
    "enumerate_maximal_tails",
    "is_prime_algebra",
    "is_primitive_algebra",
    "is_simple_algebra",
    "parse_field",
    "parse_graph",
    "recognize_algebra",
    "serialize_graph",
    "spectrum",
]
