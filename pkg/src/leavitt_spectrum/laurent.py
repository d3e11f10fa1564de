"""Polynomials over ℚ and GF(p) and the nonzero primes of K[x,x⁻¹].

Every nonzero prime ideal of the Laurent polynomial ring K[x,x⁻¹] is
maximal and generated by an irreducible polynomial. Since the units of
K[x,x⁻¹] are the λxᵏ, each such prime has a unique generator that is monic,
irreducible and has nonzero constant term; :class:`LaurentPrime` holds it.
"""

from __future__ import annotations

import logging
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Union

from sympy import divisors, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_rem

from leavitt_spectrum.errors import (
    InputError,
    NotEnumerableError,
    PolynomialFormatError,
    PreconditionError,
    UndecidedError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Rationals:
    """The field ℚ."""

    def element(self, value: Union[int, Fraction]) -> Fraction:
        return Fraction(value)

    def __str__(self) -> str:
        return "q"


@dataclass(frozen=True)
class PrimeField:
    """The field GF(p) for a prime p."""

    p: int

    def __post_init__(self):
        """Reject composite characteristics."""
        if not isprime(self.p):
            raise PreconditionError(f"{self.p} is not prime")

    def element(self, value: Union[int, Fraction]) -> int:
        if isinstance(value, Fraction):
            if value.denominator != 1:
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            value = value.numerator
        return int(value) % self.p

    def __str__(self) -> str:
        return f"gf:{self.p}"


FieldSpec = Union[Rationals, PrimeField]


def parse_field(text: str) -> FieldSpec:
    """Parse ``q`` or ``gf:P``."""
    text = text.strip().lower()
    if text in ("q", "qq", "rationals"):
        return Rationals()
    match = re.fullmatch(r"gf:(\d+)", text)
    if not match:
        raise InputError(f"unknown field {text!r}; expected 'q' or 'gf:P'")
    try:
        return PrimeField(int(match.group(1)))
    except PreconditionError as exc:
        raise InputError(f"field {text!r}: {exc}") from exc


@dataclass(frozen=True)
class Poly:
    """A polynomial over ``field``, coefficients listed constant term first.

    Coefficients are reduced into the field and trailing zeros dropped, so
    the zero polynomial has no coefficients.
    """

    coeffs: tuple
    field: FieldSpec

    def __post_init__(self):
        """Normalise coefficients."""
        values = [self.field.element(c) for c in self.coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "coeffs", tuple(values))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.element(0)

    @property
    def constant(self):
        return self.coeffs[0] if self.coeffs else self.field.element(0)

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.leading == 1

    def over(self, field: FieldSpec) -> Poly:
        return self if field == self.field else Poly(self.coeffs, field)

    def monic(self) -> Poly:
        if not self.coeffs:
            raise PreconditionError("the zero polynomial has no monic associate")
        if isinstance(self.field, PrimeField):
            inverse = pow(self.leading, -1, self.field.p)
            return Poly(tuple(c * inverse for c in self.coeffs), self.field)
        return Poly(tuple(c / self.leading for c in self.coeffs), self.field)

    def strip_x(self) -> Poly:
        """Divide out the largest power of x dividing the polynomial."""
        coeffs = list(self.coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        return Poly(tuple(coeffs), self.field)

    def high_first(self) -> list:
        return list(reversed(self.coeffs))

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(f: Poly) -> str:
    """Render ``f`` as e.g. ``x^3+x+1`` or ``x^2-1/2*x+3``."""
    if not f.coeffs:
        return "0"
    parts = []
    for degree in range(f.degree, -1, -1):
        c = f.coeffs[degree]
        if c == 0:
            continue
        negative = isinstance(f.field, Rationals) and c < 0
        magnitude = -c if negative else c
        if degree == 0:
            term = str(magnitude)
        else:
            power = "x" if degree == 1 else f"x^{degree}"
            term = power if magnitude == 1 else f"{magnitude}*{power}"
        sign = "-" if negative else "+"
        parts.append(("-" if negative else "") + term if not parts else sign + term)
    return "".join(parts)


_TERM = re.compile(r"(?P<coef>\d+(?:/\d+)?)?(?P<star>\*)?(?P<x>x(?:\^(?P<exp>\d+))?)?")


def parse_poly(text: str, field: FieldSpec) -> Poly:
    """Parse a polynomial such as ``x^3+x+1`` or ``1/2*x^2-3`` over ``field``."""
    compact = text.replace(" ", "")
    tokens = re.findall(r"[+-]?[^+-]+", compact)
    if not tokens or "".join(tokens) != compact:
        raise PolynomialFormatError(f"cannot parse polynomial {text!r}")
    terms: dict[int, Fraction] = {}
    for token in tokens:
        negative = token.startswith("-")
        body = token.lstrip("+-")
        match = _TERM.fullmatch(body)
        if not body or not match or not (match.group("coef") or match.group("x")):
            raise PolynomialFormatError(f"cannot parse term {token!r} of {text!r}")
        if match.group("star") and not (match.group("coef") and match.group("x")):
            raise PolynomialFormatError(f"misplaced '*' in term {token!r}")
        try:
            coef = Fraction(match.group("coef")) if match.group("coef") else Fraction(1)
        except ZeroDivisionError as exc:
            raise PolynomialFormatError(f"zero denominator in term {token!r}") from exc
        if isinstance(field, PrimeField) and coef.denominator != 1:
            raise PolynomialFormatError(f"fractional coefficient {coef} over {field}")
        if isinstance(field, PrimeField) and coef >= field.p:
            raise PolynomialFormatError(
                f"coefficient {coef} outside 0..{field.p - 1} over {field}"
            )
        if match.group("x"):
            degree = int(match.group("exp")) if match.group("exp") else 1
        else:
            degree = 0
        terms[degree] = terms.get(degree, Fraction(0)) + (-coef if negative else coef)
    top = max(terms)
    return Poly(tuple(terms.get(d, 0) for d in range(top + 1)), field)


def _monic_polys(p: int, degree: int) -> Iterable[list[int]]:
    """Yield monic polynomials of ``degree`` over GF(p), high coefficient first."""
    for lower in product(range(p), repeat=degree):
        yield [1, *lower]


def _irreducible_mod_p(f: Poly, p: int) -> bool:
    target = ZZ.map(f.high_first())
    for degree in range(1, f.degree // 2 + 1):
        for divisor in _monic_polys(p, degree):
            if not gf_rem(target, ZZ.map(divisor), p, ZZ):
                return False
    return True


def _integer_primitive(f: Poly) -> list[int]:
    scale = math.lcm(*(Fraction(c).denominator for c in f.coeffs))
    ints = [int(Fraction(c) * scale) for c in f.coeffs]
    content = math.gcd(*ints)
    return [c // content for c in ints]


def _has_rational_root(ints: Sequence[int]) -> bool:
    if ints[0] == 0:
        return True
    for a in divisors(abs(ints[0])):
        for b in divisors(abs(ints[-1])):
            for candidate in (Fraction(a, b), Fraction(-a, b)):
                value = Fraction(0)
                for c in reversed(ints):
                    value = value * candidate + c
                if value == 0:
                    return True
    return False


def is_irreducible(f: Poly, k: FieldSpec, *, assert_irreducible: bool = False) -> bool:
    """Decide irreducibility of ``f`` over ``k``.

    Over GF(p) by trial division by every monic polynomial of degree at most
    deg(f)/2. Over ℚ degree 1 is irreducible and degrees 2 and 3 are
    irreducible exactly when there is no rational root; higher degrees are
    only accepted with ``assert_irreducible``.

    Raises:
        PreconditionError: if deg f < 1.
        UndecidedError: over ℚ for degree above 3 without the assertion flag.
    """
    f = f.over(k)
    if f.degree < 1:
        raise PreconditionError(f"irreducibility needs degree at least 1, got {f}")
    if isinstance(k, PrimeField):
        return _irreducible_mod_p(f, k.p)
    if f.degree == 1:
        return True
    if f.degree <= 3:
        return not _has_rational_root(_integer_primitive(f))
    if assert_irreducible:
        logger.debug(f"Irreducibility of {f} over Q asserted by caller")
        return True
    raise UndecidedError(f"cannot decide irreducibility of degree {f.degree} polynomial {f} over Q")


@dataclass(frozen=True)
class LaurentPrime:
    """A nonzero prime of K[x,x⁻¹] through its normalised generator."""

    generator: Poly

    def __post_init__(self):
        """Check the normal form."""
        g = self.generator
        if g.degree < 1 or not g.is_monic or g.constant == 0:
            raise PreconditionError(
                f"{g} is not monic of positive degree with nonzero constant term"
            )

    @classmethod
    def from_poly(cls, f: Poly, *, assert_irreducible: bool = False) -> LaurentPrime:
        """Normalise ``f`` up to units λxᵏ and check that it generates a prime.

        Raises:
            PreconditionError: if ``f`` is a unit of K[x,x⁻¹] or reducible.
        """
        g = f.strip_x()
        if g.degree < 1:
            raise PreconditionError(f"{f} is a unit of the Laurent polynomial ring")
        g = g.monic()
        if not is_irreducible(g, g.field, assert_irreducible=assert_irreducible):
            raise PreconditionError(f"{f} is reducible over {g.field}")
        return cls(g)

    @property
    def degree(self) -> int:
        return self.generator.degree

    def sort_key(self) -> tuple:
        return self.degree, tuple(self.generator.high_first())

    def __str__(self) -> str:
        return format_poly(self.generator)


def enumerate_laurent_primes(k: FieldSpec, max_degree: int) -> list[LaurentPrime]:
    """List the primes of K[x,x⁻¹] with generator degree at most ``max_degree``.

    Ordered by degree, then lexicographically by coefficients from the
    leading one down.

    Raises:
        NotEnumerableError: over ℚ, where there are infinitely many.
    """
    if isinstance(k, Rationals):
        raise NotEnumerableError("the nonzero primes of Q[x,x^-1] cannot be enumerated")
    if max_degree < 1:
        raise PreconditionError("max_degree must be positive")
    primes = []
    for degree in range(1, max_degree + 1):
        for high in _monic_polys(k.p, degree):
            if high[-1] == 0:
                continue
            f = Poly(tuple(reversed(high)), k)
            if _irreducible_mod_p(f, k.p):
                primes.append(LaurentPrime(f))
    logger.debug(f"{len(primes)} Laurent primes over {k} up to degree {max_degree}")
    return primes


__all__ = [
    "FieldSpec",
    "LaurentPrime",
    "Poly",
    "PrimeField",
    "Rationals",
    "enumerate_laurent_primes",
    "format_poly",
    "is_irreducible",
    "parse_field",
    "parse_poly",
]
