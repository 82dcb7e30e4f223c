# proj/src/index/char_class.py
"""
Characteristic classes as truncated polynomials in the Pontryagin classes
p_1, p_2, … (p_i has real degree 4i) of a manifold of dimension 2n with formal
Chern roots x_1 … x_n, where p_i = e_i(x_1², …, x_n²).
"""

import re
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from src.core.exceptions import UsageError

Monomial = Tuple[int, ...]
Number = Union[int, Fraction]

_FACTOR = re.compile(r"^p(\d+)(?:(?:\^|\*\*)(\d+))?$")


@lru_cache(maxsize=None)
def pontryagin_poly_ring(num_generators: int) -> PolyRing:
    names = [f"p{i}" for i in range(1, num_generators + 1)]
    return PolyRing(names, QQ, grlex)


def to_qq(value: Number):
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def monomial_degree(monom: Monomial) -> int:
    return sum(4 * (i + 1) * a for i, a in enumerate(monom))


def format_monomial(monom: Monomial) -> str:
    """Canonical text 'p1^2*p2'; '1' for the empty monomial."""
    factors = []
    for i, a in enumerate(monom):
        if a == 1:
            factors.append(f"p{i + 1}")
        elif a > 1:
            factors.append(f"p{i + 1}^{a}")
    return "*".join(factors) or "1"


def parse_monomial(text: str, num_generators: int) -> Monomial:
    """
    Parse 'p1^2*p2' (also 'p1**2', spaces ignored) into an exponent tuple

    Raises:
        UsageError: on malformed text or a generator outside p1..p{num_generators}
    """
    exps = [0] * num_generators
    cleaned = text.replace(" ", "")
    if cleaned in ("", "1"):
        return tuple(exps)
    for factor in cleaned.replace("**", "^").split("*"):
        match = _FACTOR.match(factor)
        if not match:
            raise UsageError(f"malformed Pontryagin monomial {text!r}")
        index = int(match.group(1))
        power = int(match.group(2) or 1)
        if not 1 <= index <= num_generators:
            raise UsageError(f"generator p{index} outside p1..p{num_generators} in {text!r}")
        exps[index - 1] += power
    return tuple(exps)


def monomials_of_degree(num_generators: int, degree: int) -> List[Monomial]:
    """Pontryagin monomials of exact real degree, in descending graded order."""
    out: List[Monomial] = []

    def extend(prefix: List[int], remaining: int, index: int) -> None:
        if index == num_generators:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        weight = 4 * (index + 1)
        for a in range(remaining // weight, -1, -1):
            extend(prefix + [a], remaining - a * weight, index + 1)

    extend([], degree, 0)
    return out


class CharClass:
    """An element of the truncated ring; immutable."""

    __slots__ = ("ring", "poly")

    def __init__(self, ring: "TruncatedPontryaginRing", poly: PolyElement):
        self.ring = ring
        self.poly = ring.truncate(poly)

    def _check(self, other: "CharClass") -> None:
        if other.ring != self.ring:
            raise UsageError(f"classes from different rings: {self.ring} and {other.ring}")

    def _coerce(self, other) -> "CharClass":
        if isinstance(other, CharClass):
            self._check(other)
            return other
        return self.ring.constant(other)

    def __add__(self, other) -> "CharClass":
        return CharClass(self.ring, self.poly + self._coerce(other).poly)

    __radd__ = __add__

    def __sub__(self, other) -> "CharClass":
        return CharClass(self.ring, self.poly - self._coerce(other).poly)

    def __rsub__(self, other) -> "CharClass":
        return self._coerce(other) - self

    def __neg__(self) -> "CharClass":
        return CharClass(self.ring, -self.poly)

    def __mul__(self, other) -> "CharClass":
        if isinstance(other, CharClass):
            self._check(other)
            return CharClass(self.ring, self.poly * other.poly)
        return CharClass(self.ring, self.poly * to_qq(other))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharClass):
            return NotImplemented
        return self.ring == other.ring and self.poly == other.poly

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return not self.poly

    def terms(self) -> Dict[Monomial, Fraction]:
        return {tuple(m): to_fraction(c) for m, c in self.poly.items()}

    def component(self, degree: int) -> "CharClass":
        """The homogeneous part of the given real degree."""
        kept = {m: c for m, c in self.poly.items() if monomial_degree(m) == degree}
        return CharClass(self.ring, self.ring.poly_ring.from_dict(kept))

    def top(self) -> "CharClass":
        return self.component(self.ring.manifold_dim)

    def constant_term(self) -> Fraction:
        return self.coefficient(())

    def coefficient(self, monomial: Union[str, Monomial]) -> Fraction:
        if isinstance(monomial, str):
            monomial = parse_monomial(monomial, self.ring.num_generators)
        monomial = tuple(monomial) + (0,) * (self.ring.num_generators - len(monomial))
        value = self.poly.get(monomial)
        return to_fraction(value) if value is not None else Fraction(0)

    def pair(self, numbers: Dict[Monomial, Fraction]) -> Fraction:
        """Σ coefficient · number over the monomials of the top-degree part."""
        total = Fraction(0)
        for monom, coeff in self.top().terms().items():
            total += coeff * numbers.get(monom, Fraction(0))
        return total

    def to_string(self) -> str:
        """Canonical form, e.g. '7/5760*p1^2 - 1/1440*p2'; '0' when zero."""
        parts = []
        ordered = sorted(self.terms().items(), key=lambda t: (-monomial_degree(t[0]), tuple(-a for a in t[0])))
        for monom, coeff in ordered:
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            name = format_monomial(monom)
            if name == "1":
                body = str(mag)
            elif mag == 1:
                body = name
            else:
                body = f"{mag}*{name}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"CharClass({self.to_string()})"


class TruncatedPontryaginRing:
    """
    Polynomials in p_1 … p_K over ℚ modulo real degree > max_degree, for n
    formal Chern roots. K = min(n, max_degree // 4); p_i with i > n vanish.
    """

    def __init__(self, num_roots: int, max_degree: int):
        if num_roots < 1 or max_degree < 0:
            raise UsageError(f"invalid truncated ring ({num_roots} roots, degree {max_degree})")
        self.num_roots = num_roots
        self.max_degree = max_degree
        self.num_generators = max(1, min(num_roots, max_degree // 4))
        self.poly_ring = pontryagin_poly_ring(self.num_generators)
        self._power_sums: Dict[int, CharClass] = {}

    @classmethod
    def for_manifold(cls, dim: int) -> "TruncatedPontryaginRing":
        return cls(dim // 2, dim)

    @property
    def manifold_dim(self) -> int:
        return 2 * self.num_roots

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedPontryaginRing):
            return NotImplemented
        return (self.num_roots, self.max_degree) == (other.num_roots, other.max_degree)

    def __hash__(self) -> int:
        return hash((self.num_roots, self.max_degree))

    def __repr__(self) -> str:
        return f"TruncatedPontryaginRing(roots={self.num_roots}, degree≤{self.max_degree})"

    def truncate(self, poly: PolyElement) -> PolyElement:
        if all(monomial_degree(m) <= self.max_degree for m in poly.keys()):
            return poly
        return self.poly_ring.from_dict({m: c for m, c in poly.items() if monomial_degree(m) <= self.max_degree})

    def zero(self) -> CharClass:
        return CharClass(self, self.poly_ring.zero)

    def constant(self, value: Number) -> CharClass:
        return CharClass(self, self.poly_ring.ground_new(to_qq(value)))

    def from_terms(self, terms: Dict[Monomial, Number]) -> CharClass:
        return CharClass(self, self.poly_ring.from_dict({m: to_qq(c) for m, c in terms.items() if c}))

    def generator(self, i: int) -> CharClass:
        """p_i (1-based); zero above the number of roots or the truncation."""
        if i < 1:
            raise UsageError(f"Pontryagin index must be ≥ 1, got {i}")
        if i > self.num_generators:
            return self.zero()
        return CharClass(self, self.poly_ring.gens[i - 1])

    def power_sum(self, k: int) -> CharClass:
        """
        P_k = Σ_i x_i^{2k} through Newton's identities in p_i = e_i(x²):
        P_k = Σ_{i<k} (−1)^{i−1} p_i P_{k−i} + (−1)^{k−1} k p_k.
        """
        if k < 1:
            raise UsageError(f"power sums start at 1, got {k}")
        if k not in self._power_sums:
            total = self.generator(k) * ((-1) ** (k - 1) * k)
            for i in range(1, k):
                total = total + self.generator(i) * self.power_sum(k - i) * ((-1) ** (i - 1))
            self._power_sums[k] = total
        return self._power_sums[k]

    def additive(self, coefficients: Dict[int, Number], rank: Number = 0) -> CharClass:
        """rank + Σ_k c_k P_k for the even series Σ_i f(x_i) with f = Σ c_k z^{2k}."""
        total = self.constant(rank)
        for k, c in coefficients.items():
            if c and 4 * k <= self.max_degree:
                total = total + self.power_sum(k) * c
        return total

    def exp(self, value: CharClass) -> CharClass:
        """exp of a class with zero constant term."""
        if value.constant_term() != 0:
            raise UsageError("exp needs a class without constant term")
        total = self.constant(1)
        term = self.constant(1)
        for t in range(1, self.max_degree // 4 + 1):
            term = term * value * Fraction(1, t)
            if term.is_zero():
                break
            total = total + term
        return total

    def multiplicative(self, log_coefficients: Dict[int, Number]) -> CharClass:
        """Π_i Q(x_i) where log Q(x) = Σ_k a_k x^{2k}."""
        return self.exp(self.additive(log_coefficients))

    def degrees(self) -> Iterable[int]:
        return range(0, self.max_degree + 1, 4)


def class_from_strings(ring: TruncatedPontryaginRing, terms: Dict[str, Number]) -> CharClass:
    return ring.from_terms({parse_monomial(k, ring.num_generators): v for k, v in terms.items()})

