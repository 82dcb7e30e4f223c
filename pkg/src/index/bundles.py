# proj/src/index/bundles.py
"""
Â-genus and Chern characters of the cotangent bundle and its exterior powers,
computed two ways:

- through power sums P_k = Σ x_i^{2k} and Newton's identities in the
  truncated Pontryagin ring (the fast path);
- through explicit formal Chern roots x_1 … x_n, expanded and rewritten in
  elementary symmetric functions of the x_i² with ``symmetrize`` (the
  independent path used by the consistency checks).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Rational, Symbol, bernoulli, series, sinh
from sympy.polys.domains import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from src.core.config_manager import ConfigManager
from src.core.exceptions import InvariantFailure, UsageError
from src.index.char_class import CharClass, TruncatedPontryaginRing, to_qq

Root = Tuple[int, ...]


def supported_dims(config: Optional[ConfigManager] = None) -> List[int]:
    config = config or ConfigManager()
    return [int(d) for d in config.get_config("app", "index.supported_dims", [4, 6, 8, 10, 12])]


def ring_for_dim(dim: int) -> TruncatedPontryaginRing:
    """
    Truncated ring of a supported even manifold dimension

    Raises:
        UsageError: if dim is not one of the configured dimensions
    """
    if dim not in supported_dims():
        raise UsageError(f"unsupported manifold dimension {dim}; supported: {supported_dims()}")
    return TruncatedPontryaginRing.for_manifold(dim)


# Power-sum path


@lru_cache(maxsize=None)
def ahat_log_coefficients(max_k: int) -> Dict[int, Fraction]:
    """log((x/2)/sinh(x/2)) = Σ_k a_k x^{2k} with a_k = −B_{2k}/(2k·(2k)!)."""
    out = {}
    for k in range(1, max_k + 1):
        b = bernoulli(2 * k)
        out[k] = -Fraction(int(b.p), int(b.q)) / (2 * k * factorial(2 * k))
    return out


def ahat(ring: TruncatedPontryaginRing) -> CharClass:
    return ring.multiplicative(ahat_log_coefficients(ring.max_degree // 4))


def ch_power(ring: TruncatedPontryaginRing, r: int) -> CharClass:
    """Σ_i (e^{r x_i} + e^{−r x_i}): the r-th power sum of the roots of T*_C."""
    coefficients = {k: Fraction(2 * r ** (2 * k), factorial(2 * k)) for k in range(1, ring.max_degree // 4 + 1)}
    return ring.additive(coefficients, rank=2 * ring.num_roots)


def ch_cotangent_class(ring: TruncatedPontryaginRing) -> CharClass:
    return ch_power(ring, 1)


def ch_exterior_power_class(ring: TruncatedPontryaginRing, j: int) -> CharClass:
    """
    Ch(Λ^j T*_C) = e_j(e^{±x_i}) by Newton's identities on the power sums
    of the 2n roots: j·e_j = Σ_{r=1}^{j} (−1)^{r−1} e_{j−r} π_r.
    """
    rank = 2 * ring.num_roots
    if not 0 <= j <= rank:
        raise UsageError(f"exterior power j={j} outside 0..{rank}")
    elementary = [ring.constant(1)]
    for t in range(1, j + 1):
        total = ring.zero()
        for r in range(1, t + 1):
            total = total + elementary[t - r] * ch_power(ring, r) * ((-1) ** (r - 1))
        elementary.append(total * Fraction(1, t))
    return elementary[j]


def alternating_exterior_sum(ring: TruncatedPontryaginRing) -> CharClass:
    """Σ_j (−1)^j Ch(Λ^j T*_C) over 0 ≤ j ≤ 2n."""
    total = ring.zero()
    for j in range(2 * ring.num_roots + 1):
        total = total + ch_exterior_power_class(ring, j) * ((-1) ** j)
    return total


def ahat_series(dim: int) -> CharClass:
    """
    Â-genus of a 2n-manifold, truncated at degree 2n

    Args:
        dim (int): Manifold dimension 2n, one of the supported dimensions

    Returns:
        CharClass: 1 − p1/24 + (7p1² − 4p2)/5760 + …
    """
    return ahat(ring_for_dim(dim))


def ch_cotangent(dim: int) -> CharClass:
    return ch_cotangent_class(ring_for_dim(dim))


def ch_exterior_cotangent(dim: int, j: int) -> CharClass:
    return ch_exterior_power_class(ring_for_dim(dim), j)


# Chern-root path


@lru_cache(maxsize=None)
def root_ring(num_roots: int) -> PolyRing:
    return PolyRing([f"x{i}" for i in range(1, num_roots + 1)], QQ, grlex)


def _truncate_roots(poly: PolyElement, max_degree: int) -> PolyElement:
    # x_i has real degree 2
    return poly.ring.from_dict({m: c for m, c in poly.items() if 2 * sum(m) <= max_degree})


def _linear_form(xring: PolyRing, root: Root) -> PolyElement:
    form = xring.zero
    for gen, c in zip(xring.gens, root):
        if c:
            form += gen * c
    return form


def exp_root(xring: PolyRing, root: Root, max_degree: int) -> PolyElement:
    """e^{L} truncated, for the integer linear form L = Σ c_i x_i."""
    form = _linear_form(xring, root)
    total = xring.one
    term = xring.one
    for t in range(1, max_degree // 2 + 1):
        term = _truncate_roots(term * form, max_degree) * QQ(1, t)
        if not term:
            break
        total += term
    return total


@lru_cache(maxsize=None)
def ahat_root_coefficients(order: int) -> Tuple[Fraction, ...]:
    """Taylor coefficients of (x/2)/sinh(x/2) up to x^order."""
    t = Symbol("t")
    expansion = series((t / 2) / sinh(t / 2), t, 0, order + 1).removeO()
    out = []
    for k in range(order + 1):
        c = Rational(expansion.coeff(t, k))
        out.append(Fraction(int(c.p), int(c.q)))
    return tuple(out)


def ahat_by_roots(ring: TruncatedPontryaginRing) -> PolyElement:
    """Π_i (x_i/2)/sinh(x_i/2) in the explicit roots."""
    xring = root_ring(ring.num_roots)
    coefficients = ahat_root_coefficients(ring.max_degree // 2)
    total = xring.one
    for gen in xring.gens:
        factor = xring.zero
        for k, c in enumerate(coefficients):
            if c:
                factor += gen ** k * to_qq(c)
        total = _truncate_roots(total * factor, ring.max_degree)
    return total


def roots_to_pontryagin(ring: TruncatedPontryaginRing, poly: PolyElement) -> CharClass:
    """
    Rewrite a polynomial in the roots, even in every x_i and symmetric, as a
    class in p_i = e_i(x_1², …, x_n²)

    Raises:
        InvariantFailure: if the polynomial is not a function of the p_i
    """
    zring = root_ring(ring.num_roots)
    halved = {}
    for monom, coeff in poly.items():
        if any(a % 2 for a in monom):
            raise InvariantFailure(f"odd power of a Chern root in {poly}")
        halved[tuple(a // 2 for a in monom)] = coeff
    symmetric, remainder, _ = zring.from_dict(halved).symmetrize()
    if remainder:
        raise InvariantFailure(f"class is not symmetric in the Chern roots: remainder {remainder}")
    terms = {}
    for monom, coeff in symmetric.items():
        padded = tuple(monom[: ring.num_generators])
        if any(monom[ring.num_generators:]):
            continue  # above the truncation degree
        terms[padded] = coeff
    return CharClass(ring, ring.poly_ring.from_dict(terms))


def chern_root_expansion(ring: TruncatedPontryaginRing, factors: Sequence[PolyElement]) -> CharClass:
    """Product of root-space series, truncated and rewritten in the p_i."""
    xring = root_ring(ring.num_roots)
    total = xring.one
    for factor in factors:
        total = _truncate_roots(total * factor, ring.max_degree)
    return roots_to_pontryagin(ring, total)


@dataclass(frozen=True)
class FormalBundle:
    """A complex bundle as a multiset of formal Chern roots, integer combinations of x_1 … x_n."""

    num_roots: int
    roots: Tuple[Root, ...]

    @classmethod
    def trivial(cls, num_roots: int, rank: int) -> "FormalBundle":
        return cls(num_roots, ((0,) * num_roots,) * rank)

    @classmethod
    def cotangent(cls, num_roots: int) -> "FormalBundle":
        """T*_C with roots ±x_i."""
        roots = []
        for i in range(num_roots):
            unit = tuple(1 if t == i else 0 for t in range(num_roots))
            roots.append(unit)
            roots.append(tuple(-c for c in unit))
        return cls(num_roots, tuple(roots))

    @property
    def rank(self) -> int:
        return len(self.roots)

    def _check(self, other: "FormalBundle") -> None:
        if other.num_roots != self.num_roots:
            raise UsageError("bundles over different root systems")

    def direct_sum(self, other: "FormalBundle") -> "FormalBundle":
        self._check(other)
        return FormalBundle(self.num_roots, self.roots + other.roots)

    def tensor(self, other: "FormalBundle") -> "FormalBundle":
        self._check(other)
        return FormalBundle(
            self.num_roots,
            tuple(tuple(a + b for a, b in zip(r, s)) for r in self.roots for s in other.roots),
        )

    def exterior_power(self, j: int) -> "FormalBundle":
        if not 0 <= j <= self.rank:
            raise UsageError(f"exterior power j={j} outside 0..{self.rank}")
        roots = []
        for subset in combinations(self.roots, j):
            roots.append(tuple(sum(col) for col in zip(*subset)) if subset else (0,) * self.num_roots)
        return FormalBundle(self.num_roots, tuple(roots))

    def ch_roots(self, max_degree: int) -> PolyElement:
        xring = root_ring(self.num_roots)
        total = xring.zero
        for root in self.roots:
            total += exp_root(xring, root, max_degree)
        return total

    def chern_character(self, ring: TruncatedPontryaginRing) -> CharClass:
        """Ch through root expansion and symmetrization."""
        if ring.num_roots != self.num_roots:
            raise UsageError("ring and bundle disagree on the number of Chern roots")
        return roots_to_pontryagin(ring, self.ch_roots(ring.max_degree))


def alternating_exterior_by_roots(ring: TruncatedPontryaginRing) -> CharClass:
    """Π_i (1 − e^{x_i})(1 − e^{−x_i}) in the roots."""
    xring = root_ring(ring.num_roots)
    factors = []
    for i in range(ring.num_roots):
        unit = tuple(1 if t == i else 0 for t in range(ring.num_roots))
        minus = tuple(-c for c in unit)
        factors.append(xring.one - exp_root(xring, unit, ring.max_degree))
        factors.append(xring.one - exp_root(xring, minus, ring.max_degree))
    return chern_root_expansion(ring, factors)

