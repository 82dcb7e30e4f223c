# proj/src/algebra/polynomial.py

from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Tuple

from sympy import QQ_I
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from src.algebra.scalar import Scalar, ScalarLike, format_scalar, to_scalar
from src.core.exceptions import UsageError

# A polynomial in x1..xm with Gaussian-rational coefficients. Zero terms are
# never stored (PolyRing.from_dict drops them).
MultiPoly = PolyElement
Exponent = Tuple[int, ...]


@lru_cache(maxsize=None)
def poly_ring(num_vars: int) -> PolyRing:
    """The graded-lexicographic ring QQ(i)[x1, ..., x_num_vars], one instance per arity."""
    if num_vars < 1:
        raise UsageError(f"a polynomial ring needs at least one variable, got {num_vars}")
    names = [f"x{i}" for i in range(1, num_vars + 1)]
    return PolyRing(names, QQ_I, grlex)


def zero_poly(num_vars: int) -> MultiPoly:
    return poly_ring(num_vars).zero


def constant(num_vars: int, value: ScalarLike) -> MultiPoly:
    return poly_ring(num_vars).ground_new(to_scalar(value))


def variable(num_vars: int, index: int) -> MultiPoly:
    """The coordinate function x_{index+1} (index is 0-based)."""
    if not 0 <= index < num_vars:
        raise UsageError(f"variable index {index} out of range for {num_vars} variables")
    return poly_ring(num_vars).gens[index]


def monomial(num_vars: int, exponent: Exponent, coeff: ScalarLike = 1) -> MultiPoly:
    if len(exponent) != num_vars:
        raise UsageError(f"exponent {exponent} does not have {num_vars} entries")
    return poly_ring(num_vars).from_dict({tuple(exponent): to_scalar(coeff)})


def from_terms(num_vars: int, terms: Dict[Exponent, Scalar]) -> MultiPoly:
    return poly_ring(num_vars).from_dict(dict(terms))


def norm_squared(num_vars: int) -> MultiPoly:
    """‖x‖² = Σ x_i²."""
    ring = poly_ring(num_vars)
    return sum((g * g for g in ring.gens), ring.zero)


def num_vars_of(p: MultiPoly) -> int:
    return p.ring.ngens


def _check_same_ring(p: MultiPoly, q: MultiPoly) -> None:
    if p.ring.ngens != q.ring.ngens:
        raise UsageError(
            f"polynomials live in different rings ({p.ring.ngens} vs {q.ring.ngens} variables)"
        )


def poly_add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    _check_same_ring(p, q)
    return p + q


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """
    Exact product of two polynomials in the same number of variables

    Args:
        p (MultiPoly): Left factor
        q (MultiPoly): Right factor

    Returns:
        MultiPoly: p*q, total degree adds

    Raises:
        UsageError: if p and q have different numbers of variables
    """
    _check_same_ring(p, q)
    return p * q


def scale(p: MultiPoly, c: Scalar) -> MultiPoly:
    return p.mul_ground(c) if c else p.ring.zero


def partial_derivative(p: MultiPoly, var: int) -> MultiPoly:
    """Formal ∂p/∂x_{var+1}; var is a 0-based index."""
    if not 0 <= var < p.ring.ngens:
        raise UsageError(f"variable index {var} out of range for {p.ring.ngens} variables")
    return p.diff(var)


def laplacian(p: MultiPoly) -> MultiPoly:
    result = p.ring.zero
    for i in range(p.ring.ngens):
        result += p.diff(i).diff(i)
    return result


def homogeneous_degree(p: MultiPoly) -> Optional[int]:
    """Common total degree of the terms of p; None for 0 or mixed-degree polynomials."""
    degrees = {sum(exp) for exp in p.keys()}
    if len(degrees) != 1:
        return None
    return degrees.pop()


def is_homogeneous_of(p: MultiPoly, k: int) -> bool:
    return all(sum(exp) == k for exp in p.keys())


@lru_cache(maxsize=None)
def monomials_of_degree(num_vars: int, k: int) -> Tuple[Exponent, ...]:
    """
    Exponents of all degree-k monomials in num_vars variables, in descending
    graded-lexicographic order (x1^k first).
    """
    if k < 0:
        return ()
    exps = []
    for combo in combinations_with_replacement(range(num_vars), k):
        exp = [0] * num_vars
        for idx in combo:
            exp[idx] += 1
        exps.append(tuple(exp))
    exps.sort(reverse=True)
    return tuple(exps)


def sorted_terms(p: MultiPoly) -> List[Tuple[Exponent, Scalar]]:
    return p.terms(grlex)


def format_poly(p: MultiPoly) -> str:
    """
    Canonical text form 'coeff*x1^a1*...*xm^am + ...', terms in descending
    graded-lexicographic order; '0' for the zero polynomial.
    """
    if not p:
        return "0"
    parts = []
    for exp, coeff in sorted_terms(p):
        factors = []
        for idx, e in enumerate(exp, start=1):
            if e == 1:
                factors.append(f"x{idx}")
            elif e > 1:
                factors.append(f"x{idx}^{e}")
        text = format_scalar(coeff)
        if factors:
            text = text + "*" + "*".join(factors)
        parts.append(text)
    return " + ".join(parts)
