# proj/src/spectra/sphere_spectra.py
"""
Closed-form eigenvalue tables of the Dirac operator and the higher-spin Dirac
operators D̃_j on the round sphere S^n.

Dirac (j = 0), l ≥ 0:
    ±(n/2 + l) with multiplicity 2^⌊n/2⌋·C(l+n−1, l)

Higher spin (0 < j < n/2), l ≥ 1:
    μ¹ = ±(n/2 + l)
        2^⌊n/2⌋·C(n+1, j+1)·C(l+n, l−1)·(n−2j)(j+1) / ((l+j)(l+n−j))
    μ² = ±(n−2j)/(n−2j+2)·(n/2 + l)
        2^⌊n/2⌋·C(n+1, j)·C(l+n, l−1)·(n−2j+2)·j / ((l+j−1)(l+n−j+1))
"""

from fractions import Fraction
from math import comb
from typing import Any, Dict, List, Literal, Tuple

from pydantic import BaseModel

from src.core.base_processor import BaseProcessor
from src.core.exceptions import InvariantFailure, UsageError

Series = Literal["mu", "mu1", "mu2"]
SERIES_ORDER: Tuple[str, ...] = ("mu", "mu1", "mu2")


class SpectrumRow(BaseModel):
    n: int
    j: int
    l: int
    series: Series
    sign: Literal[1, -1]
    eigenvalue_num: int
    eigenvalue_den: int
    multiplicity: int

    @property
    def eigenvalue_abs(self) -> Fraction:
        return Fraction(self.eigenvalue_num, self.eigenvalue_den)

    @property
    def eigenvalue(self) -> Fraction:
        return self.sign * self.eigenvalue_abs

    def sort_key(self) -> Tuple[int, int, int, int, int]:
        return (self.n, self.j, self.l, SERIES_ORDER.index(self.series), -self.sign)


def _spinor_rank(n: int) -> int:
    return 2 ** (n // 2)


def _as_multiplicity(value: Fraction, label: str) -> int:
    if value.denominator != 1 or value <= 0:
        raise InvariantFailure(f"{label}: multiplicity {value} is not a positive integer")
    return int(value)


def _signed_rows(n: int, j: int, l: int, series: str, eigenvalue: Fraction, mult: int) -> List[SpectrumRow]:
    return [
        SpectrumRow(
            n=n,
            j=j,
            l=l,
            series=series,
            sign=sign,
            eigenvalue_num=eigenvalue.numerator,
            eigenvalue_den=eigenvalue.denominator,
            multiplicity=mult,
        )
        for sign in (1, -1)
    ]


def dirac_eigenvalue(n: int, l: int) -> Fraction:
    return Fraction(n, 2) + l


def dirac_multiplicity(n: int, l: int) -> int:
    return _spinor_rank(n) * comb(l + n - 1, l)


def dirac_spectrum(n: int, l_max: int) -> List[SpectrumRow]:
    """
    Eigenvalues of the Dirac operator on S^n for levels 0..l_max

    Args:
        n (int): Sphere dimension (≥ 2)
        l_max (int): Highest level

    Returns:
        List[SpectrumRow]: two rows (±) per level
    """
    if n < 2:
        raise UsageError(f"dirac_spectrum needs n ≥ 2, got {n}")
    if l_max < 0:
        raise UsageError(f"l_max must be non-negative, got {l_max}")
    rows: List[SpectrumRow] = []
    for l in range(l_max + 1):
        rows += _signed_rows(n, 0, l, "mu", dirac_eigenvalue(n, l), dirac_multiplicity(n, l))
    return rows


def _check_hsd_range(n: int, j: int) -> None:
    if not (0 < j and 2 * j < n):
        raise UsageError(f"higher-spin index needs 0 < j < n/2, got n={n}, j={j}")


def mu1_eigenvalue(n: int, j: int, l: int) -> Fraction:
    return Fraction(n, 2) + l


def mu2_eigenvalue(n: int, j: int, l: int) -> Fraction:
    return Fraction(n - 2 * j, n - 2 * j + 2) * (Fraction(n, 2) + l)


def mu1_multiplicity_exact(n: int, j: int, l: int) -> Fraction:
    return (
        Fraction(_spinor_rank(n) * comb(n + 1, j + 1) * comb(l + n, l - 1) * (n - 2 * j) * (j + 1))
        / ((l + j) * (l + n - j))
    )


def mu2_multiplicity_exact(n: int, j: int, l: int) -> Fraction:
    return (
        Fraction(_spinor_rank(n) * comb(n + 1, j) * comb(l + n, l - 1) * (n - 2 * j + 2) * j)
        / ((l + j - 1) * (l + n - j + 1))
    )


def rs_mu1_multiplicity_exact(n: int, l: int) -> Fraction:
    """The j = 1 specialization of the μ¹ multiplicity, written out on its own."""
    return Fraction(_spinor_rank(n) * comb(n + 1, 2) * comb(l + n, l - 1) * 2 * (n - 2)) / ((l + 1) * (l + n - 1))


def rs_mu2_multiplicity_exact(n: int, l: int) -> Fraction:
    """The j = 1 specialization of the μ² multiplicity."""
    return Fraction(_spinor_rank(n) * (n + 1) * comb(l + n, l - 1) * n) / (l * (l + n))


def hsd_spectrum(n: int, j: int, l_max: int) -> List[SpectrumRow]:
    """
    Both eigenvalue series of D̃_j on S^n for levels 1..l_max

    Raises:
        UsageError: if j is outside 0 < j < n/2 or l_max < 1
        InvariantFailure: if a multiplicity fails to be a positive integer
    """
    _check_hsd_range(n, j)
    if l_max < 1:
        raise UsageError(f"higher-spin levels start at 1, got l_max={l_max}")
    rows: List[SpectrumRow] = []
    for l in range(1, l_max + 1):
        mult1 = _as_multiplicity(mu1_multiplicity_exact(n, j, l), f"mu1(n={n}, j={j}, l={l})")
        mult2 = _as_multiplicity(mu2_multiplicity_exact(n, j, l), f"mu2(n={n}, j={j}, l={l})")
        rows += _signed_rows(n, j, l, "mu1", mu1_eigenvalue(n, j, l), mult1)
        rows += _signed_rows(n, j, l, "mu2", mu2_eigenvalue(n, j, l), mult2)
    return rows


def rs_spectrum(n: int, l_max: int) -> List[SpectrumRow]:
    """
    Spectrum of the Rarita-Schwinger operator (j = 1). The specialized j = 1
    multiplicities are evaluated separately and must agree with the general ones.
    """
    if n < 3:
        raise UsageError(f"rs_spectrum needs n ≥ 3, got {n}")
    rows = hsd_spectrum(n, 1, l_max)
    for l in range(1, l_max + 1):
        if rs_mu1_multiplicity_exact(n, l) != mu1_multiplicity_exact(n, 1, l):
            raise InvariantFailure(f"specialized mu1 multiplicity disagrees at n={n}, l={l}")
        if rs_mu2_multiplicity_exact(n, l) != mu2_multiplicity_exact(n, 1, l):
            raise InvariantFailure(f"specialized mu2 multiplicity disagrees at n={n}, l={l}")
    return rows


def sphere_restriction_factor(n: int) -> int:
    """Copies of the S^n spinor bundle inside the restricted spinor space of ℝ^{n+1}."""
    return 2 ** ((n + 1) // 2 - n // 2)


class SpectrumTableBuilder(BaseProcessor):
    """
    Builds a spectrum table from a request {"n", "j", "l_max"}; j = 0 selects
    the Dirac operator.
    """

    def process(self, input_data: Dict[str, Any]) -> List[SpectrumRow]:
        n = int(input_data["n"])
        j = int(input_data.get("j", 0))
        l_max = int(input_data.get("l_max", 3))

        min_n = int(self.config.get_config("app", "spectra.min_sphere_dim", 2))
        max_n = int(self.config.get_config("app", "spectra.max_sphere_dim", 64))
        if not min_n <= n <= max_n:
            raise UsageError(f"sphere dimension n={n} outside [{min_n}, {max_n}]")

        rows = dirac_spectrum(n, l_max) if j == 0 else hsd_spectrum(n, j, l_max)
        self.log_info(f"spectrum n={n} j={j}: {len(rows)} rows")
        return rows
