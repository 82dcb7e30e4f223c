# proj/src/spectra/cross_checks.py
"""
Tables tying the sphere spectra and Weyl dimensions to brute-force
solution-space dimensions on ℝ^{n+1}.
"""

from fractions import Fraction
from typing import List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel

from src.core.exceptions import InvariantFailure, UsageError
from src.solutions.decomposition import RSDecomposer
from src.solutions.solution_spaces import compute_m1_basis, compute_monogenic_basis
from src.spectra.sphere_spectra import (
    dirac_eigenvalue,
    dirac_multiplicity,
    hsd_spectrum,
    mu1_eigenvalue,
    mu1_multiplicity_exact,
    mu2_eigenvalue,
    mu2_multiplicity_exact,
    rs_mu1_multiplicity_exact,
    rs_mu2_multiplicity_exact,
    sphere_restriction_factor,
)
from src.spectra.weights import (
    m1_weight,
    m1_weyl_dimension,
    s32_dimension_check,
    tensor_decomposition_check,
)


class DiracCrossCheckRow(BaseModel):
    m: int
    l: int
    monogenic_dim: int
    dirac_multiplicity: int
    restriction_factor: int
    holds: bool


def dirac_crosscheck(max_m: int, max_l: int, min_m: int = 3) -> List[DiracCrossCheckRow]:
    """dim P_l(0) on ℝ^m against the S^{m−1} Dirac multiplicity at level l."""
    rows = []
    for m in range(min_m, max_m + 1):
        n = m - 1
        factor = sphere_restriction_factor(n)
        for l in range(max_l + 1):
            dim = compute_monogenic_basis(m, l).dim
            mult = dirac_multiplicity(n, l)
            rows.append(
                DiracCrossCheckRow(
                    m=m,
                    l=l,
                    monogenic_dim=dim,
                    dirac_multiplicity=mult,
                    restriction_factor=factor,
                    holds=dim == factor * mult,
                )
            )
    return rows


class ProvenanceRow(BaseModel):
    n: int
    l: int
    mu2_multiplicity: int
    matched_dirac_levels: List[int]
    same_level: bool
    dirac_multiplicity: int
    mu2_eigenvalue: str
    scaled_dirac_eigenvalue: str

    @property
    def agrees(self) -> bool:
        """μ²_l has the Dirac multiplicity of level l and (n−2)/n times its eigenvalue."""
        return (
            self.same_level
            and self.mu2_multiplicity == self.dirac_multiplicity
            and self.mu2_eigenvalue == self.scaled_dirac_eigenvalue
        )


def twistor_provenance_table(n: int, l_max: int) -> List[ProvenanceRow]:
    """
    For each μ² level (j = 1) the Dirac levels with the same multiplicity,
    searched over 0..l_max+1.
    """
    dirac = {l: dirac_multiplicity(n, l) for l in range(l_max + 2)}
    rows = []
    for l in range(1, l_max + 1):
        mult = int(mu2_multiplicity_exact(n, 1, l))
        matched = [lp for lp, d in dirac.items() if d == mult]
        rows.append(
            ProvenanceRow(
                n=n,
                l=l,
                mu2_multiplicity=mult,
                matched_dirac_levels=matched,
                same_level=l in matched,
                dirac_multiplicity=dirac[l],
                mu2_eigenvalue=str(mu2_eigenvalue(n, 1, l)),
                scaled_dirac_eigenvalue=str(Fraction(n - 2, n) * dirac_eigenvalue(n, l)),
            )
        )
    return rows


class RSSphereRow(BaseModel):
    m: int
    k: int
    subspace: str
    dimension: int
    matches: List[str]
    expected_series: str
    expected_l: int
    expected_eigenvalue: str
    expected_multiplicity: int
    eigenvalue: Optional[str] = None
    multiplicity: Optional[int] = None

    @property
    def agrees(self) -> bool:
        return (
            f"{self.expected_series}:l={self.expected_l}" in self.matches
            and self.eigenvalue == self.expected_eigenvalue
            and self.multiplicity == self.expected_multiplicity
        )


def expected_rs_level(subspace: str, k: int) -> Tuple[str, int]:
    """M¹ of degree k sits at μ¹ level k, M² = 𝒯(P_{k+1}(0)) at μ² level k + 1."""
    if subspace == "M1":
        return "mu1", k
    if subspace == "M2":
        return "mu2", k + 1
    raise UsageError(f"no sphere series for subspace {subspace!r}")


def _predicted(series: str, n: int, l: int) -> Tuple[Fraction, int]:
    if series == "mu1":
        return mu1_eigenvalue(n, 1, l), int(mu1_multiplicity_exact(n, 1, l))
    return mu2_eigenvalue(n, 1, l), int(mu2_multiplicity_exact(n, 1, l))


def rs_sphere_cross_table(m: int, k_max: int, l_max: int) -> List[RSSphereRow]:
    """
    For M¹ and M² on ℝ^m, every (series, level) of the S^{m−1}
    Rarita-Schwinger spectrum whose multiplicity times the restriction
    factor equals the brute-force dimension, next to the spectrum row at
    the predicted level.
    """
    n = m - 1
    factor = sphere_restriction_factor(n)
    spectrum = [r for r in hsd_spectrum(n, 1, l_max) if r.sign == 1]
    by_level = {(r.series, r.l): r for r in spectrum}
    rows = []
    for k in range(1, k_max + 1):
        decomposer = RSDecomposer(m, k)
        for subspace, dim in (("M1", len(decomposer.m1)), ("M2", len(decomposer.m2))):
            matches = [f"{r.series}:l={r.l}" for r in spectrum if r.multiplicity * factor == dim]
            series, level = expected_rs_level(subspace, k)
            eigenvalue, mult = _predicted(series, n, level)
            found = by_level.get((series, level))
            rows.append(
                RSSphereRow(
                    m=m,
                    k=k,
                    subspace=subspace,
                    dimension=dim,
                    matches=matches,
                    expected_series=series,
                    expected_l=level,
                    expected_eigenvalue=str(eigenvalue),
                    expected_multiplicity=mult,
                    eigenvalue=str(found.eigenvalue) if found else None,
                    multiplicity=found.multiplicity if found else None,
                )
            )
    logger.debug(f"RS sphere cross-table on R^{m}: {len(rows)} rows")
    return rows


class WeylRow(BaseModel):
    m: int
    k: int
    weight: str
    m1_dim: int
    weyl_dim: int
    holds: bool


def weyl_m1_check(m: int, k: int) -> WeylRow:
    """dim M¹(m, k) from the kernel computation against the Weyl dimension of its weight."""
    weight = m1_weight(m, k)
    dim = len(compute_m1_basis(m, k))
    expected = m1_weyl_dimension(m, k)
    return WeylRow(
        m=m,
        k=k,
        weight=str(weight) if weight is not None else "none",
        m1_dim=dim,
        weyl_dim=expected,
        holds=dim == expected,
    )


class IntegralityReport(BaseModel):
    max_n: int
    max_l: int
    cells: int
    failures: List[str]
    specialized_agree: bool

    @property
    def passed(self) -> bool:
        return not self.failures and self.specialized_agree


def integrality_sweep(max_n: int, max_l: int) -> IntegralityReport:
    """Both multiplicity expressions are positive integers for n ≤ max_n, 0 < j < n/2, 1 ≤ l ≤ max_l."""
    failures = []
    cells = 0
    agree = True
    for n in range(3, max_n + 1):
        for j in range(1, (n + 1) // 2):
            for l in range(1, max_l + 1):
                cells += 1
                for label, value in (
                    ("mu1", mu1_multiplicity_exact(n, j, l)),
                    ("mu2", mu2_multiplicity_exact(n, j, l)),
                ):
                    if value.denominator != 1 or value <= 0:
                        failures.append(f"{label}(n={n}, j={j}, l={l}) = {value}")
        for l in range(1, max_l + 1):
            agree = agree and rs_mu1_multiplicity_exact(n, l) == mu1_multiplicity_exact(n, 1, l)
            agree = agree and rs_mu2_multiplicity_exact(n, l) == mu2_multiplicity_exact(n, 1, l)
    return IntegralityReport(max_n=max_n, max_l=max_l, cells=cells, failures=failures, specialized_agree=agree)


class TensorRow(BaseModel):
    N: int
    j: int
    tensor_dim: int
    summand_dims: List[int]
    holds: bool


def tensor_decomposition_table(max_dim: int) -> List[TensorRow]:
    rows = []
    for N in range(3, max_dim + 1):
        for j in range(N // 2 + 1):
            check = tensor_decomposition_check(N, j)
            rows.append(
                TensorRow(N=N, j=j, tensor_dim=check.tensor_dim, summand_dims=list(check.summand_dims), holds=check.holds)
            )
        lhs, rhs = s32_dimension_check(N)
        if lhs != rhs:
            raise InvariantFailure(f"dim S_3/2 on Spin({N}): {lhs} != {rhs}")
    return rows
