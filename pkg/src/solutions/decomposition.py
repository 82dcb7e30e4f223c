# proj/src/solutions/decomposition.py
"""
Decomposition P_k(1) = M¹ ⊕ M² ⊕ M³ of k-homogeneous Rarita-Schwinger
solutions on ℝ^m:

    M¹ = Ker ℒ ∩ P_k(1)
    M² = 𝒯(P_{k+1}(0))        (twistor images of monogenics)
    M³ = Ξ(P_{k−1}(0))

Membership is decided by one exact linear solve against the concatenated
bases, in the order M¹ kernel, then monogenic-basis order for M² and M³.
"""

from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel

from src.algebra.matrix import Matrix, SparseVector
from src.algebra.scalar import format_scalar
from src.clifford.spinor_space import field_space
from src.core.base_processor import BaseProcessor
from src.core.exceptions import InvariantFailure, PreconditionViolation, UsageError
from src.fields.operators import (
    L_map,
    dirac,
    rarita_schwinger,
    rs_source,
    twisted_dirac,
    twistor,
    xi_calibration,
    xi_map,
)
from src.fields.spinor_fields import OneFormField, SpinorField
from src.solutions.homogeneous import OneFormCoordinates, SpinorFieldCoordinates, field_rank
from src.solutions.solution_spaces import (
    SolutionSpace,
    check_caps,
    compute_m1_basis,
    compute_monogenic_basis,
    compute_rs_basis,
    compute_twisted_dirac_kernel_dim,
    monogenic_dimension,
    rs_dimension_closed_form,
)


@dataclass(frozen=True)
class RSDecomposition:
    """Ψ = ψ₁ + ψ₂ + ψ₃ with certificates for each summand."""

    psi1: OneFormField
    psi2: OneFormField
    psi3: OneFormField
    l_psi1_zero: bool
    psi2_preimage: SpinorField   # φ ∈ P_{k+1}(0) with 𝒯φ = ψ₂
    psi3_preimage: SpinorField   # ψ₀ ∈ P_{k−1}(0) with Ξ(ψ₀) = ψ₃
    psi2_preimage_monogenic: bool
    psi3_preimage_monogenic: bool

    def resum(self) -> OneFormField:
        return self.psi1 + self.psi2 + self.psi3


def _combine(fields: Sequence, coefficients: SparseVector, offset: int, zero):
    total = zero
    for j, f in enumerate(fields):
        c = coefficients.get(offset + j)
        if c:
            total = total + f.scaled(c)
    return total


def _is_solution(psi: OneFormField, k: int) -> bool:
    return psi.is_homogeneous_of(k) and psi.is_admissible() and rarita_schwinger(psi).is_zero()


class RSDecomposer:
    """
    Holds the constructed bases of M¹, M², M³ for one (m, k) cell and splits
    solutions against them.
    """

    def __init__(self, m: int, k: int):
        self.m = m
        self.k = k
        self.space = field_space(m)
        self.coords = OneFormCoordinates(self.space, k)

        self.monogenics_up = compute_monogenic_basis(m, k + 1)
        self.monogenics_down = compute_monogenic_basis(m, k - 1)
        self.m1 = compute_m1_basis(m, k)
        self.m2 = [twistor(phi) for phi in self.monogenics_up.basis]
        self.m3 = [xi_map(psi0, k) for psi0 in self.monogenics_down.basis]

        columns = [self.coords.to_vector(f) for f in self.m1 + self.m2 + self.m3]
        self.system = Matrix.from_columns(columns, self.coords.size)
        self.rank = self.system.rank()

    @property
    def total(self) -> int:
        return len(self.m1) + len(self.m2) + len(self.m3)

    def is_direct(self) -> bool:
        return self.rank == self.total

    def decompose_many(self, solutions: Sequence[OneFormField]) -> List[RSDecomposition]:
        """
        Decompose many k-homogeneous solutions with one RREF

        Raises:
            PreconditionViolation: if an input is not an exact k-homogeneous RS solution
            InvariantFailure: if the bases are not independent or an input is outside their span
        """
        for psi in solutions:
            if psi.space.m != self.m or not _is_solution(psi, self.k):
                raise PreconditionViolation(f"input is not a {self.k}-homogeneous RS solution on R^{self.m}")
        if not self.is_direct():
            raise InvariantFailure(
                f"M¹+M²+M³ bases are dependent on R^{self.m}, k={self.k}: rank {self.rank} < {self.total}"
            )
        answers = self.system.solve_many([self.coords.to_vector(psi) for psi in solutions])

        n1, n2 = len(self.m1), len(self.m2)
        zero_form = OneFormField.zero(self.space)
        zero_spinor = SpinorField.zero(self.space)
        results = []
        for psi, coeffs in zip(solutions, answers):
            if coeffs is None:
                raise InvariantFailure("solution lies outside M¹ ⊕ M² ⊕ M³ (direct-sum violation)")
            psi1 = _combine(self.m1, coeffs, 0, zero_form)
            psi2 = _combine(self.m2, coeffs, n1, zero_form)
            psi3 = _combine(self.m3, coeffs, n1 + n2, zero_form)
            pre2 = _combine(self.monogenics_up.basis, coeffs, n1, zero_spinor)
            pre3 = _combine(self.monogenics_down.basis, coeffs, n1 + n2, zero_spinor)
            results.append(
                RSDecomposition(
                    psi1=psi1,
                    psi2=psi2,
                    psi3=psi3,
                    l_psi1_zero=L_map(psi1).is_zero(),
                    psi2_preimage=pre2,
                    psi3_preimage=pre3,
                    psi2_preimage_monogenic=dirac(pre2).is_zero(),
                    psi3_preimage_monogenic=dirac(pre3).is_zero(),
                )
            )
        return results

    def decompose(self, psi: OneFormField) -> RSDecomposition:
        return self.decompose_many([psi])[0]


def decompose_rs(psi: OneFormField) -> RSDecomposition:
    """
    Unique decomposition ψ = ψ₁ + ψ₂ + ψ₃ of a k-homogeneous RS solution

    Args:
        psi (OneFormField): Exact homogeneous RS solution

    Returns:
        RSDecomposition: summands with certificates; resum() reproduces psi.
        The zero field has no degree and decomposes as (0, 0, 0).
    """
    if psi.is_zero():
        zero_form = OneFormField.zero(psi.space)
        zero_spinor = SpinorField.zero(psi.space)
        return RSDecomposition(
            psi1=zero_form,
            psi2=zero_form,
            psi3=zero_form,
            l_psi1_zero=True,
            psi2_preimage=zero_spinor,
            psi3_preimage=zero_spinor,
            psi2_preimage_monogenic=True,
            psi3_preimage_monogenic=True,
        )
    k = psi.homogeneous_degree()
    if k is None:
        raise PreconditionViolation("decompose_rs needs a nonzero homogeneous solution")
    check_caps("rs", psi.space.m, k)
    return RSDecomposer(psi.space.m, k).decompose(psi)


def decompose_many(solutions: Sequence[OneFormField], m: int, k: int) -> List[RSDecomposition]:
    check_caps("rs", m, k)
    return RSDecomposer(m, k).decompose_many(solutions)


class DirectSumReport(BaseModel):
    m: int
    k: int
    dim_p_k0: int
    dim_p_k1: int
    dim_m1: int
    dim_m2: int
    dim_m3: int
    dim_p_kplus1_0: int
    dim_p_kminus1_0: int
    rank_concatenated: int
    dims_add_up: bool
    pairwise_trivial: bool
    direct_sum: bool
    m2_dim_matches_monogenics: bool
    m3_dim_matches_monogenics: bool
    m2_in_solution_space: bool
    m3_in_solution_space: bool
    m1_l_zero: bool
    m2_l_injective: bool
    m2_dl_zero: bool
    m3_dl_injective: bool
    m3_source_injective: bool
    d3l_zero_on_basis: bool
    dt_zero_on_m1_m2: bool
    twisted_dirac_kernel_dim: int
    rs_source_monogenic: bool
    xi_unique: bool
    xi_coefficients: Optional[List[str]]
    xi_matches_closed_form: bool
    xi_printed_shape_solvable: bool

    @property
    def passed(self) -> bool:
        return (
            self.direct_sum
            and self.m2_dim_matches_monogenics
            and self.m3_dim_matches_monogenics
            and self.m2_in_solution_space
            and self.m3_in_solution_space
            and self.m1_l_zero
            and self.m2_l_injective
            and self.m2_dl_zero
            and self.m3_dl_injective
            and self.d3l_zero_on_basis
            and self.dt_zero_on_m1_m2
            and self.xi_matches_closed_form
        )


def _dirac_of_l(psi: OneFormField) -> SpinorField:
    return dirac(L_map(psi))


def _image_rank(fields: Sequence, op, coords) -> int:
    return field_rank([op(f) for f in fields], coords)


def build_direct_sum_report(
    decomposer: RSDecomposer,
    solutions: SolutionSpace,
    monogenics_here: SolutionSpace,
) -> DirectSumReport:
    m, k = decomposer.m, decomposer.k
    space = decomposer.space
    dim_m1, dim_m2, dim_m3 = len(decomposer.m1), len(decomposer.m2), len(decomposer.m3)
    total = dim_m1 + dim_m2 + dim_m3

    spinor_up = SpinorFieldCoordinates(space, k + 1)
    spinor_mid = SpinorFieldCoordinates(space, k)
    spinor_down = SpinorFieldCoordinates(space, k - 1)

    calibration = xi_calibration(decomposer.monogenics_down.basis, m, k)
    dt_kernel = compute_twisted_dirac_kernel_dim(m, k)

    return DirectSumReport(
        m=m,
        k=k,
        dim_p_k0=monogenics_here.dim,
        dim_p_k1=solutions.dim,
        dim_m1=dim_m1,
        dim_m2=dim_m2,
        dim_m3=dim_m3,
        dim_p_kplus1_0=decomposer.monogenics_up.dim,
        dim_p_kminus1_0=decomposer.monogenics_down.dim,
        rank_concatenated=decomposer.rank,
        dims_add_up=total == solutions.dim,
        pairwise_trivial=decomposer.is_direct(),
        direct_sum=decomposer.is_direct() and total == solutions.dim,
        m2_dim_matches_monogenics=field_rank(decomposer.m2, decomposer.coords) == decomposer.monogenics_up.dim,
        m3_dim_matches_monogenics=field_rank(decomposer.m3, decomposer.coords) == decomposer.monogenics_down.dim,
        m2_in_solution_space=all(_is_solution(f, k) or f.is_zero() for f in decomposer.m2),
        m3_in_solution_space=all(_is_solution(f, k) or f.is_zero() for f in decomposer.m3),
        m1_l_zero=all(L_map(f).is_zero() for f in decomposer.m1),
        m2_l_injective=_image_rank(decomposer.m2, L_map, spinor_up) == dim_m2,
        m2_dl_zero=all(_dirac_of_l(f).is_zero() for f in decomposer.m2),
        m3_dl_injective=_image_rank(decomposer.m3, _dirac_of_l, spinor_mid) == dim_m3,
        m3_source_injective=_image_rank(decomposer.m3, rs_source, spinor_down) == dim_m3,
        d3l_zero_on_basis=all(dirac(dirac(_dirac_of_l(f))).is_zero() for f in solutions.basis),
        dt_zero_on_m1_m2=all(twisted_dirac(f).is_zero() for f in decomposer.m1 + decomposer.m2),
        twisted_dirac_kernel_dim=dt_kernel,
        rs_source_monogenic=all(dirac(rs_source(f)).is_zero() for f in solutions.basis),
        xi_unique=calibration.unique,
        xi_coefficients=[format_scalar(c) for c in calibration.coefficients] if calibration.coefficients else None,
        xi_matches_closed_form=calibration.matches_closed_form,
        xi_printed_shape_solvable=calibration.printed_shape_solvable,
    )


def verify_direct_sum(m: int, k: int) -> DirectSumReport:
    """
    Check P_k(1) = M¹ ⊕ M² ⊕ M³ by exact ranks; failures are reported, not raised.
    """
    check_caps("rs", m, k)
    decomposer = RSDecomposer(m, k)
    solutions = compute_rs_basis(m, k)
    monogenics_here = compute_monogenic_basis(m, k)
    return build_direct_sum_report(decomposer, solutions, monogenics_here)


class BasisEntry(BaseModel):
    form_index: Optional[int] = None
    spinor_index: int
    polynomial: str


class SolveResult(BaseModel):
    m: int
    k: int
    kind: str
    dim: int
    closed_form_dim: int
    basis: Optional[List[List[BasisEntry]]] = None
    decomposition: Optional[DirectSumReport] = None


def _basis_entries(field) -> List[BasisEntry]:
    if isinstance(field, OneFormField):
        return [BasisEntry(form_index=i, spinor_index=b, polynomial=text) for i, b, text in field.format()]
    return [BasisEntry(spinor_index=b, polynomial=text) for b, text in field.format()]


class SolutionSolver(BaseProcessor):
    """
    Computes a solution space for a request {"m", "k", "kind", "decompose",
    "basis"} and, for Rarita-Schwinger requests, the direct-sum report.
    """

    def process(self, input_data: Dict[str, Any]) -> SolveResult:
        m, k = int(input_data["m"]), int(input_data["k"])
        kind = input_data.get("kind", "monogenic")
        if kind not in ("monogenic", "rs"):
            raise UsageError(f"unknown solution kind {kind!r}; expected 'monogenic' or 'rs'")
        if input_data.get("decompose") and kind != "rs":
            raise UsageError("--decompose applies to Rarita-Schwinger solutions only")
        check_caps(kind, m, k, self.config)

        if kind == "monogenic":
            space = compute_monogenic_basis(m, k)
            closed_form = monogenic_dimension(m, k)
        else:
            space = compute_rs_basis(m, k)
            closed_form = rs_dimension_closed_form(m, k)
        self.log_info(f"{kind} solutions on R^{m}, degree {k}: dim {space.dim}")

        result = SolveResult(m=m, k=k, kind=kind, dim=space.dim, closed_form_dim=closed_form)
        if input_data.get("basis"):
            result.basis = [_basis_entries(f) for f in space.basis]
        if input_data.get("decompose"):
            report = build_direct_sum_report(RSDecomposer(m, k), space, compute_monogenic_basis(m, k))
            if not report.passed:
                self.log_error(f"direct-sum checks failed on R^{m}, k={k}")
            result.decomposition = report
        return result
