# proj/src/solutions/solution_spaces.py

from dataclasses import dataclass, field
from math import comb
from typing import List, Literal, Optional, Union

from loguru import logger

from src.clifford.spinor_space import SpinorSpace, field_space
from src.core.config_manager import ConfigManager
from src.core.exceptions import UsageError
from src.fields.operators import L_map, dirac, mu_field, project_threehalf_field, twisted_dirac
from src.fields.spinor_fields import OneFormField, SpinorField
from src.solutions.homogeneous import (
    OneFormCoordinates,
    SpinorFieldCoordinates,
    field_rank,
    stacked_kernel,
)

Kind = Literal["monogenic", "rs"]


@dataclass
class SolutionSpace:
    """
    Exact basis of a space of k-homogeneous polynomial solutions on ℝ^m:
    monogenics P_k(0) (Dφ = 0) or Rarita-Schwinger solutions P_k(1)
    (μΨ = 0 and ℛΨ = 0).
    """

    m: int
    k: int
    kind: Kind
    basis: List[Union[SpinorField, OneFormField]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def space(self) -> SpinorSpace:
        return field_space(self.m)

    def coordinates(self):
        if self.kind == "monogenic":
            return SpinorFieldCoordinates(self.space, self.k)
        return OneFormCoordinates(self.space, self.k)

    def rank(self) -> int:
        return field_rank(self.basis, self.coordinates())


def check_caps(kind: Kind, m: int, k: int, config: Optional[ConfigManager] = None) -> None:
    """
    Validate (m, k) against the configured caps of a solution-space kind

    Raises:
        UsageError: if m or k is outside the caps
    """
    config = config or ConfigManager()
    min_m, max_m, min_k, max_k = config.caps(kind)
    if not min_m <= m <= max_m:
        raise UsageError(f"{kind}: m={m} outside [{min_m}, {max_m}]")
    if not min_k <= k <= max_k:
        raise UsageError(f"{kind}: k={k} outside [{min_k}, {max_k}]")


def monogenic_dimension(m: int, k: int) -> int:
    """2^⌊m/2⌋ · C(k+m−2, k); zero for negative k."""
    if k < 0:
        return 0
    return 2 ** (m // 2) * comb(k + m - 2, k)


def rs_dimension_closed_form(m: int, k: int) -> int:
    """(m−1)·2^⌊m/2⌋·C(k+m−2, k), the dimension of P_k(1) when the decomposition holds."""
    return (m - 1) * 2 ** (m // 2) * comb(k + m - 2, k)


def compute_monogenic_basis(m: int, k: int) -> SolutionSpace:
    """Kernel of D on k-homogeneous spinor fields, without cap checks."""
    space = field_space(m)
    if k < 0:
        return SolutionSpace(m, k, "monogenic", [])
    basis = stacked_kernel([(dirac, SpinorFieldCoordinates(space, k - 1))], SpinorFieldCoordinates(space, k))
    logger.debug(f"P_{k}(0) on R^{m}: dim {len(basis)}")
    return SolutionSpace(m, k, "monogenic", basis)


def _rs_operator(psi: OneFormField) -> OneFormField:
    # π_{3/2}D_T without the admissibility check; μ = 0 is imposed by the stacked system.
    return project_threehalf_field(twisted_dirac(psi))


def compute_rs_basis(m: int, k: int) -> SolutionSpace:
    """Kernel of the stacked system [μ; π_{3/2}D_T] on k-homogeneous one-forms."""
    space = field_space(m)
    basis = stacked_kernel(
        [
            (mu_field, SpinorFieldCoordinates(space, k)),
            (_rs_operator, OneFormCoordinates(space, k - 1)),
        ],
        OneFormCoordinates(space, k),
    )
    logger.debug(f"P_{k}(1) on R^{m}: dim {len(basis)}")
    return SolutionSpace(m, k, "rs", basis)


def compute_m1_basis(m: int, k: int) -> List[OneFormField]:
    """M¹ = Ker ℒ ∩ P_k(1) as a single kernel of [μ; π_{3/2}D_T; ℒ]."""
    space = field_space(m)
    return stacked_kernel(
        [
            (mu_field, SpinorFieldCoordinates(space, k)),
            (_rs_operator, OneFormCoordinates(space, k - 1)),
            (L_map, SpinorFieldCoordinates(space, k + 1)),
        ],
        OneFormCoordinates(space, k),
    )


def monogenic_basis(m: int, k: int) -> SolutionSpace:
    """
    Exact basis of the k-homogeneous monogenics on ℝ^m

    Args:
        m (int): Ambient dimension (capped, default 3..8)
        k (int): Homogeneity degree (capped, default 0..5)

    Returns:
        SolutionSpace: basis of dimension 2^⌊m/2⌋·C(k+m−2, k)
    """
    check_caps("monogenic", m, k)
    return compute_monogenic_basis(m, k)


def rs_solution_basis(m: int, k: int) -> SolutionSpace:
    """
    Exact basis of P_k(1): k-homogeneous Ψ with μ(Ψ) = 0 and ℛ(Ψ) = 0

    Args:
        m (int): Ambient dimension (capped, default 3..6)
        k (int): Homogeneity degree (capped, default 1..4)

    Returns:
        SolutionSpace: basis of the RS solution space
    """
    check_caps("rs", m, k)
    return compute_rs_basis(m, k)


def m1_basis(m: int, k: int) -> List[OneFormField]:
    check_caps("rs", m, k)
    return compute_m1_basis(m, k)


def twisted_dirac_kernel_dim(m: int, k: int) -> int:
    check_caps("rs", m, k)
    return compute_twisted_dirac_kernel_dim(m, k)


def compute_twisted_dirac_kernel_dim(m: int, k: int) -> int:
    """dim of {Ψ ∈ P_k(1) : D_TΨ = 0}, the full twisted-Dirac solutions."""
    space = field_space(m)
    return len(
        stacked_kernel(
            [
                (mu_field, SpinorFieldCoordinates(space, k)),
                (twisted_dirac, OneFormCoordinates(space, k - 1)),
            ],
            OneFormCoordinates(space, k),
        )
    )
