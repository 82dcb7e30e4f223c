# proj/src/fields/forms.py
"""
Spinor-valued differential forms: the twisted exterior derivative ∇, the
algebraic operator Y and the componentwise twisted Dirac operator D_T.

With ∇ω = Σ_j dx^j ∧ ∂_jω and Y(ω⊗s) = −Σ_i ι(e_i)ω ⊗ e_i·s one has
∇∘Y + Y∘∇ = −D_T in every form degree.
"""

from typing import Dict, Optional, Tuple

from src.core.exceptions import UsageError
from src.fields.operators import clifford_field, dirac, partial_field
from src.fields.spinor_fields import KFormField, SpinorField


def _wedge_sign(j: int, idx: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """dx^j ∧ dx^I = sign · dx^{I∪{j}}, or None when j ∈ I."""
    if j in idx:
        return None
    before = sum(1 for a in idx if a < j)
    sign = -1 if before % 2 else 1
    return sign, tuple(sorted(idx + (j,)))


def _contract_sign(i: int, idx: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """ι(e_i) dx^I = sign · dx^{I∖{i}}, or None when i ∉ I."""
    if i not in idx:
        return None
    pos = idx.index(i)
    sign = -1 if pos % 2 else 1
    return sign, idx[:pos] + idx[pos + 1:]


def _accumulate(target: Dict[Tuple[int, ...], SpinorField], idx: Tuple[int, ...], field: SpinorField, sign: int) -> None:
    term = field if sign > 0 else -field
    target[idx] = target[idx] + term if idx in target else term


def exterior_derivative(omega: KFormField) -> KFormField:
    """Twisted exterior derivative ∇ω = Σ_j dx^j ∧ ∂_jω (degree k → k+1)."""
    space = omega.space
    if omega.degree >= space.m:
        raise UsageError(f"no spinor-valued forms of degree {omega.degree + 1} on ℝ^{space.m}")
    out: Dict[Tuple[int, ...], SpinorField] = {}
    for idx, field in omega.components.items():
        for j in range(space.m):
            wedge = _wedge_sign(j, idx)
            if wedge is None:
                continue
            sign, new_idx = wedge
            _accumulate(out, new_idx, partial_field(field, j), sign)
    return KFormField.build(space, omega.degree + 1, out)


def y_contract(omega: KFormField) -> KFormField:
    """
    Y(ω⊗s) = −Σ_i ι(e_i)ω ⊗ e_i·s (degree k → k−1)

    Args:
        omega (KFormField): Spinor-valued k-form with k ≥ 1

    Returns:
        KFormField: Y(ω); on a 1-form this is −μ(Ψ) as a 0-form

    Raises:
        UsageError: if ω has degree 0
    """
    if omega.degree < 1:
        raise UsageError("Y needs a form of degree at least 1")
    space = omega.space
    out: Dict[Tuple[int, ...], SpinorField] = {}
    for idx, field in omega.components.items():
        for i in idx:
            sign, new_idx = _contract_sign(i, idx)
            _accumulate(out, new_idx, clifford_field(i + 1, field), -sign)
    return KFormField.build(space, omega.degree - 1, out)


def twisted_dirac_form(omega: KFormField) -> KFormField:
    """D_T on k-forms: the Dirac operator applied to every component."""
    return KFormField.build(
        omega.space,
        omega.degree,
        {idx: dirac(field) for idx, field in omega.components.items()},
    )


def y_identity_defect(omega: KFormField) -> KFormField:
    """(∇∘Y + Y∘∇)(ω) + D_T(ω); zero for every ω."""
    total = twisted_dirac_form(omega)
    if omega.degree < omega.space.m:
        total = total + y_contract(exterior_derivative(omega))
    if omega.degree >= 1:
        total = total + exterior_derivative(y_contract(omega))
    return total
