# proj/src/clifford/algebraic_maps.py
"""
Pointwise maps between S and S ⊗ (ℝ^m)*.

    μ(Σψ_i⊗ε^i) = Σ e_i ψ_i
    ι(σ)        = −(1/m) Σ e_i σ ⊗ ε^i
    π_{1/2}     = ι∘μ
    π_{3/2}     = id − ι∘μ

The *_components functions work on raw component lists whose entries are
Scalars or polynomials, so the field operators reuse them unchanged.
"""

from typing import Callable, List, Sequence

from sympy import QQ, QQ_I

from src.algebra.matrix import Matrix
from src.clifford.spinor_space import AlgebraicOneForm, SpinorSpace, SpinorVec
from src.core.exceptions import PreconditionViolation, UsageError


def _check_components(space: SpinorSpace, components: Sequence[Sequence]) -> None:
    if len(components) != space.m:
        raise UsageError(f"expected {space.m} one-form components, got {len(components)}")


def mu_components(space: SpinorSpace, components: Sequence[Sequence]) -> list:
    _check_components(space, components)
    total = [components[0][b] * 0 for b in range(space.dim_s)]
    for i, comp in enumerate(components):
        moved = space.apply_gamma(i, comp)
        total = [t + v for t, v in zip(total, moved)]
    return total


def iota_components(space: SpinorSpace, sigma: Sequence) -> List[list]:
    factor = QQ_I(QQ(-1, space.m))
    return [[v * factor for v in space.apply_gamma(i, sigma)] for i in range(space.m)]


def project_half_components(space: SpinorSpace, components: Sequence[Sequence]) -> List[list]:
    return iota_components(space, mu_components(space, components))


def project_threehalf_components(space: SpinorSpace, components: Sequence[Sequence]) -> List[list]:
    half = project_half_components(space, components)
    return [[a - b for a, b in zip(comp, h)] for comp, h in zip(components, half)]


def _to_form(space: SpinorSpace, comps: Sequence[Sequence]) -> AlgebraicOneForm:
    return AlgebraicOneForm(space, tuple(SpinorVec(space, tuple(c)) for c in comps))


def _raw(form: AlgebraicOneForm) -> List[tuple]:
    return [c.coords for c in form.components]


def mu(form: AlgebraicOneForm) -> SpinorVec:
    """Clifford contraction Σ_i e_i·ψ_i."""
    return SpinorVec(form.space, tuple(mu_components(form.space, _raw(form))))


def iota(sigma: SpinorVec) -> AlgebraicOneForm:
    """Embedding of S onto the S′_{1/2} summand; component i is −(1/m) e_i·σ."""
    return _to_form(sigma.space, iota_components(sigma.space, sigma.coords))


def project_half(form: AlgebraicOneForm) -> AlgebraicOneForm:
    return _to_form(form.space, project_half_components(form.space, _raw(form)))


def project_threehalf(form: AlgebraicOneForm) -> AlgebraicOneForm:
    """Projection onto Ker μ = S_{3/2}."""
    return _to_form(form.space, project_threehalf_components(form.space, _raw(form)))


def iota_inverse(form: AlgebraicOneForm) -> SpinorVec:
    """σ with ι(σ) = form; the form must lie in the image of ι."""
    sigma = mu(form)
    if iota(sigma) != form:
        raise PreconditionViolation("one-form is not in the image of ι")
    return sigma


def standard_basis(space: SpinorSpace) -> List[AlgebraicOneForm]:
    """The basis s_b ⊗ ε^i of S ⊗ (ℝ^m)*, ordered by (i, b)."""
    basis = []
    for i in range(space.m):
        for b in range(space.dim_s):
            comps = [SpinorVec.zero(space)] * space.m
            comps[i] = SpinorVec.basis(space, b)
            basis.append(AlgebraicOneForm(space, tuple(comps)))
    return basis


def linear_map_matrix(op: Callable[[AlgebraicOneForm], AlgebraicOneForm], space: SpinorSpace) -> Matrix:
    """Matrix of an endomorphism of S ⊗ (ℝ^m)* in the standard basis."""
    size = space.m * space.dim_s
    columns = []
    for form in standard_basis(space):
        image = op(form).flat()
        columns.append({r: v for r, v in enumerate(image) if v})
    return Matrix.from_columns(columns, size)


def spinor_map_matrix(op: Callable[[SpinorVec], SpinorVec], space: SpinorSpace) -> Matrix:
    columns = []
    for b in range(space.dim_s):
        image = op(SpinorVec.basis(space, b)).coords
        columns.append({r: v for r, v in enumerate(image) if v})
    return Matrix.from_columns(columns, space.dim_s)
