# proj/src/fields/operators.py
"""
Differential and algebraic operators on polynomial spinor fields over flat ℝ^m.

All formulas carry the ambient dimension m explicitly. Conventions:
    ∇φ     = Σ_i ∂_iφ ⊗ dx^i
    Dφ     = Σ_i e_i ∂_iφ                  (D² = −Δ)
    D_TΨ   = Σ_i Dψ_i ⊗ dx^i
    𝒯φ     = π_{3/2}(∇φ)
    δΨ     = −Σ_i ∂_iψ_i
    ℛΨ     = π_{3/2}(D_TΨ)                 on Ker μ
    ℒΨ     = Σ_i x_iψ_i
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ, QQ_I

from src.algebra.matrix import Matrix
from src.algebra.polynomial import MultiPoly, norm_squared, partial_derivative, poly_ring
from src.algebra.scalar import Scalar, ZERO, scalar
from src.clifford.algebraic_maps import (
    iota_components,
    mu_components,
    project_half_components,
    project_threehalf_components,
)
from src.clifford.spinor_space import SpinorSpace
from src.core.exceptions import PreconditionViolation, UsageError
from src.fields.spinor_fields import OneFormField, SpinorField


def _rational(num: int, den: int = 1) -> Scalar:
    return QQ_I(QQ(num, den))


def _clifford_sum(space: SpinorSpace, polys_per_gen: Sequence[Sequence[MultiPoly]]) -> Tuple[MultiPoly, ...]:
    """Σ_i e_i · v_i for coordinate vectors v_i of polynomials."""
    total = list(poly_ring(space.m).zero for _ in range(space.dim_s))
    for i, vec in enumerate(polys_per_gen):
        moved = space.apply_gamma(i, vec)
        total = [t + v for t, v in zip(total, moved)]
    return tuple(total)


def partial_field(phi: SpinorField, var: int) -> SpinorField:
    return SpinorField(phi.space, tuple(partial_derivative(p, var) for p in phi.components))


def clifford_field(i: int, phi: SpinorField) -> SpinorField:
    """Pointwise e_i·φ (1-based i)."""
    if not 1 <= i <= phi.space.m:
        raise UsageError(f"Clifford generator index {i} outside 1..{phi.space.m}")
    return SpinorField(phi.space, tuple(phi.space.apply_gamma(i - 1, phi.components)))


def clifford_x(phi: SpinorField) -> SpinorField:
    """x·φ = (Σ_i x_i e_i)·φ, Clifford action of the position vector."""
    ring = poly_ring(phi.space.m)
    return SpinorField(phi.space, tuple(phi.space.clifford_vector(ring.gens, phi.components)))


def dirac(phi: SpinorField) -> SpinorField:
    """
    Dirac operator D = Σ_i e_i ∂/∂x_i

    Args:
        phi (SpinorField): Polynomial spinor field

    Returns:
        SpinorField: Dφ, homogeneous degree lowered by one
    """
    space = phi.space
    grads = [[partial_derivative(p, i) for p in phi.components] for i in range(space.m)]
    return SpinorField(space, _clifford_sum(space, grads))


def gradient(phi: SpinorField) -> OneFormField:
    return OneFormField(phi.space, tuple(partial_field(phi, i) for i in range(phi.space.m)))


def laplacian_field(phi: SpinorField) -> SpinorField:
    """Componentwise Δ = Σ ∂_i²."""
    out = []
    for p in phi.components:
        total = p.ring.zero
        for i in range(phi.space.m):
            total += p.diff(i).diff(i)
        out.append(total)
    return SpinorField(phi.space, tuple(out))


def euler_operator(phi: SpinorField) -> SpinorField:
    """Σ_i x_i ∂_iφ; multiplies a k-homogeneous field by k."""
    ring = poly_ring(phi.space.m)
    out = []
    for p in phi.components:
        total = ring.zero
        for i, x in enumerate(ring.gens):
            total += x * p.diff(i)
        out.append(total)
    return SpinorField(phi.space, tuple(out))


def twisted_dirac(psi: OneFormField) -> OneFormField:
    """D_T: the Dirac operator applied to each component ψ_i."""
    return OneFormField(psi.space, tuple(dirac(c) for c in psi.components))


def twistor(phi: SpinorField) -> OneFormField:
    """𝒯φ = π_{3/2}(∇φ) = Σ_j (∂_jφ + (1/m) e_j Dφ) ⊗ dx^j."""
    grad = gradient(phi)
    return OneFormField.from_raw(phi.space, project_threehalf_components(phi.space, grad.raw()))


def transported_dirac(phi: SpinorField) -> OneFormField:
    """𝒟φ = π_{1/2}(∇φ), which equals ι(Dφ)."""
    grad = gradient(phi)
    return OneFormField.from_raw(phi.space, project_half_components(phi.space, grad.raw()))


def iota_field(phi: SpinorField) -> OneFormField:
    return OneFormField.from_raw(phi.space, iota_components(phi.space, phi.components))


def mu_field(psi: OneFormField) -> SpinorField:
    return SpinorField(psi.space, tuple(mu_components(psi.space, psi.raw())))


def project_half_field(psi: OneFormField) -> OneFormField:
    return OneFormField.from_raw(psi.space, project_half_components(psi.space, psi.raw()))


def project_threehalf_field(psi: OneFormField) -> OneFormField:
    return OneFormField.from_raw(psi.space, project_threehalf_components(psi.space, psi.raw()))


def iota_inverse_field(psi: OneFormField) -> SpinorField:
    """σ with ι(σ) = Ψ; Ψ must lie in the S′_{1/2} summand pointwise."""
    sigma = mu_field(psi)
    if iota_field(sigma) != psi:
        raise PreconditionViolation("one-form field is not in the image of ι")
    return sigma


def delta_div(psi: OneFormField) -> SpinorField:
    """δΨ = −Σ_i ∂ψ_i/∂x_i."""
    ring = poly_ring(psi.space.m)
    out = []
    for b in range(psi.space.dim_s):
        total = ring.zero
        for i, comp in enumerate(psi.components):
            total -= partial_derivative(comp.components[b], i)
        out.append(total)
    return SpinorField(psi.space, tuple(out))


def _require_admissible(psi: OneFormField, operator: str) -> None:
    if not psi.is_admissible():
        raise PreconditionViolation(f"{operator} requires an RS-admissible one-form (μ(Ψ) = 0)")


def rarita_schwinger(psi: OneFormField) -> OneFormField:
    """
    Rarita-Schwinger operator ℛΨ = Σ_i (Dψ_i + (1/m) e_i Σ_k e_k Dψ_k) ⊗ dx^i

    Args:
        psi (OneFormField): Field with μ(Ψ) = 0 identically

    Returns:
        OneFormField: ℛΨ, again RS-admissible

    Raises:
        PreconditionViolation: if Ψ is not RS-admissible
    """
    _require_admissible(psi, "rarita_schwinger")
    return project_threehalf_field(twisted_dirac(psi))


def dirac_prime(psi: OneFormField) -> OneFormField:
    """𝒟′ = π_{1/2}∘D_T on the S′_{1/2} summand; equals ((2−m)/m)·ι∘D∘ι^{−1}."""
    iota_inverse_field(psi)
    return project_half_field(twisted_dirac(psi))


def twistor_prime(phi: SpinorField) -> OneFormField:
    """𝒯′ = π_{3/2}∘D_T∘ι; equals (2/m)·𝒯."""
    return project_threehalf_field(twisted_dirac(iota_field(phi)))


def twistor_adjoint(psi: OneFormField) -> OneFormField:
    """𝒯* = π_{1/2}∘D_T on Ker μ; equals 2·ι∘δ."""
    _require_admissible(psi, "twistor_adjoint")
    return project_half_field(twisted_dirac(psi))


def rs_source(psi: OneFormField) -> SpinorField:
    """φ with π_{1/2}D_TΨ = ι(φ), i.e. φ = μ(D_TΨ)."""
    return mu_field(twisted_dirac(psi))


def L_map(psi: OneFormField) -> SpinorField:
    """ℒΨ = Σ_i x_i ψ_i; raises the homogeneity degree by one."""
    ring = poly_ring(psi.space.m)
    out = []
    for b in range(psi.space.dim_s):
        total = ring.zero
        for x, comp in zip(ring.gens, psi.components):
            total += x * comp.components[b]
        out.append(total)
    return SpinorField(psi.space, tuple(out))


@dataclass(frozen=True)
class XiTerms:
    """The three building blocks of Ξ for a fixed ψ₀."""

    norm_twistor: OneFormField  # ‖x‖² 𝒯ψ₀
    position: OneFormField      # Σ_j x_j ψ₀ ⊗ dx^j
    clifford: OneFormField      # Σ_j e_j (x·ψ₀) ⊗ dx^j

    def combine(self, a: Scalar, b: Scalar, c: Scalar) -> OneFormField:
        return self.norm_twistor.scaled(a) + self.position.scaled(b) + self.clifford.scaled(c)


def xi_terms(psi0: SpinorField) -> XiTerms:
    space = psi0.space
    ring = poly_ring(space.m)
    r2 = norm_squared(space.m)
    x_psi0 = clifford_x(psi0)
    return XiTerms(
        norm_twistor=twistor(psi0).times_poly(r2),
        position=OneFormField(space, tuple(psi0.times_poly(x) for x in ring.gens)),
        clifford=OneFormField(space, tuple(clifford_field(j, x_psi0) for j in range(1, space.m + 1))),
    )


def xi_coefficients(m: int, k: int) -> Tuple[Scalar, Scalar, Scalar]:
    """(a, b, c) = (1, m, 1) / (2(m+k−2)) for Ξ on ℝ^m at output degree k."""
    den = 2 * (m + k - 2)
    return _rational(1, den), _rational(m, den), _rational(1, den)


def xi_map(psi0: SpinorField, k: int) -> OneFormField:
    """
    Ξ(ψ₀) = (‖x‖²𝒯ψ₀ + m Σ_j x_jψ₀⊗dx^j + Σ_j e_j(x·ψ₀)⊗dx^j) / (2(m+k−2))

    Args:
        psi0 (SpinorField): (k−1)-homogeneous monogenic
        k (int): Homogeneity degree of the result, k ≥ 1

    Returns:
        OneFormField: k-homogeneous RS-admissible field with
            D_TΞ(ψ₀) = Σ_j e_jψ₀ ⊗ dx^j

    Raises:
        PreconditionViolation: if ψ₀ is not monogenic or not of degree k−1
    """
    if k < 1:
        raise PreconditionViolation(f"Ξ needs output degree k ≥ 1, got {k}")
    if not psi0.is_homogeneous_of(k - 1):
        raise PreconditionViolation(f"Ξ input must be {k - 1}-homogeneous")
    if not dirac(psi0).is_zero():
        raise PreconditionViolation("Ξ input must be monogenic (Dψ₀ = 0)")
    a, b, c = xi_coefficients(psi0.space.m, k)
    return xi_terms(psi0).combine(a, b, c)


def xi_target(psi0: SpinorField) -> OneFormField:
    """Σ_j e_jψ₀ ⊗ dx^j, the right-hand side that Ξ solves."""
    return OneFormField(psi0.space, tuple(clifford_field(j, psi0) for j in range(1, psi0.space.m + 1)))


def _field_coordinates(form: OneFormField) -> Dict[Tuple[int, int, Tuple[int, ...]], Scalar]:
    coords = {}
    for i, comp in enumerate(form.components):
        for b, p in enumerate(comp.components):
            for exp, coeff in p.items():
                coords[(i, b, exp)] = coeff
    return coords


def _spinor_coordinates(field: SpinorField) -> Dict[Tuple[int, int, Tuple[int, ...]], Scalar]:
    return {(-1, b, exp): coeff for b, p in enumerate(field.components) for exp, coeff in p.items()}


@dataclass(frozen=True)
class XiCalibration:
    m: int
    k: int
    coefficients: Optional[Tuple[Scalar, Scalar, Scalar]]
    unique: bool
    matches_closed_form: bool
    printed_shape_solvable: bool


def xi_calibration(psi0_basis: Sequence[SpinorField], m: int, k: int) -> XiCalibration:
    """
    Solve for (a, b, c) such that a‖x‖²𝒯ψ₀ + bΣx_jψ₀⊗dx^j + cΣe_j(x·ψ₀)⊗dx^j
    is RS-admissible and solves D_TΨ = Σe_jψ₀⊗dx^j for every ψ₀ in the basis.

    Also tests whether the equal-coefficient shape (t, t, t) admits any t.
    """
    # Each equation row is keyed by (ψ₀ index, coordinate key, equation tag).
    unknown_cols: List[Dict[Tuple, Scalar]] = [{}, {}, {}]
    rhs: Dict[Tuple, Scalar] = {}
    for n, psi0 in enumerate(psi0_basis):
        terms = xi_terms(psi0)
        for col, term in enumerate((terms.norm_twistor, terms.position, terms.clifford)):
            for key, value in _spinor_coordinates(mu_field(term)).items():
                unknown_cols[col][(n, "mu", key)] = value
            for key, value in _field_coordinates(twisted_dirac(term)).items():
                unknown_cols[col][(n, "eq", key)] = value
        for key, value in _field_coordinates(xi_target(psi0)).items():
            rhs[(n, "eq", key)] = value

    row_keys = sorted(set(rhs) | {key for col in unknown_cols for key in col}, key=repr)
    row_index = {key: r for r, key in enumerate(row_keys)}
    columns = [{row_index[key]: v for key, v in col.items()} for col in unknown_cols]
    rhs_vec = {row_index[key]: v for key, v in rhs.items()}
    system = Matrix.from_columns(columns, len(row_keys))

    solution = system.solve(rhs_vec)
    coefficients = None
    if solution is not None:
        coefficients = tuple(solution.get(j, ZERO) for j in range(3))
    unique = solution is not None and system.rank() == 3

    summed = {}
    for col in columns:
        for r, v in col.items():
            total = summed.get(r, ZERO) + v
            if total:
                summed[r] = total
            else:
                summed.pop(r, None)
    printed = Matrix.from_columns([summed], len(row_keys)).solve(rhs_vec)

    closed = xi_coefficients(m, k)
    matches = coefficients is not None and (
        coefficients == closed if unique else system.mul_vec({j: v for j, v in enumerate(closed) if v}) == rhs_vec
    )
    return XiCalibration(
        m=m,
        k=k,
        coefficients=coefficients,
        unique=unique,
        matches_closed_form=matches,
        printed_shape_solvable=printed is not None,
    )


@dataclass(frozen=True)
class TwistedDiracBlocks:
    """The four blocks of D_T with respect to S′_{1/2} ⊕ S_{3/2} for Ψ = ι(σ) + Ψ₃."""

    half_from_half: OneFormField        # π_{1/2}D_T ι(σ)
    half_from_threehalf: OneFormField   # π_{1/2}D_T Ψ₃
    threehalf_from_half: OneFormField   # π_{3/2}D_T ι(σ)
    threehalf_from_threehalf: OneFormField  # π_{3/2}D_T Ψ₃


def twisted_dirac_blocks(sigma: SpinorField, psi3: OneFormField) -> TwistedDiracBlocks:
    _require_admissible(psi3, "twisted_dirac_blocks")
    dt_half = twisted_dirac(iota_field(sigma))
    dt_three = twisted_dirac(psi3)
    return TwistedDiracBlocks(
        half_from_half=project_half_field(dt_half),
        half_from_threehalf=project_half_field(dt_three),
        threehalf_from_half=project_threehalf_field(dt_half),
        threehalf_from_threehalf=project_threehalf_field(dt_three),
    )


def predicted_blocks(sigma: SpinorField, psi3: OneFormField) -> TwistedDiracBlocks:
    """Closed forms ((2−m)/m)ιD, 2ιδ, (2/m)𝒯, ℛ of the four blocks."""
    m = sigma.space.m
    return TwistedDiracBlocks(
        half_from_half=iota_field(dirac(sigma)).scaled(_rational(2 - m, m)),
        half_from_threehalf=iota_field(delta_div(psi3)).scaled(scalar(2)),
        threehalf_from_half=twistor(sigma).scaled(_rational(2, m)),
        threehalf_from_threehalf=rarita_schwinger(psi3),
    )
