# proj/tests/test_field_operators.py

import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../")))

from src.algebra.polynomial import monomial, variable
from src.algebra.scalar import scalar
from src.clifford.spinor_space import spinor_space
from src.core.exceptions import PreconditionViolation, UsageError
from src.fields.forms import exterior_derivative, twisted_dirac_form, y_contract, y_identity_defect
from src.fields.operators import (
    L_map,
    delta_div,
    dirac,
    dirac_prime,
    euler_operator,
    gradient,
    iota_field,
    iota_inverse_field,
    laplacian_field,
    mu_field,
    predicted_blocks,
    project_half_field,
    rarita_schwinger,
    rs_source,
    transported_dirac,
    twisted_dirac,
    twisted_dirac_blocks,
    twistor,
    twistor_adjoint,
    twistor_prime,
    xi_calibration,
    xi_coefficients,
    xi_map,
    xi_target,
)
from src.fields.sampling import random_admissible_one_form, random_kform, random_one_form, random_spinor_field
from src.fields.spinor_fields import KFormField, OneFormField, SpinorField, spinor_times_poly
from src.solutions.solution_spaces import compute_monogenic_basis, rs_solution_basis

BLOCKS = ("half_from_half", "half_from_threehalf", "threehalf_from_half", "threehalf_from_threehalf")


class TestDiracOperator:
    @pytest.fixture
    def rng(self):
        """Seeded generator so every run samples the same fields"""
        return random.Random(20240601)

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_dirac_squares_to_minus_laplacian(self, rng, m):
        space = spinor_space(m)
        for _ in range(5):
            phi = random_spinor_field(space, 3, rng)
            assert (dirac(dirac(phi)) + laplacian_field(phi)).is_zero()

    def test_constant_field_is_monogenic(self):
        space = spinor_space(4)
        phi = spinor_times_poly(space, [1, 0, 0, 0], monomial(4, (0, 0, 0, 0)))
        assert dirac(phi).is_zero()

    def test_linear_field_is_not_monogenic(self):
        space = spinor_space(3)
        phi = spinor_times_poly(space, [1, 0], variable(3, 0))
        assert not dirac(phi).is_zero()

    @pytest.mark.parametrize("m", [3, 4])
    def test_half_gradient_is_transported_dirac(self, rng, m):
        space = spinor_space(m)
        phi = random_spinor_field(space, 3, rng)
        assert (project_half_field(gradient(phi)) - iota_field(dirac(phi))).is_zero()
        assert (transported_dirac(phi) - iota_field(dirac(phi))).is_zero()

    def test_mu_iota_on_fields(self, rng):
        space = spinor_space(5)
        phi = random_spinor_field(space, 2, rng)
        assert (mu_field(iota_field(phi)) - phi).is_zero()

    def test_mismatched_component_ring(self):
        space = spinor_space(3)
        with pytest.raises(UsageError):
            SpinorField(space, (variable(4, 0), variable(4, 1)))


class TestRaritaSchwinger:
    @pytest.fixture
    def rng(self):
        """Seeded generator so every run samples the same fields"""
        return random.Random(7)

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_block_form(self, rng, m):
        space = spinor_space(m)
        for _ in range(3):
            sigma = random_spinor_field(space, 3, rng)
            psi3 = random_admissible_one_form(space, 3, rng)
            actual = twisted_dirac_blocks(sigma, psi3)
            predicted = predicted_blocks(sigma, psi3)
            for block in BLOCKS:
                assert (getattr(actual, block) - getattr(predicted, block)).is_zero(), block

    def test_twistor_adjoint(self, rng):
        space = spinor_space(4)
        psi = random_admissible_one_form(space, 3, rng)
        assert (twistor_adjoint(psi) - iota_field(delta_div(psi)).scaled(scalar(2))).is_zero()

    def test_rs_output_is_admissible(self, rng):
        space = spinor_space(4)
        psi = random_admissible_one_form(space, 2, rng)
        assert rarita_schwinger(psi).is_admissible()

    def test_non_admissible_input_rejected(self):
        space = spinor_space(3)
        psi = iota_field(spinor_times_poly(space, [1, 0], variable(3, 1)))
        with pytest.raises(PreconditionViolation):
            rarita_schwinger(psi)

    @pytest.mark.parametrize("m", [3, 4])
    def test_twistor_of_monogenic_solves_rs(self, m):
        for phi in compute_monogenic_basis(m, 2).basis:
            image = twistor(phi)
            assert image.is_admissible()
            assert rarita_schwinger(image).is_zero()
            assert twisted_dirac(image).is_zero()

    def test_L_raises_degree(self, rng):
        space = spinor_space(3)
        psi = random_one_form(space, 2, rng, degree=2)
        image = L_map(psi)
        assert image.is_zero() or image.is_homogeneous_of(3)

    def test_L_commutes_with_constants(self, rng):
        space = spinor_space(4)
        psi = random_one_form(space, 2, rng)
        c = scalar(Fraction(-3, 2), 2)
        assert (L_map(psi.scaled(c)) - L_map(psi).scaled(c)).is_zero()

    @pytest.mark.parametrize("m, k", [(3, 2), (4, 1), (4, 2)])
    def test_third_power_of_dirac_kills_L_of_solutions(self, config, m, k):
        for psi in rs_solution_basis(m, k).basis:
            image = L_map(psi)
            assert image.is_homogeneous_of(k + 1)
            assert dirac(dirac(dirac(image))).is_zero()

    def test_zero_field(self):
        space = spinor_space(4)
        assert rarita_schwinger(OneFormField.zero(space)).is_zero()
        assert L_map(OneFormField.zero(space)).is_zero()


class TestTransportedOperators:
    @pytest.fixture
    def rng(self):
        return random.Random(31)

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_dirac_prime(self, rng, m):
        space = spinor_space(m)
        phi = random_spinor_field(space, 3, rng)
        expected = iota_field(dirac(phi)).scaled(scalar(Fraction(2 - m, m)))
        assert (dirac_prime(iota_field(phi)) - expected).is_zero()

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_twistor_prime(self, rng, m):
        space = spinor_space(m)
        phi = random_spinor_field(space, 3, rng)
        assert (twistor_prime(phi) - twistor(phi).scaled(scalar(Fraction(2, m)))).is_zero()

    def test_dirac_prime_needs_iota_image(self):
        space = spinor_space(3)
        phi = spinor_times_poly(space, [1, 0], variable(3, 0))
        with pytest.raises(PreconditionViolation):
            dirac_prime(twistor(phi))
        with pytest.raises(PreconditionViolation):
            iota_inverse_field(twistor(phi))

    def test_rs_source_is_half_part(self, rng):
        space = spinor_space(4)
        psi = random_admissible_one_form(space, 3, rng)
        assert (project_half_field(twisted_dirac(psi)) - iota_field(rs_source(psi))).is_zero()

    def test_euler_operator(self, rng):
        space = spinor_space(4)
        phi = random_spinor_field(space, 3, rng, degree=3)
        assert (euler_operator(phi) - phi.scaled(scalar(3))).is_zero()


class TestXi:
    def test_calibration_recovers_closed_form(self):
        calibration = xi_calibration(compute_monogenic_basis(4, 1).basis, 4, 2)
        assert calibration.coefficients == xi_coefficients(4, 2)
        assert calibration.unique
        assert calibration.matches_closed_form
        assert not calibration.printed_shape_solvable

    def test_coefficients(self):
        a, b, c = xi_coefficients(4, 2)
        assert (a, b, c) == (scalar(Fraction(1, 8)), scalar(Fraction(1, 2)), scalar(Fraction(1, 8)))

    @pytest.mark.parametrize("m, k", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1)])
    def test_xi_solves_twisted_dirac(self, m, k):
        for psi0 in compute_monogenic_basis(m, k - 1).basis:
            xi = xi_map(psi0, k)
            assert xi.is_admissible()
            assert xi.is_homogeneous_of(k)
            assert (twisted_dirac(xi) - xi_target(psi0)).is_zero()

    def test_xi_needs_monogenic_input(self):
        space = spinor_space(3)
        phi = spinor_times_poly(space, [1, 0], variable(3, 0))
        with pytest.raises(PreconditionViolation):
            xi_map(phi, 2)

    @pytest.mark.parametrize("m, k", [(3, 1), (4, 2), (5, 3)])
    def test_zero_maps_to_zero(self, m, k):
        assert xi_map(SpinorField.zero(spinor_space(m)), k).is_zero()


class TestSpinorForms:
    @pytest.fixture
    def rng(self):
        """Seeded generator so every run samples the same forms"""
        return random.Random(99)

    @pytest.mark.parametrize("m, degree", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 2)])
    def test_y_identity(self, rng, m, degree):
        space = spinor_space(m)
        for _ in range(3):
            omega = random_kform(space, degree, 3, rng)
            assert y_identity_defect(omega).is_zero()

    def test_y_on_one_form_is_minus_mu(self, rng):
        space = spinor_space(4)
        psi = random_one_form(space, 2, rng)
        contracted = y_contract(KFormField.from_one_form(psi)).to_spinor_field()
        assert (contracted + mu_field(psi)).is_zero()

    def test_twisted_dirac_on_one_forms(self, rng):
        space = spinor_space(3)
        psi = random_one_form(space, 2, rng)
        lifted = twisted_dirac_form(KFormField.from_one_form(psi))
        assert lifted == KFormField.from_one_form(twisted_dirac(psi))

    def test_exterior_derivative_squares_to_zero(self, rng):
        space = spinor_space(4)
        omega = random_kform(space, 1, 3, rng)
        assert exterior_derivative(exterior_derivative(omega)).is_zero()

    def test_y_needs_positive_degree(self):
        space = spinor_space(3)
        with pytest.raises(UsageError):
            y_contract(KFormField.zero(space, 0))


if __name__ == "__main__":
    pytest.main([__file__])
