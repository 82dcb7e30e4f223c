# proj/tests/test_algebra.py

import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "../")))

from src.algebra.matrix import Matrix, column_rank, dense_to_sparse
from src.algebra.polynomial import (
    format_poly,
    laplacian,
    monomial,
    monomials_of_degree,
    norm_squared,
    partial_derivative,
    poly_add,
    poly_mul,
    variable,
)
from src.algebra.scalar import I, ONE, format_scalar, parse_scalar, scalar
from src.core.exceptions import UsageError
from src.fields.sampling import random_poly


class TestScalars:
    @pytest.mark.parametrize(
        "value, text",
        [
            (scalar(Fraction(3, 2)), "3/2"),
            (scalar(0, -1), "-i"),
            (scalar(0, Fraction(2, 3)), "2/3*i"),
            (scalar(Fraction(1, 2), 3), "(1/2+3*i)"),
            (scalar(-1, -2), "(-1-2*i)"),
        ],
    )
    def test_canonical_text(self, value, text):
        assert format_scalar(value) == text
        assert parse_scalar(text) == value

    def test_i_squared(self):
        assert I * I == -ONE

    def test_malformed_text(self):
        with pytest.raises(UsageError):
            parse_scalar("1.5")


class TestMatrix:
    def test_kernel_over_gaussian_rationals(self):
        """[[1, i]] has kernel spanned by (−i, 1)"""
        matrix = Matrix.from_dense([[1, I]])
        basis = matrix.kernel_basis()
        assert basis == [{0: -I, 1: ONE}]
        assert matrix.mul_vec(basis[0]) == {}

    def test_rank_and_solve(self):
        matrix = Matrix.from_dense([[1, 2], [2, 4], [0, 1]])
        assert matrix.rank() == 2
        solution = matrix.solve(dense_to_sparse([3, 6, 1]))
        assert solution == dense_to_sparse([1, 1])

    def test_inconsistent_system(self):
        matrix = Matrix.from_dense([[1, 1], [1, 1]])
        assert matrix.solve(dense_to_sparse([1, 2])) is None

    def test_column_rank(self):
        columns = [dense_to_sparse([1, 0, 0]), dense_to_sparse([0, 1, 0]), dense_to_sparse([1, 1, 0])]
        assert column_rank(columns, 3) == 2

    def test_ragged_rows(self):
        with pytest.raises(UsageError):
            Matrix.from_dense([[1, 2], [3]])


class TestRandomMatrices:
    @pytest.fixture
    def rng(self):
        """Seeded generator so every run samples the same matrices"""
        return random.Random(4242)

    @staticmethod
    def _gaussian_integer_matrix(rng, rows, cols):
        # about a third of the entries vanish so rank deficiency shows up
        return Matrix.from_dense(
            [
                [scalar(rng.randint(-2, 2), rng.randint(-2, 2)) if rng.random() > 0.35 else 0 for _ in range(cols)]
                for _ in range(rows)
            ]
        )

    @pytest.mark.parametrize("rows, cols", [(1, 1), (1, 8), (8, 1), (3, 5), (5, 3), (4, 8), (6, 6), (8, 8)])
    def test_kernel_is_annihilated(self, rng, rows, cols):
        for _ in range(4):
            matrix = self._gaussian_integer_matrix(rng, rows, cols)
            kernel = matrix.kernel_basis()
            for vec in kernel:
                assert matrix.mul_vec(vec) == {}
            assert matrix.rank() + len(kernel) == cols
            assert column_rank(kernel, cols) == len(kernel)

    def test_rank_of_repeated_rows(self, rng):
        matrix = self._gaussian_integer_matrix(rng, 3, 8)
        doubled = Matrix.vstack([matrix, matrix])
        assert doubled.rank() == matrix.rank()
        assert len(doubled.kernel_basis()) == 8 - matrix.rank()


class TestPolynomials:
    def test_partial_derivative(self):
        p = monomial(3, (2, 1, 0), 5)
        assert partial_derivative(p, 0) == monomial(3, (1, 1, 0), 10)
        assert not partial_derivative(p, 2)

    def test_norm_squared_is_harmonic_up_to_constant(self):
        assert laplacian(norm_squared(4)) == monomial(4, (0, 0, 0, 0), 8)

    def test_monomial_count(self):
        # C(k+m−1, k) monomials of degree k in m variables
        assert len(monomials_of_degree(3, 2)) == 6
        assert monomials_of_degree(3, 2)[0] == (2, 0, 0)
        assert monomials_of_degree(3, -1) == ()

    def test_format(self):
        p = variable(2, 0) * variable(2, 0) * scalar(0, 1) + variable(2, 1) * scalar(Fraction(-1, 2))
        assert format_poly(p) == "i*x1^2 + -1/2*x2"
        assert format_poly(p - p) == "0"

    def test_mixed_rings_rejected(self):
        with pytest.raises(UsageError):
            poly_mul(variable(2, 0), variable(3, 0))


class TestPolynomialLaws:
    @pytest.fixture
    def rng(self):
        """Seeded generator so every run samples the same polynomials"""
        return random.Random(314)

    @pytest.mark.parametrize("num_vars", [2, 3, 4, 5])
    def test_ring_laws(self, rng, num_vars):
        for _ in range(6):
            p, q, r = (random_poly(num_vars, 3, rng, max_terms=4) for _ in range(3))
            assert poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r))
            assert poly_mul(p, q) == poly_mul(q, p)
            assert poly_mul(p, poly_add(q, r)) == poly_add(poly_mul(p, q), poly_mul(p, r))

    @pytest.mark.parametrize("num_vars", [2, 3, 4])
    def test_leibniz_rule(self, rng, num_vars):
        for _ in range(6):
            p, q = random_poly(num_vars, 3, rng, max_terms=4), random_poly(num_vars, 3, rng, max_terms=4)
            for j in range(num_vars):
                lhs = partial_derivative(poly_mul(p, q), j)
                rhs = poly_mul(partial_derivative(p, j), q) + poly_mul(p, partial_derivative(q, j))
                assert lhs == rhs


if __name__ == "__main__":
    pytest.main([__file__])
