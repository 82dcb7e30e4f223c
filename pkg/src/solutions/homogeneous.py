# proj/src/solutions/homogeneous.py
"""
Finite-dimensional coordinate models of k-homogeneous spinor fields and
one-form fields, and the matrices of linear operators between them.
"""

from typing import Callable, Dict, List, Sequence, Tuple, Union

from src.algebra.matrix import Matrix, SparseVector
from src.algebra.polynomial import Exponent, monomials_of_degree, poly_ring
from src.algebra.scalar import ONE, Scalar
from src.clifford.spinor_space import SpinorSpace
from src.core.exceptions import UsageError
from src.fields.spinor_fields import OneFormField, SpinorField

Field = Union[SpinorField, OneFormField]


class SpinorFieldCoordinates:
    """Basis x^α·s_b of k-homogeneous spinor fields; index = monomial * dim_s + b."""

    def __init__(self, space: SpinorSpace, k: int):
        self.space = space
        self.k = k
        self.monomials: Tuple[Exponent, ...] = monomials_of_degree(space.m, k)
        self._mono_index: Dict[Exponent, int] = {e: n for n, e in enumerate(self.monomials)}
        self.size = len(self.monomials) * space.dim_s

    def to_vector(self, field: SpinorField) -> SparseVector:
        vec: SparseVector = {}
        dim_s = self.space.dim_s
        for b, p in enumerate(field.components):
            for exp, coeff in p.items():
                n = self._mono_index.get(exp)
                if n is None:
                    raise UsageError(f"term of degree {sum(exp)} in a {self.k}-homogeneous coordinate model")
                vec[n * dim_s + b] = coeff
        return vec

    def from_vector(self, vec: SparseVector) -> SpinorField:
        dim_s = self.space.dim_s
        terms: List[Dict[Exponent, Scalar]] = [{} for _ in range(dim_s)]
        for idx, value in vec.items():
            n, b = divmod(idx, dim_s)
            terms[b][self.monomials[n]] = value
        ring = poly_ring(self.space.m)
        return SpinorField(self.space, tuple(ring.from_dict(t) for t in terms))

    def basis_field(self, idx: int) -> SpinorField:
        return self.from_vector({idx: ONE})


class OneFormCoordinates:
    """Basis x^α·s_b ⊗ dx^i; index = (i * #monomials + monomial) * dim_s + b."""

    def __init__(self, space: SpinorSpace, k: int):
        self.space = space
        self.k = k
        self.spinor = SpinorFieldCoordinates(space, k)
        self.block = self.spinor.size
        self.size = space.m * self.block

    def to_vector(self, form: OneFormField) -> SparseVector:
        vec: SparseVector = {}
        for i, comp in enumerate(form.components):
            offset = i * self.block
            for idx, value in self.spinor.to_vector(comp).items():
                vec[offset + idx] = value
        return vec

    def from_vector(self, vec: SparseVector) -> OneFormField:
        parts: List[SparseVector] = [{} for _ in range(self.space.m)]
        for idx, value in vec.items():
            i, rest = divmod(idx, self.block)
            parts[i][rest] = value
        return OneFormField(self.space, tuple(self.spinor.from_vector(p) for p in parts))

    def basis_field(self, idx: int) -> OneFormField:
        return self.from_vector({idx: ONE})


Coordinates = Union[SpinorFieldCoordinates, OneFormCoordinates]


def coordinates_for(space: SpinorSpace, k: int, kind: str) -> Coordinates:
    if kind == "spinor":
        return SpinorFieldCoordinates(space, k)
    if kind == "one_form":
        return OneFormCoordinates(space, k)
    raise UsageError(f"unknown coordinate model {kind!r}")


def linear_operator_matrix(
    op: Callable[[Field], Field],
    domain: Coordinates,
    codomain: Coordinates,
) -> Matrix:
    """Matrix of a linear operator in the monomial bases of domain and codomain."""
    columns = [codomain.to_vector(op(domain.basis_field(j))) for j in range(domain.size)]
    return Matrix.from_columns(columns, codomain.size)


def stacked_kernel(
    blocks: Sequence[Tuple[Callable[[Field], Field], Coordinates]],
    domain: Coordinates,
) -> List[Field]:
    """
    Fields annihilated by every operator in blocks, as one sparse kernel of
    the vertically stacked operator matrix.
    """
    columns: List[SparseVector] = []
    sizes = [codomain.size for _, codomain in blocks]
    offsets = [sum(sizes[:n]) for n in range(len(sizes))]
    for j in range(domain.size):
        basis = domain.basis_field(j)
        column: SparseVector = {}
        for (op, codomain), offset in zip(blocks, offsets):
            for idx, value in codomain.to_vector(op(basis)).items():
                column[offset + idx] = value
        columns.append(column)
    system = Matrix.from_columns(columns, sum(sizes))
    return [domain.from_vector(v) for v in system.kernel_basis()]


def field_rank(fields: Sequence[Field], coords: Coordinates) -> int:
    if not fields:
        return 0
    return Matrix.from_columns([coords.to_vector(f) for f in fields], coords.size).rank()
