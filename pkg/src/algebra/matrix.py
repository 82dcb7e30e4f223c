# proj/src/algebra/matrix.py

from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from src.algebra.scalar import ScalarLike, Scalar, ZERO, to_scalar
from src.core.exceptions import UsageError

# Sparse vectors map a coordinate index to a nonzero Scalar.
SparseVector = Dict[int, Scalar]


def dense_to_sparse(values: Sequence[ScalarLike]) -> SparseVector:
    vec = {}
    for idx, value in enumerate(values):
        s = to_scalar(value)
        if s:
            vec[idx] = s
    return vec


def sparse_to_dense(vec: SparseVector, length: int) -> List[Scalar]:
    return [vec.get(i, ZERO) for i in range(length)]


def vec_add(u: SparseVector, v: SparseVector, factor: Scalar = None) -> SparseVector:
    """u + factor*v, dropping cancelled entries."""
    out = dict(u)
    for idx, value in v.items():
        term = value * factor if factor is not None else value
        total = out.get(idx, ZERO) + term
        if total:
            out[idx] = total
        else:
            out.pop(idx, None)
    return out


class Matrix:
    """
    Exact sparse matrix over the Gaussian rationals.

    Entries are stored as a dict of rows (row -> col -> nonzero Scalar). Row
    reduction is delegated to sympy's sparse DomainMatrix RREF, which picks
    the first nonzero entry of the lowest row as pivot, so kernel bases are
    reproducible across runs.
    """

    def __init__(self, rows: int, cols: int, entries: Optional[Dict[int, Dict[int, Scalar]]] = None):
        if rows < 0 or cols < 0:
            raise UsageError(f"invalid matrix shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        self.entries: Dict[int, Dict[int, Scalar]] = {}
        for r, row in (entries or {}).items():
            clean = {c: v for c, v in row.items() if v}
            if clean:
                self.entries[r] = clean
        self._rref: Optional[Tuple[Dict[int, Dict[int, Scalar]], Tuple[int, ...]]] = None

    @classmethod
    def from_dense(cls, grid: Sequence[Sequence[ScalarLike]]) -> "Matrix":
        rows = len(grid)
        cols = len(grid[0]) if rows else 0
        entries = {}
        for r, row in enumerate(grid):
            if len(row) != cols:
                raise UsageError("ragged rows in dense matrix")
            entries[r] = dense_to_sparse(row)
        return cls(rows, cols, entries)

    @classmethod
    def from_columns(cls, columns: Sequence[SparseVector], rows: int) -> "Matrix":
        entries: Dict[int, Dict[int, Scalar]] = {}
        for c, col in enumerate(columns):
            for r, value in col.items():
                if r >= rows:
                    raise UsageError(f"column {c} has entry at row {r} beyond {rows} rows")
                entries.setdefault(r, {})[c] = value
        return cls(rows, len(columns), entries)

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls(size, size, {i: {i: QQ_I.one} for i in range(size)})

    @classmethod
    def vstack(cls, blocks: Sequence["Matrix"]) -> "Matrix":
        if not blocks:
            raise UsageError("vstack needs at least one block")
        cols = blocks[0].cols
        entries: Dict[int, Dict[int, Scalar]] = {}
        offset = 0
        for block in blocks:
            if block.cols != cols:
                raise UsageError("vstack blocks must share a column count")
            for r, row in block.entries.items():
                entries[offset + r] = dict(row)
            offset += block.rows
        return cls(offset, cols, entries)

    def get(self, r: int, c: int) -> Scalar:
        return self.entries.get(r, {}).get(c, ZERO)

    def to_dense(self) -> List[List[Scalar]]:
        return [[self.get(r, c) for c in range(self.cols)] for r in range(self.rows)]

    def _domain_matrix(self, entries=None, cols=None) -> DomainMatrix:
        return DomainMatrix.from_dod(
            entries if entries is not None else self.entries,
            (self.rows, cols if cols is not None else self.cols),
            QQ_I,
        )

    def rref(self) -> Tuple[Dict[int, Dict[int, Scalar]], Tuple[int, ...]]:
        """Reduced row echelon form as (row dict, pivot columns); cached."""
        if self._rref is None:
            if self.rows == 0 or self.cols == 0 or not self.entries:
                self._rref = ({}, ())
            else:
                reduced, pivots = self._domain_matrix().rref(method="GJ")
                self._rref = (reduced.to_dod(), tuple(pivots))
        return self._rref

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel_basis(self) -> List[SparseVector]:
        """
        Exact basis of the null space, one vector per free column (in column
        order) with that coordinate equal to 1.
        """
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            vec: SparseVector = {free: QQ_I.one}
            for r, p in enumerate(pivots):
                value = reduced.get(r, {}).get(free)
                if value:
                    vec[p] = -value
            basis.append(vec)
        return basis

    def mul_vec(self, vec: SparseVector) -> SparseVector:
        out: SparseVector = {}
        for r, row in self.entries.items():
            total = ZERO
            for c, value in row.items():
                x = vec.get(c)
                if x:
                    total += value * x
            if total:
                out[r] = total
        return out

    def solve_many(self, rhs: Sequence[SparseVector]) -> List[Optional[SparseVector]]:
        """
        Particular solutions of A·x = b for every b in rhs through one RREF of
        the augmented matrix [A | B]. Inconsistent systems give None.
        """
        if not rhs:
            return []
        if self.rows == 0:
            return [{} if not b else None for b in rhs]
        entries = {r: dict(row) for r, row in self.entries.items()}
        for j, b in enumerate(rhs):
            for r, value in b.items():
                if r >= self.rows:
                    raise UsageError(f"right-hand side has entry at row {r} beyond {self.rows} rows")
                if value:
                    entries.setdefault(r, {})[self.cols + j] = value
        if not entries:
            return [{} for _ in rhs]
        reduced, pivots = self._domain_matrix(entries, self.cols + len(rhs)).rref(method="GJ")
        reduced = reduced.to_dod()
        rank_a = sum(1 for p in pivots if p < self.cols)

        solutions: List[Optional[SparseVector]] = []
        for j in range(len(rhs)):
            col = self.cols + j
            consistent = all(not reduced.get(r, {}).get(col) for r in range(rank_a, self.rows))
            if not consistent:
                solutions.append(None)
                continue
            sol: SparseVector = {}
            for r in range(rank_a):
                value = reduced.get(r, {}).get(col)
                if value:
                    sol[pivots[r]] = value
            solutions.append(sol)
        return solutions

    def solve(self, b: SparseVector) -> Optional[SparseVector]:
        return self.solve_many([b])[0]


def column_rank(columns: Iterable[SparseVector], rows: int) -> int:
    """Rank of the matrix whose columns are the given sparse vectors."""
    return Matrix.from_columns(list(columns), rows).rank()
