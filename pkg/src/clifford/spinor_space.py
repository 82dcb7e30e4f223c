# proj/src/clifford/spinor_space.py

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from sympy import QQ_I

from src.algebra.matrix import Matrix
from src.algebra.scalar import I, ONE, ZERO, Scalar, ScalarLike, to_scalar
from src.core.config_manager import ConfigManager
from src.core.exceptions import UsageError

_SIGMA1 = ((ZERO, ONE), (ONE, ZERO))
_SIGMA2 = ((ZERO, -I), (I, ZERO))
_SIGMA3 = ((ONE, ZERO), (ZERO, -ONE))
_ID2 = ((ONE, ZERO), (ZERO, ONE))


def _kron(factors: Sequence[Tuple[Tuple[Scalar, ...], ...]]) -> List[List[Scalar]]:
    result: List[List[Scalar]] = [[ONE]]
    for factor in factors:
        size = len(result)
        fsize = len(factor)
        grid = [[ZERO] * (size * fsize) for _ in range(size * fsize)]
        for r in range(size):
            for c in range(size):
                a = result[r][c]
                if not a:
                    continue
                for fr in range(fsize):
                    for fc in range(fsize):
                        b = factor[fr][fc]
                        if b:
                            grid[r * fsize + fr][c * fsize + fc] = a * b
        result = grid
    return result


def _monomial_form(grid: List[List[Scalar]]) -> Tuple[Tuple[int, ...], Tuple[Scalar, ...]]:
    """Column c of a monomial matrix is phase[c] * basis vector perm[c]."""
    size = len(grid)
    perm, phase = [], []
    for c in range(size):
        hits = [(r, grid[r][c]) for r in range(size) if grid[r][c]]
        if len(hits) != 1:
            raise ValueError("gamma matrix is not monomial")
        perm.append(hits[0][0])
        phase.append(hits[0][1])
    return tuple(perm), tuple(phase)


@dataclass(frozen=True)
class SpinorSpace:
    """
    The complex spinor module S of the Clifford algebra of ℝ^m with e_i² = −1.

    Generators are i times the Euclidean tensor-product gamma matrices built
    from Pauli matrices, so every e_i is a monomial matrix with entries in
    {0, ±1, ±i}; it is stored as a permutation plus phases.
    """

    m: int
    dim_s: int
    gamma_perm: Tuple[Tuple[int, ...], ...]
    gamma_phase: Tuple[Tuple[Scalar, ...], ...]
    chirality: Optional[Tuple[int, ...]]

    @classmethod
    def build(cls, m: int) -> "SpinorSpace":
        if m < 1:
            raise UsageError(f"ambient dimension must be positive, got m={m}")
        half = m // 2
        perms, phases = [], []
        for j in range(half):
            for sigma in (_SIGMA1, _SIGMA2):
                factors = [_SIGMA3] * j + [sigma] + [_ID2] * (half - j - 1)
                grid = [[entry * I for entry in row] for row in _kron(factors)]
                perm, phase = _monomial_form(grid)
                perms.append(perm)
                phases.append(phase)
        if m % 2:
            grid = [[entry * I for entry in row] for row in _kron([_SIGMA3] * half)]
            perm, phase = _monomial_form(grid)
            perms.append(perm)
            phases.append(phase)

        chirality = None
        if m % 2 == 0:
            diag = _kron([_SIGMA3] * half)
            chirality = tuple(1 if diag[b][b] == ONE else -1 for b in range(len(diag)))
        return cls(
            m=m,
            dim_s=2 ** half,
            gamma_perm=tuple(perms),
            gamma_phase=tuple(phases),
            chirality=chirality,
        )

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.m:
            raise UsageError(f"Clifford generator index {i} outside 1..{self.m}")

    def apply_gamma(self, index0: int, coords: Sequence) -> list:
        """
        e_{index0+1} applied to a coordinate vector. Entries may be Scalars or
        polynomials; each is multiplied on the right by the phase.
        """
        perm = self.gamma_perm[index0]
        phase = self.gamma_phase[index0]
        out = [None] * self.dim_s
        for c in range(self.dim_s):
            out[perm[c]] = coords[c] * phase[c]
        return out

    def clifford_vector(self, coefficients: Sequence, coords: Sequence) -> list:
        """(Σ_i c_i e_i)·coords; coefficients may be Scalars or polynomials."""
        if len(coefficients) != self.m:
            raise UsageError(f"expected {self.m} vector coefficients, got {len(coefficients)}")
        out = [coords[b] * 0 for b in range(self.dim_s)]
        for i, c in enumerate(coefficients):
            if not c:
                continue
            moved = self.apply_gamma(i, coords)
            for b in range(self.dim_s):
                out[b] = out[b] + moved[b] * c
        return out

    def gamma_matrix(self, i: int) -> Matrix:
        """The matrix of e_i (1-based)."""
        self._check_index(i)
        perm = self.gamma_perm[i - 1]
        phase = self.gamma_phase[i - 1]
        return Matrix(self.dim_s, self.dim_s, {perm[c]: {c: phase[c]} for c in range(self.dim_s)})

    def anticommutator_holds(self, i: int, j: int) -> bool:
        """e_ie_j + e_je_i = −2δ_ij on every basis spinor."""
        self._check_index(i)
        self._check_index(j)
        target = QQ_I(-2) if i == j else ZERO
        for b in range(self.dim_s):
            basis = [ZERO] * self.dim_s
            basis[b] = ONE
            left = self.apply_gamma(i - 1, self.apply_gamma(j - 1, basis))
            right = self.apply_gamma(j - 1, self.apply_gamma(i - 1, basis))
            for r in range(self.dim_s):
                expected = target if r == b else ZERO
                if left[r] + right[r] != expected:
                    return False
        return True

    def chiral_indices(self, sign: int) -> Tuple[int, ...]:
        if self.chirality is None:
            raise UsageError(f"no chirality splitting in odd dimension m={self.m}")
        if sign not in (1, -1):
            raise UsageError(f"chirality sign must be ±1, got {sign}")
        return tuple(b for b, s in enumerate(self.chirality) if s == sign)

    def gamma_is_chiral_odd(self, i: int) -> bool:
        """e_i maps S⁺ to S⁻ and S⁻ to S⁺."""
        self._check_index(i)
        if self.chirality is None:
            raise UsageError(f"no chirality splitting in odd dimension m={self.m}")
        perm = self.gamma_perm[i - 1]
        return all(self.chirality[perm[c]] == -self.chirality[c] for c in range(self.dim_s))

    def chirality_anticommutes(self, i: int) -> bool:
        self._check_index(i)
        if self.chirality is None:
            raise UsageError(f"no chirality splitting in odd dimension m={self.m}")
        perm = self.gamma_perm[i - 1]
        # Γ e_i + e_i Γ on basis b: (chi[perm b] + chi[b]) * phase * e_{perm b}
        return all(self.chirality[perm[b]] + self.chirality[b] == 0 for b in range(self.dim_s))


def _check_dim(m: int, scope: str, config: Optional[ConfigManager]) -> None:
    lo, hi = (config or ConfigManager()).dimension_range(scope)
    if not lo <= m <= hi:
        raise UsageError(f"ambient dimension m={m} outside supported {scope} range [{lo}, {hi}]")


@lru_cache(maxsize=None)
def _cached_space(m: int) -> SpinorSpace:
    return SpinorSpace.build(m)


def spinor_space(m: int, config: Optional[ConfigManager] = None) -> SpinorSpace:
    """Generators and spinor module for m in the configured gamma range (2..8)."""
    _check_dim(m, "gamma", config)
    return _cached_space(m)


def field_space(m: int, config: Optional[ConfigManager] = None) -> SpinorSpace:
    """
    Spinor module for field computations; m must lie in the configured field
    range (3..8). m = 2 is only available through spinor_space.

    Raises:
        UsageError: if m is outside the field range
    """
    _check_dim(m, "field", config)
    return spinor_space(m, config)


@dataclass(frozen=True)
class SpinorVec:
    space: SpinorSpace
    coords: Tuple[Scalar, ...]

    @classmethod
    def of(cls, space: SpinorSpace, values: Sequence[ScalarLike]) -> "SpinorVec":
        if len(values) != space.dim_s:
            raise UsageError(f"spinor needs {space.dim_s} coordinates, got {len(values)}")
        return cls(space, tuple(to_scalar(v) for v in values))

    @classmethod
    def zero(cls, space: SpinorSpace) -> "SpinorVec":
        return cls(space, (ZERO,) * space.dim_s)

    @classmethod
    def basis(cls, space: SpinorSpace, b: int) -> "SpinorVec":
        coords = [ZERO] * space.dim_s
        coords[b] = ONE
        return cls(space, tuple(coords))

    def __add__(self, other: "SpinorVec") -> "SpinorVec":
        return SpinorVec(self.space, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "SpinorVec") -> "SpinorVec":
        return SpinorVec(self.space, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "SpinorVec":
        return SpinorVec(self.space, tuple(-a for a in self.coords))

    def scaled(self, c: ScalarLike) -> "SpinorVec":
        s = to_scalar(c)
        return SpinorVec(self.space, tuple(a * s for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class AlgebraicOneForm:
    """Σ_i ψ_i ⊗ ε^i, an element of S ⊗ (ℝ^m)*."""

    space: SpinorSpace
    components: Tuple[SpinorVec, ...]

    @classmethod
    def of(cls, space: SpinorSpace, components: Sequence[SpinorVec]) -> "AlgebraicOneForm":
        if len(components) != space.m:
            raise UsageError(f"one-form needs {space.m} components, got {len(components)}")
        return cls(space, tuple(components))

    @classmethod
    def zero(cls, space: SpinorSpace) -> "AlgebraicOneForm":
        return cls(space, tuple(SpinorVec.zero(space) for _ in range(space.m)))

    def __add__(self, other: "AlgebraicOneForm") -> "AlgebraicOneForm":
        return AlgebraicOneForm(self.space, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "AlgebraicOneForm") -> "AlgebraicOneForm":
        return AlgebraicOneForm(self.space, tuple(a - b for a, b in zip(self.components, other.components)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def flat(self) -> Tuple[Scalar, ...]:
        """Coordinates in the basis s_b ⊗ ε^i, index i*dim_s + b."""
        return tuple(a for comp in self.components for a in comp.coords)


def clifford_apply(i: int, psi: SpinorVec) -> SpinorVec:
    """
    Clifford multiplication e_i·ψ (1 ≤ i ≤ m)

    Args:
        i (int): 1-based generator index
        psi (SpinorVec): Spinor to act on

    Returns:
        SpinorVec: e_i·ψ in the same space
    """
    psi.space._check_index(i)
    return SpinorVec(psi.space, tuple(psi.space.apply_gamma(i - 1, psi.coords)))
