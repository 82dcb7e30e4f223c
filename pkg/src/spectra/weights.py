# proj/src/spectra/weights.py
"""
Highest weights of Spin(N) and the Weyl dimension formula.

Rank r = ⌊N/2⌋. Positive roots are e_i ± e_j (i < j) for both series, plus
e_i for odd N. ρ_i = r − i for even N and r − i + 1/2 for odd N.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

from src.core.exceptions import UsageError

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class HighestWeight:
    entries: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Sequence) -> "HighestWeight":
        return cls(tuple(Fraction(v) for v in values))

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_spinorial(self) -> bool:
        return self.rank > 0 and self.entries[0].denominator == 2

    def flipped(self) -> "HighestWeight":
        """The weight with its last entry negated (the other half of a ± pair)."""
        return HighestWeight(self.entries[:-1] + (-self.entries[-1],))

    def __str__(self) -> str:
        return "(" + ", ".join(str(e) for e in self.entries) + ")"


def group_rank(N: int) -> int:
    if N < 2:
        raise UsageError(f"Spin(N) needs N ≥ 2, got {N}")
    return N // 2


def rho(N: int) -> Tuple[Fraction, ...]:
    r = group_rank(N)
    shift = HALF if N % 2 else Fraction(0)
    return tuple(Fraction(r - i) + shift for i in range(1, r + 1))


def positive_roots(N: int) -> List[Tuple[int, ...]]:
    r = group_rank(N)
    roots = []
    for i in range(r):
        for j in range(i + 1, r):
            minus = [0] * r
            minus[i], minus[j] = 1, -1
            plus = [0] * r
            plus[i], plus[j] = 1, 1
            roots.append(tuple(minus))
            roots.append(tuple(plus))
    if N % 2:
        for i in range(r):
            short = [0] * r
            short[i] = 1
            roots.append(tuple(short))
    return roots


def is_dominant(N: int, weight: HighestWeight) -> bool:
    r = group_rank(N)
    lam = weight.entries
    if len(lam) != r:
        return False
    if len({e.denominator for e in lam}) != 1 or lam[0].denominator not in (1, 2):
        return False
    if N % 2 == 0:
        # λ_1 ≥ … ≥ λ_{r−1} ≥ |λ_r|
        chain = list(lam[:-1]) + [abs(lam[-1])]
    else:
        chain = list(lam) + [Fraction(0)]
    return all(a >= b for a, b in zip(chain, chain[1:]))


def weyl_dim(N: int, weight: HighestWeight) -> int:
    """
    Dimension of the irreducible Spin(N) representation with highest weight λ

    Args:
        N (int): Group parameter of Spin(N)
        weight (HighestWeight): Dominant weight with ⌊N/2⌋ entries

    Returns:
        int: Π_α ⟨λ+ρ, α⟩ / ⟨ρ, α⟩ over positive roots

    Raises:
        UsageError: if the weight is not dominant for Spin(N)
    """
    if not is_dominant(N, weight):
        raise UsageError(f"weight {weight} is not dominant for Spin({N})")
    r0 = rho(N)
    shifted = [a + b for a, b in zip(weight.entries, r0)]
    dim = Fraction(1)
    for root in positive_roots(N):
        num = sum(c * s for c, s in zip(root, shifted))
        den = sum(c * s for c, s in zip(root, r0))
        dim *= Fraction(num) / Fraction(den)
    if dim.denominator != 1:
        raise UsageError(f"non-integral Weyl dimension {dim} for {weight}")
    return int(dim)


def weyl_dim_pair(N: int, weight: HighestWeight) -> int:
    """dim V_λ⁺ + dim V_λ⁻ for even N with λ_r ≠ 0; plain weyl_dim otherwise."""
    if N % 2 == 0 and weight.entries and weight.entries[-1] != 0:
        return weyl_dim(N, weight) + weyl_dim(N, weight.flipped())
    return weyl_dim(N, weight)


def spin_weight(N: int, k: int) -> HighestWeight:
    """S_{k/2} = V_{(k/2, 1/2, …, 1/2)}."""
    r = group_rank(N)
    return HighestWeight((Fraction(k, 2),) + (HALF,) * (r - 1))


def higher_spin_weight(N: int, j: int) -> HighestWeight:
    """λ_j = (3/2, …, 3/2, 1/2, …, 1/2) with j entries equal to 3/2."""
    r = group_rank(N)
    if not 0 <= j <= r:
        raise UsageError(f"higher-spin index j={j} outside 0..{r} for Spin({N})")
    return HighestWeight((Fraction(3, 2),) * j + (HALF,) * (r - j))


def m1_weight(m: int, k: int) -> Optional[HighestWeight]:
    """
    ((2k+1)/2, 3/2, 1/2, …, 1/2) for Spin(m); None when the rank is too small
    to carry two leading entries.
    """
    r = group_rank(m)
    if r < 2:
        return None
    return HighestWeight((Fraction(2 * k + 1, 2), Fraction(3, 2)) + (HALF,) * (r - 2))


def m1_weyl_dimension(m: int, k: int) -> int:
    """Weyl dimension (± summed) attached to M¹ on ℝ^m; 0 when the weight does not exist."""
    weight = m1_weight(m, k)
    if weight is None:
        return 0
    return weyl_dim_pair(m, weight)


@dataclass(frozen=True)
class TensorDecompositionCheck:
    N: int
    j: int
    tensor_dim: int
    summand_dims: Tuple[int, ...]
    holds: bool


def tensor_decomposition_check(N: int, j: int) -> TensorDecompositionCheck:
    """dim(S ⊗ Λ^jℂ^N) = Σ_{i ≤ j} dim V_{λ_i} (± summed for even N), 0 ≤ j ≤ ⌊N/2⌋."""
    r = group_rank(N)
    if not 0 <= j <= r:
        raise UsageError(f"j={j} outside 0..{r} for Spin({N})")
    tensor_dim = 2 ** r * comb(N, j)
    summands = tuple(weyl_dim_pair(N, higher_spin_weight(N, i)) for i in range(j + 1))
    return TensorDecompositionCheck(N, j, tensor_dim, summands, tensor_dim == sum(summands))


def s32_dimension_check(m: int) -> Tuple[int, int]:
    """((m−1)·dim S, Weyl dimension of S_{3/2}), equal for every m ≥ 3."""
    return (m - 1) * 2 ** (m // 2), weyl_dim_pair(m, spin_weight(m, 3))
