# proj/src/fields/spinor_fields.py

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from src.algebra.polynomial import (
    MultiPoly,
    constant,
    format_poly,
    homogeneous_degree,
    is_homogeneous_of,
    poly_ring,
    scale,
)
from src.algebra.scalar import Scalar, ScalarLike, to_scalar
from src.clifford.algebraic_maps import mu_components
from src.clifford.spinor_space import SpinorSpace, SpinorVec
from src.core.exceptions import UsageError


def _common_degree(polys: Sequence[MultiPoly]) -> Optional[int]:
    degrees = set()
    for p in polys:
        if not p:
            continue
        d = homogeneous_degree(p)
        if d is None:
            return None
        degrees.add(d)
    if len(degrees) != 1:
        return None
    return degrees.pop()


@dataclass(frozen=True)
class SpinorField:
    """A polynomial map ℝ^m → S, one polynomial per spinor coordinate."""

    space: SpinorSpace
    components: Tuple[MultiPoly, ...]

    def __post_init__(self):
        if len(self.components) != self.space.dim_s:
            raise UsageError(f"spinor field needs {self.space.dim_s} components, got {len(self.components)}")
        for p in self.components:
            if p.ring.ngens != self.space.m:
                raise UsageError(f"component lives in {p.ring.ngens} variables, expected {self.space.m}")

    @classmethod
    def zero(cls, space: SpinorSpace) -> "SpinorField":
        ring = poly_ring(space.m)
        return cls(space, tuple(ring.zero for _ in range(space.dim_s)))

    @classmethod
    def constant(cls, spinor: SpinorVec) -> "SpinorField":
        m = spinor.space.m
        return cls(spinor.space, tuple(constant(m, c) for c in spinor.coords))

    @classmethod
    def from_polys(cls, space: SpinorSpace, polys: Sequence[MultiPoly]) -> "SpinorField":
        return cls(space, tuple(polys))

    @property
    def coords_dim(self) -> int:
        return self.space.m

    def __add__(self, other: "SpinorField") -> "SpinorField":
        return SpinorField(self.space, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "SpinorField") -> "SpinorField":
        return SpinorField(self.space, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "SpinorField":
        return SpinorField(self.space, tuple(-a for a in self.components))

    def scaled(self, c: ScalarLike) -> "SpinorField":
        s = to_scalar(c)
        return SpinorField(self.space, tuple(scale(a, s) for a in self.components))

    def times_poly(self, f: MultiPoly) -> "SpinorField":
        return SpinorField(self.space, tuple(a * f for a in self.components))

    def is_zero(self) -> bool:
        return not any(self.components)

    def homogeneous_degree(self) -> Optional[int]:
        return _common_degree(self.components)

    def is_homogeneous_of(self, k: int) -> bool:
        return all(is_homogeneous_of(p, k) for p in self.components)

    def format(self) -> List[Tuple[int, str]]:
        """Canonical text: (component index, polynomial string) for nonzero components."""
        return [(b, format_poly(p)) for b, p in enumerate(self.components) if p]


@dataclass(frozen=True)
class OneFormField:
    """Ψ = Σ_i ψ_i ⊗ dx^i with polynomial spinor fields ψ_i."""

    space: SpinorSpace
    components: Tuple[SpinorField, ...]

    def __post_init__(self):
        if len(self.components) != self.space.m:
            raise UsageError(f"one-form field needs {self.space.m} components, got {len(self.components)}")

    @classmethod
    def zero(cls, space: SpinorSpace) -> "OneFormField":
        return cls(space, tuple(SpinorField.zero(space) for _ in range(space.m)))

    @classmethod
    def from_raw(cls, space: SpinorSpace, raw: Sequence[Sequence[MultiPoly]]) -> "OneFormField":
        return cls(space, tuple(SpinorField(space, tuple(comp)) for comp in raw))

    def raw(self) -> List[Tuple[MultiPoly, ...]]:
        return [c.components for c in self.components]

    def __add__(self, other: "OneFormField") -> "OneFormField":
        return OneFormField(self.space, tuple(a + b for a, b in zip(self.components, other.components)))

    def __sub__(self, other: "OneFormField") -> "OneFormField":
        return OneFormField(self.space, tuple(a - b for a, b in zip(self.components, other.components)))

    def __neg__(self) -> "OneFormField":
        return OneFormField(self.space, tuple(-a for a in self.components))

    def scaled(self, c: ScalarLike) -> "OneFormField":
        return OneFormField(self.space, tuple(a.scaled(c) for a in self.components))

    def times_poly(self, f: MultiPoly) -> "OneFormField":
        return OneFormField(self.space, tuple(a.times_poly(f) for a in self.components))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def is_admissible(self) -> bool:
        """RS-admissible: μ(Ψ(x)) = 0 as a polynomial identity."""
        return not any(mu_components(self.space, self.raw()))

    def homogeneous_degree(self) -> Optional[int]:
        return _common_degree([p for c in self.components for p in c.components])

    def is_homogeneous_of(self, k: int) -> bool:
        return all(c.is_homogeneous_of(k) for c in self.components)

    def format(self) -> List[Tuple[int, int, str]]:
        """(form index i, spinor index b, polynomial string) for nonzero entries."""
        return [(i, b, text) for i, c in enumerate(self.components) for b, text in c.format()]


@dataclass(frozen=True)
class KFormField:
    """
    Spinor-valued k-form Σ_I ω_I dx^I over strictly increasing 0-based index
    tuples I; only nonzero components are stored.
    """

    space: SpinorSpace
    degree: int
    components: Dict[Tuple[int, ...], SpinorField]

    def __post_init__(self):
        if not 0 <= self.degree <= self.space.m:
            raise UsageError(f"form degree {self.degree} outside 0..{self.space.m}")
        for idx in self.components:
            if len(idx) != self.degree or any(a >= b for a, b in zip(idx, idx[1:])):
                raise UsageError(f"multi-index {idx} is not strictly increasing of length {self.degree}")
            if any(not 0 <= a < self.space.m for a in idx):
                raise UsageError(f"multi-index {idx} out of range")

    @classmethod
    def build(cls, space: SpinorSpace, degree: int, components: Dict[Tuple[int, ...], SpinorField]) -> "KFormField":
        return cls(space, degree, {idx: f for idx, f in components.items() if not f.is_zero()})

    @classmethod
    def zero(cls, space: SpinorSpace, degree: int) -> "KFormField":
        return cls(space, degree, {})

    @classmethod
    def from_one_form(cls, form: OneFormField) -> "KFormField":
        return cls.build(form.space, 1, {(i,): c for i, c in enumerate(form.components)})

    @classmethod
    def from_spinor_field(cls, field: SpinorField) -> "KFormField":
        return cls.build(field.space, 0, {(): field})

    def component(self, idx: Tuple[int, ...]) -> SpinorField:
        return self.components.get(idx, SpinorField.zero(self.space))

    def __add__(self, other: "KFormField") -> "KFormField":
        if other.degree != self.degree:
            raise UsageError("cannot add forms of different degree")
        merged = dict(self.components)
        for idx, f in other.components.items():
            merged[idx] = merged[idx] + f if idx in merged else f
        return KFormField.build(self.space, self.degree, merged)

    def __neg__(self) -> "KFormField":
        return KFormField(self.space, self.degree, {idx: -f for idx, f in self.components.items()})

    def __sub__(self, other: "KFormField") -> "KFormField":
        return self + (-other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KFormField):
            return NotImplemented
        return (
            self.space == other.space
            and self.degree == other.degree
            and (self - other).is_zero()
        )

    __hash__ = None  # type: ignore[assignment]

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.components.values())

    def to_one_form(self) -> OneFormField:
        if self.degree != 1:
            raise UsageError(f"not a 1-form (degree {self.degree})")
        return OneFormField(self.space, tuple(self.component((i,)) for i in range(self.space.m)))

    def to_spinor_field(self) -> SpinorField:
        if self.degree != 0:
            raise UsageError(f"not a 0-form (degree {self.degree})")
        return self.component(())


def constant_spinor_field(space: SpinorSpace, values: Sequence[ScalarLike]) -> SpinorField:
    return SpinorField.constant(SpinorVec.of(space, values))


def spinor_times_poly(space: SpinorSpace, spinor: Sequence[Scalar], f: MultiPoly) -> SpinorField:
    """The field f(x)·s for a constant spinor s."""
    return SpinorField(space, tuple(scale(f, to_scalar(c)) for c in spinor))
