# proj/src/fields/sampling.py
"""Seeded random fields for property checks."""

import random
from fractions import Fraction
from itertools import combinations
from typing import Optional

from src.algebra.polynomial import MultiPoly, monomials_of_degree, poly_ring
from src.algebra.scalar import Scalar, scalar
from src.clifford.spinor_space import SpinorSpace
from src.fields.operators import project_threehalf_field
from src.fields.spinor_fields import KFormField, OneFormField, SpinorField

_DENOMINATORS = (1, 1, 1, 2, 3)


def random_scalar(rng: random.Random, entry_range: int = 2) -> Scalar:
    re_part = Fraction(rng.randint(-entry_range, entry_range), rng.choice(_DENOMINATORS))
    im_part = Fraction(rng.randint(-entry_range, entry_range), rng.choice(_DENOMINATORS))
    return scalar(re_part, im_part)


def random_poly(
    num_vars: int,
    max_degree: int,
    rng: random.Random,
    max_terms: int = 3,
    degree: Optional[int] = None,
) -> MultiPoly:
    """
    Random polynomial with at most max_terms terms. When degree is given the
    result is homogeneous of that degree, otherwise degrees range over 0..max_degree.
    """
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = degree if degree is not None else rng.randint(0, max_degree)
        exps = monomials_of_degree(num_vars, d)
        terms[rng.choice(exps)] = random_scalar(rng)
    return poly_ring(num_vars).from_dict(terms)


def random_spinor_field(
    space: SpinorSpace,
    max_degree: int,
    rng: random.Random,
    max_terms: int = 3,
    degree: Optional[int] = None,
) -> SpinorField:
    return SpinorField(
        space,
        tuple(random_poly(space.m, max_degree, rng, max_terms, degree) for _ in range(space.dim_s)),
    )


def random_one_form(
    space: SpinorSpace,
    max_degree: int,
    rng: random.Random,
    max_terms: int = 3,
    degree: Optional[int] = None,
) -> OneFormField:
    return OneFormField(
        space,
        tuple(random_spinor_field(space, max_degree, rng, max_terms, degree) for _ in range(space.m)),
    )


def random_admissible_one_form(
    space: SpinorSpace,
    max_degree: int,
    rng: random.Random,
    max_terms: int = 3,
    degree: Optional[int] = None,
) -> OneFormField:
    """π_{3/2} of a random one-form, hence μ = 0 identically."""
    return project_threehalf_field(random_one_form(space, max_degree, rng, max_terms, degree))


def random_kform(
    space: SpinorSpace,
    form_degree: int,
    max_degree: int,
    rng: random.Random,
    max_terms: int = 2,
    max_components: int = 3,
) -> KFormField:
    indices = list(combinations(range(space.m), form_degree))
    chosen = rng.sample(indices, min(max_components, len(indices)))
    return KFormField.build(
        space,
        form_degree,
        {idx: random_spinor_field(space, max_degree, rng, max_terms) for idx in sorted(chosen)},
    )
