# proj/src/index/index_calculator.py

import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ValidationError, field_validator, model_validator

from src.core.base_processor import BaseProcessor
from src.core.exceptions import InputFileError, UsageError
from src.index.bundles import (
    FormalBundle,
    ahat,
    ahat_by_roots,
    ch_cotangent_class,
    ch_exterior_power_class,
    chern_root_expansion,
    ring_for_dim,
)
from src.index.char_class import CharClass, Monomial, TruncatedPontryaginRing, monomial_degree, parse_monomial

OperatorTag = Literal["D_1/2", "D_T", "D_3/2", "D_j"]
OPERATOR_TAGS = ("D_1/2", "D_T", "D_3/2", "D_j")

PRINTED_DIM8_RS = {"p1^2": Fraction(543, 5760), "p2": Fraction(-996, 5760)}
PRINTED_DIM8_RELATION = (Fraction(249), Fraction(-21, 144))
PRINTED_AHAT_DIM8 = {"p1^2": Fraction(7, 5760), "p2": Fraction(-4, 5760)}


class ExactRational(BaseModel):
    num: int
    den: int

    @classmethod
    def of(cls, value: Union[int, Fraction]) -> "ExactRational":
        value = Fraction(value)
        return cls(num=value.numerator, den=value.denominator)

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


def _parse_number(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError("booleans are not characteristic numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        return Fraction(int(value["num"]), int(value["den"]))
    raise ValueError(f"not an exact rational: {value!r}")


class ManifoldDescriptor(BaseModel):
    """
    Integration data of a closed manifold: its dimension and the Pontryagin
    numbers of the top-degree monomials, e.g. {"dim": 8, "pontryagin_numbers":
    {"p1^2": 0, "p2": -1440}}. Values are integers, "a/b" strings or
    {"num", "den"} objects.
    """

    dim: int
    pontryagin_numbers: Dict[str, Any] = {}

    @field_validator("dim")
    @classmethod
    def _positive_dim(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"dimension must be positive, got {value}")
        return value

    @model_validator(mode="after")
    def _top_degree_only(self) -> "ManifoldDescriptor":
        if self.dim % 2:
            return self
        generators = max(1, self.dim // 4)
        for key, value in self.pontryagin_numbers.items():
            try:
                monom = parse_monomial(key, generators)
                _parse_number(value)
            except (UsageError, ValueError, ZeroDivisionError) as e:
                raise ValueError(f"pontryagin_numbers[{key!r}]: {e}")
            if monomial_degree(monom) != self.dim:
                raise ValueError(f"monomial {key!r} has degree {monomial_degree(monom)}, expected {self.dim}")
        return self

    def numbers(self, ring: TruncatedPontryaginRing) -> Dict[Monomial, Fraction]:
        out: Dict[Monomial, Fraction] = {}
        for key, value in self.pontryagin_numbers.items():
            monom = parse_monomial(key, ring.num_generators)
            out[monom] = out.get(monom, Fraction(0)) + _parse_number(value)
        return out


def load_descriptor(path: Union[str, Path]) -> ManifoldDescriptor:
    """
    Read a descriptor document

    Raises:
        InputFileError: if the file is missing, not JSON, or fails validation
    """
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except FileNotFoundError:
        raise InputFileError(f"descriptor not found: {path}", path=str(path))
    except (OSError, json.JSONDecodeError) as e:
        raise InputFileError(f"descriptor is not valid JSON: {e}", path=str(path))
    try:
        return ManifoldDescriptor.model_validate(raw)
    except ValidationError as e:
        raise InputFileError(f"invalid descriptor: {e.errors(include_url=False)[0]['msg']}", path=str(path))


class IndexReport(BaseModel):
    operator: str
    j: Optional[int] = None
    dim: int
    symbolic_class: str
    index: Optional[ExactRational] = None
    integral: Optional[bool] = None
    note: Optional[str] = None
    forms: Optional["HigherSpinIndexForms"] = None


def _check_j(dim: int, j: Optional[int]) -> int:
    n = dim // 2
    if j is None or not 1 <= j < n:
        raise UsageError(f"D_j needs 1 ≤ j < {n} in dimension {dim}, got j={j}")
    return j


@lru_cache(maxsize=None)
def _integrand(dim: int, operator: str, j: Optional[int]) -> CharClass:
    ring = ring_for_dim(dim)
    a_hat = ahat(ring)
    if operator == "D_1/2":
        return a_hat
    if operator == "D_T":
        return ch_cotangent_class(ring) * a_hat
    if operator == "D_3/2":
        return (ch_cotangent_class(ring) + 1) * a_hat
    if operator == "D_j":
        j = _check_j(dim, j)
        twist = ch_exterior_power_class(ring, j) + ch_exterior_power_class(ring, j - 1)
        return twist * a_hat * ((-1) ** (j + 1))
    raise UsageError(f"unknown operator {operator!r}; expected one of {OPERATOR_TAGS}")


def symbolic_integrand(dim: int, operator: str, j: Optional[int] = None) -> CharClass:
    """The full truncated integrand of an operator's index formula."""
    return _integrand(dim, operator, j if operator == "D_j" else None)


def symbolic_index_class(dim: int, operator: str, j: Optional[int] = None) -> CharClass:
    """
    Top-degree component of an operator's index integrand

    Args:
        dim (int): Manifold dimension 2n (supported: 4..12 even)
        operator (str): 'D_1/2', 'D_T', 'D_3/2' or 'D_j'
        j (Optional[int]): Higher-spin index for 'D_j'

    Returns:
        CharClass: e.g. (19/24)p1 for (4, 'D_3/2')
    """
    return symbolic_integrand(dim, operator, j).top()


def _odd_report(descriptor: ManifoldDescriptor, operator: str, j: Optional[int]) -> IndexReport:
    return IndexReport(
        operator=operator,
        j=j,
        dim=descriptor.dim,
        symbolic_class="0",
        index=ExactRational.of(0),
        integral=True,
        note="odd-dimensional manifold: the index vanishes",
    )


def evaluate_index(descriptor: ManifoldDescriptor, operator: str, j: Optional[int] = None) -> IndexReport:
    if operator not in OPERATOR_TAGS:
        raise UsageError(f"unknown operator {operator!r}; expected one of {OPERATOR_TAGS}")
    if descriptor.dim % 2:
        return _odd_report(descriptor, operator, j)
    top = symbolic_index_class(descriptor.dim, operator, j)
    value = top.pair(descriptor.numbers(top.ring))
    return IndexReport(
        operator=operator,
        j=j if operator == "D_j" else None,
        dim=descriptor.dim,
        symbolic_class=top.to_string(),
        index=ExactRational.of(value),
        integral=value.denominator == 1,
    )


def index_dirac(descriptor: ManifoldDescriptor) -> IndexReport:
    return evaluate_index(descriptor, "D_1/2")


def index_twisted_cotangent(descriptor: ManifoldDescriptor) -> IndexReport:
    return evaluate_index(descriptor, "D_T")


def index_rs(descriptor: ManifoldDescriptor) -> IndexReport:
    return evaluate_index(descriptor, "D_3/2")


def index_hsd(descriptor: ManifoldDescriptor, j: int) -> IndexReport:
    """Index of D_j: (−1)^{j+1} ∫ (Ch Λ^j + Ch Λ^{j−1})·Â."""
    return evaluate_index(descriptor, "D_j", j)


def index_twisted(descriptor: ManifoldDescriptor, bundle: FormalBundle) -> ExactRational:
    """∫ Â·Ch(W) for a formal bundle W over the descriptor's root system."""
    if descriptor.dim % 2:
        return ExactRational.of(0)
    ring = ring_for_dim(descriptor.dim)
    integrand = bundle.chern_character(ring) * ahat(ring)
    return ExactRational.of(integrand.pair(descriptor.numbers(ring)))


class HigherSpinIndexForms(BaseModel):
    dim: int
    j: int
    sum_form: str
    difference_form: str
    sum_index: Optional[ExactRational] = None
    difference_index: Optional[ExactRational] = None


def hsd_index_forms(dim: int, j: int, descriptor: Optional[ManifoldDescriptor] = None) -> HigherSpinIndexForms:
    """
    The D_j index class by the recursion-derived signed sum and by the plain
    difference ∫(Ch Λ^{j−1} − Ch Λ^j)·Â, side by side.
    """
    j = _check_j(dim, j)
    ring = ring_for_dim(dim)
    difference = ((ch_exterior_power_class(ring, j - 1) - ch_exterior_power_class(ring, j)) * ahat(ring)).top()
    summed = symbolic_index_class(dim, "D_j", j)
    forms = HigherSpinIndexForms(dim=dim, j=j, sum_form=summed.to_string(), difference_form=difference.to_string())
    if descriptor is not None:
        numbers = descriptor.numbers(ring)
        forms.sum_index = ExactRational.of(summed.pair(numbers))
        forms.difference_index = ExactRational.of(difference.pair(numbers))
    return forms


IndexReport.model_rebuild()


class CoefficientComparison(BaseModel):
    monomial: str
    recomputed: ExactRational
    by_roots: ExactRational
    printed: ExactRational
    agrees_with_printed: bool
    paths_agree: bool


class Dim8Audit(BaseModel):
    ahat: List[CoefficientComparison]
    rarita_schwinger: List[CoefficientComparison]
    relation_recomputed: List[ExactRational]
    relation_printed: List[ExactRational]
    relation_agrees: bool

    @property
    def self_consistent(self) -> bool:
        return all(c.paths_agree for c in self.ahat + self.rarita_schwinger)


def _compare(newton: CharClass, roots: CharClass, printed: Dict[str, Fraction]) -> List[CoefficientComparison]:
    out = []
    for key, value in printed.items():
        a, b = newton.coefficient(key), roots.coefficient(key)
        out.append(
            CoefficientComparison(
                monomial=key,
                recomputed=ExactRational.of(a),
                by_roots=ExactRational.of(b),
                printed=ExactRational.of(value),
                agrees_with_printed=a == value,
                paths_agree=a == b,
            )
        )
    return out


def dim8_audit() -> Dim8Audit:
    """
    Degree-8 coefficients of Â and of the Rarita-Schwinger integrand
    (Ch T*_C + 1)·Â, recomputed by power sums and by Chern roots and set
    beside the printed values, together with the relation
    Ind D_3/2 = α·Ind D_1/2 + β·∫p1².
    """
    ring = ring_for_dim(8)
    a_hat = ahat(ring).top()
    rs = symbolic_index_class(8, "D_3/2")

    a_hat_roots = chern_root_expansion(ring, [ahat_by_roots(ring)]).top()
    twist = FormalBundle.cotangent(ring.num_roots).direct_sum(FormalBundle.trivial(ring.num_roots, 1))
    rs_roots = chern_root_expansion(ring, [twist.ch_roots(ring.max_degree), ahat_by_roots(ring)]).top()

    # rs = α·Â + β·p1² fixes α from the p2 coefficients
    alpha = rs.coefficient("p2") / a_hat.coefficient("p2")
    beta = rs.coefficient("p1^2") - alpha * a_hat.coefficient("p1^2")
    printed_alpha, printed_beta = PRINTED_DIM8_RELATION
    return Dim8Audit(
        ahat=_compare(a_hat, a_hat_roots, PRINTED_AHAT_DIM8),
        rarita_schwinger=_compare(rs, rs_roots, PRINTED_DIM8_RS),
        relation_recomputed=[ExactRational.of(alpha), ExactRational.of(beta)],
        relation_printed=[ExactRational.of(printed_alpha), ExactRational.of(printed_beta)],
        relation_agrees=(alpha, beta) == (printed_alpha, printed_beta),
    )


class IndexCalculator(BaseProcessor):
    """
    Evaluates an operator's index for a descriptor document, or reports the
    symbolic class alone when no descriptor is given.
    """

    def process(self, input_data: Dict[str, Any]) -> IndexReport:
        operator = input_data.get("operator", "D_1/2")
        j = input_data.get("j")
        descriptor = input_data.get("descriptor")
        if isinstance(descriptor, (str, Path)):
            descriptor = load_descriptor(descriptor)

        if descriptor is None:
            dim = int(input_data.get("dim", 4))
            if operator not in OPERATOR_TAGS:
                raise UsageError(f"unknown operator {operator!r}; expected one of {OPERATOR_TAGS}")
            top = symbolic_index_class(dim, operator, j)
            self.log_info(f"{operator} in dimension {dim}: {top.to_string()}")
            report = IndexReport(
                operator=operator, j=j if operator == "D_j" else None, dim=dim, symbolic_class=top.to_string()
            )
            if operator == "D_j":
                report.forms = hsd_index_forms(dim, j)
            return report

        report = evaluate_index(descriptor, operator, j)
        if operator == "D_j" and descriptor.dim % 2 == 0:
            report.forms = hsd_index_forms(descriptor.dim, j, descriptor)
        self.log_info(f"{operator} on a {descriptor.dim}-manifold: index {report.index.num}/{report.index.den}")
        return report
