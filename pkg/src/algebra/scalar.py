# proj/src/algebra/scalar.py

import re
from fractions import Fraction
from typing import Tuple, Union

from sympy import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianRational

from src.core.exceptions import UsageError

# Gaussian rational a + b*i with reduced big-integer fractions.
Scalar = GaussianRational
ScalarLike = Union[int, Fraction, GaussianRational, Tuple]

ZERO = QQ_I.zero
ONE = QQ_I.one
I = QQ_I(0, 1)


def _qq(value) -> object:
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def scalar(re_part: Union[int, Fraction] = 0, im_part: Union[int, Fraction] = 0) -> Scalar:
    """Build the Gaussian rational re_part + im_part*i."""
    return QQ_I(_qq(re_part), _qq(im_part))


def to_scalar(value: ScalarLike) -> Scalar:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, tuple):
        return scalar(*value)
    if isinstance(value, (int, Fraction)):
        return scalar(value)
    raise UsageError(f"cannot interpret {value!r} as a Gaussian rational")


def real_part(a: Scalar) -> Fraction:
    return Fraction(int(a.x.numerator), int(a.x.denominator))


def imag_part(a: Scalar) -> Fraction:
    return Fraction(int(a.y.numerator), int(a.y.denominator))


def is_zero(a: Scalar) -> bool:
    # GaussianRational == int is never True, so test truthiness.
    return not a


def is_real(a: Scalar) -> bool:
    return not a.y


def _fmt_fraction(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_scalar(a: Scalar) -> str:
    """
    Canonical text of a Gaussian rational: '3/2', '-i', '2/3*i', '(1/2+3*i)'.
    """
    re_f, im_f = real_part(a), imag_part(a)
    if im_f == 0:
        return _fmt_fraction(re_f)
    if im_f == 1:
        im_text = "i"
    elif im_f == -1:
        im_text = "-i"
    else:
        im_text = f"{_fmt_fraction(im_f)}*i"
    if re_f == 0:
        return im_text
    sign = "" if im_text.startswith("-") else "+"
    return f"({_fmt_fraction(re_f)}{sign}{im_text})"


_RATIONAL = r"-?\d+(?:/\d+)?"
_COMPLEX_RE = re.compile(rf"^\((?P<re>{_RATIONAL})(?P<im>[+-](?:\d+(?:/\d+)?\*)?i)\)$")
_IMAG_RE = re.compile(rf"^(?P<im>-?(?:\d+(?:/\d+)?\*)?i)$")
_REAL_RE = re.compile(rf"^(?P<re>{_RATIONAL})$")


def _parse_imag(text: str) -> Fraction:
    body = text[:-1].rstrip("*")
    if body in ("", "+"):
        return Fraction(1)
    if body == "-":
        return Fraction(-1)
    return Fraction(body)


def parse_scalar(text: str) -> Scalar:
    """Inverse of format_scalar."""
    text = text.strip()
    match = _REAL_RE.match(text)
    if match:
        return scalar(Fraction(match.group("re")))
    match = _IMAG_RE.match(text)
    if match:
        return scalar(0, _parse_imag(match.group("im")))
    match = _COMPLEX_RE.match(text)
    if match:
        return scalar(Fraction(match.group("re")), _parse_imag(match.group("im")))
    raise UsageError(f"malformed scalar text: {text!r}")
