"""Exact rational arithmetic.

Python integers are already arbitrary precision and :class:`fractions.Fraction`
keeps its values in lowest terms with a positive denominator, so ``Rational`` is
simply ``Fraction``.  The helpers below fix the error type and the text form.
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction

from .errors import DivisionByZero, ParseError

Rational = Fraction

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_RAT_RE = re.compile(r"\s*(-?)\s*(\d+)(?:\s*/\s*(\d+))?\s*\Z")


def rat_normalize(n: int, d: int) -> Fraction:
    """Return ``n/d`` in lowest terms with a positive denominator."""
    if d == 0:
        raise DivisionByZero(f"{n}/0")
    return Fraction(n, d)


def rat_arith(op: str, a: Fraction, b: Fraction) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown rational operation {op!r}") from None
    if op == "div" and b == 0:
        raise DivisionByZero(f"{a} / 0")
    return fn(Fraction(a), Fraction(b))


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if m is None:
        raise ParseError(1, 1, "rational of the form a or a/b", text)
    sign, num, den = m.groups()
    n = int(num)
    d = int(den) if den is not None else 1
    if d == 0:
        raise DivisionByZero(text)
    return Fraction(-n if sign else n, d)


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"
