"""Exact rational helpers on top of :class:`fractions.Fraction`.

Fraction already keeps numerator and denominator coprime with a positive
denominator, so it serves directly as the number type. This module only adds
strict parsing (no binary floats ever reach a Fraction) and formatting.
"""

from fractions import Fraction
from numbers import Rational as _Rational
import re

Rational = Fraction

_NUMBER = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$|^[+-]?\d+\s*/\s*\d+$")


def to_rational(value):
    """Convert an int, Fraction or numeric string to an exact Fraction.

    Strings may be integers, decimals (``"0.25"``) or ratios (``"3/4"``).
    Floats are rejected because their binary value is rarely what was meant.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, _Rational):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _NUMBER.match(text):
            raise ValueError(f"not an exact number: {value!r}")
        result = Fraction(text.replace(" ", ""))
        return result
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def fmt(q):
    """Render as ``"p"`` or ``"p/q"``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def fmt_decimal(q, digits=6):
    q = Fraction(q)
    return f"{q.numerator / q.denominator:.{digits}g}"


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
