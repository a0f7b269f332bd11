"""Exact rational parsing and rendering.

All quantitative work in this package happens on ``fractions.Fraction``
with arbitrary-precision integers.  Floats appear only as presentation,
via :func:`format_decimal`, and never feed back into computation.
"""

from __future__ import annotations

from fractions import Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"n"`` or a decimal literal into an exact Fraction.

    Decimal strings convert exactly: ``"0.8"`` becomes 4/5, not the binary
    float nearest to 0.8.
    """
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty rational string")
    try:
        return Fraction(stripped)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a rational number: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Canonical text form: ``"p/q"`` in lowest terms, or ``"n"`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_decimal(value: Fraction, digits: int = 6) -> str:
    """Fixed-point decimal rendering with ``digits`` places.

    Rounding is half away from zero, done in integer arithmetic so the
    output is identical on every platform.
    """
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    value = Fraction(value)
    negative = value < 0
    num = abs(value.numerator)
    den = value.denominator
    scale = 10**digits
    quo, rem = divmod(num * scale, den)
    if 2 * rem >= den:
        quo += 1
    whole, frac = divmod(quo, scale)
    sign = "-" if negative and quo else ""
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
