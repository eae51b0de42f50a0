"""Shared numeric plumbing for the dual exact/float backends.

Exact mode works on ints and fractions.Fraction (tolerances collapse to 0);
float mode works on binary floats with explicit tolerances.  Which mode a
computation runs in is decided by the number types it is handed, so the two
backends share one code path everywhere.
"""

from __future__ import annotations

from fractions import Fraction

Number = int | float | Fraction

#: Default zero/feasibility tolerance in float mode.
FLOAT_TOL = 1e-9


def is_exact(x: Number) -> bool:
    """True when x carries no rounding (int or Fraction, not float)."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(xs) -> bool:
    return all(is_exact(x) for x in xs)


def parse_number(text: str, exact: bool = False) -> Number:
    """Parse a decimal or `p/q` rational literal.

    Exact mode returns a Fraction (decimals convert exactly, e.g. 0.7 -> 7/10);
    float mode returns a float.
    """
    text = text.strip()
    if exact:
        return Fraction(text)
    if "/" in text:
        num, _, den = text.partition("/")
        return float(num) / float(den)
    return float(text)


def format_number(x: Number) -> str:
    """Human-readable form: rationals as p/q (or a bare integer), floats compactly."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    return f"{x:.12g}"


def as_float(x: Number | None) -> float | None:
    return None if x is None else float(x)
