"""Exact-rational rendering and wire encoding.

All scores are computed as `fractions.Fraction`; floats appear only in
rendered strings. On the wire a rational is an object with three fields:
`decimal` (plain decimal string, up to 12 fractional digits), `rational`
("p/q", lossless) and `display` (2-decimal round-half-up, the only form
human reports show).
"""

from __future__ import annotations

from fractions import Fraction

from twingauge.errors import ParseError

DECIMAL_PLACES = 12


def decimal_string(x: Fraction, places: int = DECIMAL_PLACES) -> str:
    """Exact decimal expansion truncated to `places` fractional digits.

    Terminating expansions keep their natural length ("0.75", "1"); only
    non-terminating ones are cut at `places`.
    """
    sign = "-" if x < 0 else ""
    n, d = abs(x.numerator), x.denominator
    whole, rem = divmod(n, d)
    if rem == 0:
        return f"{sign}{whole}"
    digits = []
    for _ in range(places):
        rem *= 10
        digit, rem = divmod(rem, d)
        digits.append(str(digit))
        if rem == 0:
            break
    return f"{sign}{whole}." + "".join(digits)


def display_2dp(x: Fraction) -> str:
    """Round-half-up to two decimals, e.g. 29/42 -> \"0.69\", 1 -> \"1.00\"."""
    sign = "-" if x < 0 else ""
    v = abs(x)
    cents = (200 * v.numerator + v.denominator) // (2 * v.denominator)
    return f"{sign}{cents // 100}.{cents % 100:02d}"


def rational_string(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def to_wire(x: Fraction) -> dict[str, str]:
    """Encode for JSON: {"decimal", "rational", "display"}."""
    return {
        "decimal": decimal_string(x),
        "rational": rational_string(x),
        "display": display_2dp(x),
    }


def from_wire(obj) -> Fraction:
    """Decode a wire rational; the `rational` field is authoritative."""
    if isinstance(obj, dict) and "rational" in obj:
        return parse_rational(obj["rational"])
    if isinstance(obj, str):
        return parse_rational(obj)
    if isinstance(obj, int):
        return Fraction(obj)
    raise ParseError(f"not a rational value: {obj!r}")


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"invalid rational '{text}'") from exc
