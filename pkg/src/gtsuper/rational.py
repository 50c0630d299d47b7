"""Exact rational parsing and formatting ("p/q" strings, never floats)."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

RationalLike = Union[int, str, Fraction]


def Q(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a Fraction, rejecting floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text:
            raise ValueError("empty rational string")
        if any(c in text for c in ".eE"):
            raise ValueError(f"decimal notation not accepted: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def fmt(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_list(text: str) -> tuple[Fraction, ...]:
    """Parse a comma separated list such as ``"3,1/2,-5"``."""
    return tuple(Q(part) for part in text.split(",") if part.strip())


def is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def fmt_all(values: Iterable[Fraction]) -> list[str]:
    return [fmt(v) for v in values]
