"""Naturals and rationals extended by a single infinite value."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


@total_ordering
class _Infinite:
    """The tag INFINITE: larger than every finite value, absorbing under addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("lojasiewicz.INFINITE")

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        return (_Infinite, ())


INFINITE = _Infinite()


def is_infinite(value) -> bool:
    return value is INFINITE


def format_extended(value) -> str:
    """Render an extended natural or rational as ``"inf"`` or ``"num/den"``."""
    if value is INFINITE:
        return "inf"
    return str(Fraction(value))


def parse_extended(text: str):
    if text == "inf":
        return INFINITE
    q = Fraction(text)
    return int(q) if q.denominator == 1 else q
