"""Exact value domain shared by the arithmetic rule sets.

Finite quantities are stdlib :class:`~fractions.Fraction` objects, so
everything in the package computes exactly, never in floating point.
Three further variants cover outcomes that the dated rule sets can
produce besides a finite number:

* ``KHAHARA``     - the zero-denominator quantity (infinity); carries no
                    payload.
* ``Unresolved``  - a quotient a/0 kept exactly as written, committed to
                    neither a finite value nor infinity.
* ``ZeroProduct`` - a pending a*0. It displays as 0, but the factor a is
                    retained so that a later division by zero can cancel
                    it exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class RuleSet(enum.Enum):
    """Which set of arithmetic rules governs an evaluation."""

    BRAHMAGUPTA628 = "brahmagupta"
    BHASKARA1150 = "bhaskara"
    MODERN = "modern"

    @classmethod
    def from_name(cls, name: str) -> "RuleSet":
        for member in cls:
            if member.value == name:
                return member
        raise ValueError(f"unknown rule set {name!r}")


@dataclass(frozen=True)
class Finite:
    """An exact rational quantity."""

    value: Fraction

    def __post_init__(self):
        object.__setattr__(self, "value", Fraction(self.value))


@dataclass(frozen=True)
class Khahara:
    """The zero-denominator quantity; use the module-level ``KHAHARA``."""


@dataclass(frozen=True)
class Unresolved:
    """A quotient a/0 recorded verbatim, with a nonzero."""

    numerator: Fraction

    def __post_init__(self):
        numerator = Fraction(self.numerator)
        if numerator == 0:
            raise ValueError("an unresolved quotient needs a nonzero numerator")
        object.__setattr__(self, "numerator", numerator)


@dataclass(frozen=True)
class ZeroProduct:
    """A pending a*0 whose factor a is kept for later cancellation."""

    factor: Fraction

    def __post_init__(self):
        object.__setattr__(self, "factor", Fraction(self.factor))


Value = Union[Finite, Khahara, Unresolved, ZeroProduct]

KHAHARA = Khahara()

ZERO = Finite(Fraction(0))


def finite(x) -> Finite:
    """Build a Finite from anything Fraction accepts (int, str, Fraction)."""
    return Finite(Fraction(x))


def normalize(v: Value) -> Value:
    """Canonical form of a value.

    Finite rationals are already reduced by Fraction itself; a pending
    product with factor 0 is plain 0; everything else passes through.
    """
    if isinstance(v, ZeroProduct) and v.factor == 0:
        return ZERO
    return v


def format_value(v: Value) -> str:
    """Display form. A pending a*0 prints as 0, hiding its factor."""
    if isinstance(v, Finite):
        return str(v.value)
    if isinstance(v, Khahara):
        return "khahara (∞)"
    if isinstance(v, Unresolved):
        return f"{v.numerator}/0 (unresolved)"
    if isinstance(v, ZeroProduct):
        return "0"
    raise TypeError(f"not a Value: {v!r}")
