"""Positional numerals without a zero digit, Babylonian style.

A numeral in this notation is a run of base-b digits (1..b-1) in which a
vacant space stands for empty places. The space only ever sits between
two digits; nothing marks empty places at the end of a number, which is
why trailing magnitude is unrecoverable: the digit string 3 1 2 reads as
312 or 3120 or 31200..., and nothing in the notation says which.

This module makes that ambiguity explicit and finite. A ``GapNumeral``
holds the digits and gaps exactly as written; ``interpretations`` lists
every integer the numeral can denote under stated bounds (how many empty
places one gap may span, how many empty places may silently follow the
last digit); ``render_gap`` is the deliberately lossy encoder, returning
how many trailing places it had to drop.

Text form: whitespace-separated decimal digit values with ``_`` for a
gap, e.g. ``"1 _ 23 45"`` in base 60.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError, RangeError

# A slot is either a digit value or None for a vacant space.
Slot = "int | None"
GAP = None


@dataclass(frozen=True)
class GapNumeral:
    """A validated digit/gap sequence in a fixed base (default 60)."""

    base: int
    slots: tuple

    def __post_init__(self):
        if self.base < 2:
            raise ValueError(f"base must be at least 2, got {self.base}")
        slots = tuple(self.slots)
        object.__setattr__(self, "slots", slots)
        if not slots:
            raise ParseError("empty numeral")
        if slots[0] is GAP or slots[-1] is GAP:
            raise ParseError(
                "a vacant space must sit between two digits, "
                "never at the start or end"
            )
        for s in slots:
            if s is GAP:
                continue
            if not isinstance(s, int) or not 1 <= s <= self.base - 1:
                raise ParseError(
                    f"digit {s!r} not in 1..{self.base - 1}; "
                    "there is no zero digit in this notation"
                )

    def token_text(self) -> str:
        return " ".join("_" if s is GAP else str(s) for s in self.slots)

    @property
    def gap_count(self) -> int:
        return sum(1 for s in self.slots if s is GAP)


@dataclass(frozen=True)
class InterpretationBounds:
    """Finite bounds for enumerating readings.

    ``max_gap_width`` is how many empty places a single written gap may
    stand for (at least 1). ``max_trailing`` is how many empty places may
    be assumed after the last digit (0 disallows trailing ambiguity).
    """

    max_gap_width: int = 1
    max_trailing: int = 1

    def __post_init__(self):
        if self.max_gap_width < 1:
            raise ValueError("max_gap_width must be at least 1")
        if self.max_trailing < 0:
            raise ValueError("max_trailing must be at least 0")


DEFAULT_BOUNDS = InterpretationBounds()


def parse_gap(tokens: str, base: int = 60) -> GapNumeral:
    """Parse whitespace-separated digit values and ``_`` gap markers."""
    parts = tokens.split()
    if not parts:
        raise ParseError("empty numeral")
    slots = []
    for part in parts:
        if part == "_":
            slots.append(GAP)
            continue
        try:
            digit = int(part)
        except ValueError:
            raise ParseError(f"not a digit value or gap marker: {part!r}") from None
        if digit == 0:
            raise ParseError("0 is not a digit here; write a gap ('_') between digits")
        if not 1 <= digit <= base - 1:
            raise ParseError(f"digit {digit} not in 1..{base - 1}")
        slots.append(digit)
    return GapNumeral(base=base, slots=tuple(slots))


def interpretations(
    numeral: GapNumeral, bounds: InterpretationBounds = DEFAULT_BOUNDS
) -> list[int]:
    """Every integer the numeral can denote, sorted ascending.

    Each gap independently expands to 1..max_gap_width zero places, then
    0..max_trailing zero places are appended; each expansion is read
    positionally in the numeral's base. Duplicate readings collapse.
    """
    expansions = [()]
    for slot in numeral.slots:
        if slot is GAP:
            expansions = [
                digits + (0,) * width
                for digits in expansions
                for width in range(1, bounds.max_gap_width + 1)
            ]
        else:
            expansions = [digits + (slot,) for digits in expansions]
    base = numeral.base
    readings = set()
    for digits in expansions:
        value = 0
        for d in digits:
            value = value * base + d
        for shift in range(bounds.max_trailing + 1):
            readings.add(value * base**shift)
    return sorted(readings)


def render_gap(n: int, base: int = 60) -> tuple[GapNumeral, int]:
    """Lossy canonical encoding of n.

    Medial runs of zero places collapse into a single gap (the run width
    is not writable), and trailing zero places are dropped entirely; the
    count of dropped trailing places comes back as ``lost_scale``. The
    caller is responsible for remembering it, just as a reader of the
    original notation had to know the intended magnitude from context.
    """
    if n < 1:
        raise RangeError(f"only positive integers are writable, got {n}")
    digits = []
    while n:
        n, d = divmod(n, base)
        digits.append(d)
    digits.reverse()

    lost_scale = 0
    while digits and digits[-1] == 0:
        digits.pop()
        lost_scale += 1

    slots = []
    in_zero_run = False
    for d in digits:
        if d == 0:
            if not in_zero_run:
                slots.append(GAP)
                in_zero_run = True
        else:
            slots.append(d)
            in_zero_run = False
    return GapNumeral(base=base, slots=tuple(slots)), lost_scale


def digit_decompose(d: int) -> tuple[int, int]:
    """Split a base-60 digit into its ten-wedges and unit-wedges.

    The sexagesimal digits 1..59 were not 59 distinct symbols but
    compositions of a tens mark and repeated unit marks.
    """
    if not 1 <= d <= 59:
        raise RangeError(f"a composed sexagesimal digit covers 1..59, got {d}")
    return d // 10, d % 10
