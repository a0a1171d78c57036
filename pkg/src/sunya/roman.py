"""Parse and render Roman numerals.

Seven letters, I V X L C D M, valued 1 5 10 50 100 500 1000. A letter
standing before a larger one subtracts, otherwise letters add. Rendering
comes in two styles: ``canonical`` (standard subtractive form, limited
to 1..3999) and ``repetition`` (purely additive and unbounded above, so
100000 comes out as a run of one hundred M letters).
"""

from __future__ import annotations

from .errors import ParseError, RangeError

LETTER_VALUES = {
    "I": 1,
    "V": 5,
    "X": 10,
    "L": 50,
    "C": 100,
    "D": 500,
    "M": 1000,
}

# Standard subtractive table, largest first.
CANONICAL_TABLE = (
    (1000, "M"),
    (900, "CM"),
    (500, "D"),
    (400, "CD"),
    (100, "C"),
    (90, "XC"),
    (50, "L"),
    (40, "XL"),
    (10, "X"),
    (9, "IX"),
    (5, "V"),
    (4, "IV"),
    (1, "I"),
)

# Plain letters only; used by the additive style.
REPETITION_TABLE = (
    (1000, "M"),
    (500, "D"),
    (100, "C"),
    (50, "L"),
    (10, "X"),
    (5, "V"),
    (1, "I"),
)

CANONICAL_MAX = 3999

STYLES = ("canonical", "repetition")


def parse_roman(text: str, strict: bool = False) -> int:
    """Value of a Roman numeral.

    Permissive mode (the default) applies the add/subtract reading to any
    string of the seven letters: a letter adds, unless it stands directly
    before a single larger letter, in which case the pair contributes the
    difference. Strict mode additionally requires the text to be the
    canonical rendering of its value.
    """
    if not text:
        raise ParseError("empty Roman numeral")
    values = []
    for ch in text:
        try:
            values.append(LETTER_VALUES[ch])
        except KeyError:
            raise ParseError(f"not a Roman letter: {ch!r}") from None

    total = 0
    i = 0
    while i < len(values):
        if i + 1 < len(values) and values[i] < values[i + 1]:
            total += values[i + 1] - values[i]
            i += 2
        else:
            total += values[i]
            i += 1

    if strict:
        if total > CANONICAL_MAX or render_roman(total, "canonical") != text:
            raise ParseError(f"{text!r} is not in canonical form")
    return total


def render_roman(n: int, style: str = "canonical") -> str:
    """Write n as a Roman numeral in the given style.

    The system has no zero and no negatives, so n must be at least 1.
    Canonical style also caps at 3999; larger values need the repetition
    style, which simply repeats M for every thousand.
    """
    if style not in STYLES:
        raise ValueError(f"style must be one of {STYLES}, got {style!r}")
    if n < 1:
        raise RangeError(f"no Roman numeral for {n}: the system starts at 1")
    if style == "canonical" and n > CANONICAL_MAX:
        raise RangeError(
            f"{n} exceeds {CANONICAL_MAX}; use the repetition style"
        )
    table = CANONICAL_TABLE if style == "canonical" else REPETITION_TABLE
    out = []
    for value, letters in table:
        count, n = divmod(n, value)
        out.append(letters * count)
        if n == 0:
            break
    return "".join(out)
