"""Alphabetic (Ionian) Greek numerals.

Letters carry fixed values and a numeral is simply the sum of its
letters, so position never matters. The letter table ships as
``greek_numerals.json``: units alpha..theta, tens iota..koppa, hundreds
rho..sampi, and mu for the myriad, 10000, the ceiling of the system.

Two quirks of the table:

* There is no letter for 40, because mu is reserved for the myriad
  here; 40 renders additively as lambda iota (30 + 10).
* Bare letters only, no keraia mark, so there are no thousands letters
  either. Rendering is greedy and repeats the largest letter when it
  must (2000 comes out as sampi sampi sigma).

Input may be Greek glyphs ("ρια") or ASCII letter names joined with
"+" ("rho+iota+alpha") for terminals without Greek input.
"""

from __future__ import annotations

import json
from importlib import resources

from .errors import ParseError, RangeError

MAX_VALUE = 10000  # the myriad, the largest writable number


def _load_table():
    text = resources.files(__package__).joinpath("greek_numerals.json").read_text("utf-8")
    return json.loads(text)

_ENTRIES = _load_table()

GLYPH_VALUES: dict[str, int] = {}
NAME_VALUES: dict[str, int] = {}
for _e in _ENTRIES:
    GLYPH_VALUES[_e["glyph"]] = _e["value"]
    NAME_VALUES[_e["name"]] = _e["value"]
    for _alias in _e["aliases"]:
        (NAME_VALUES if _alias.isascii() else GLYPH_VALUES)[_alias] = _e["value"]

# Canonical glyph per value, for rendering; largest value first.
VALUE_GLYPHS = {e["value"]: e["glyph"] for e in _ENTRIES}
_DESCENDING = sorted(VALUE_GLYPHS, reverse=True)


def parse_greek(text: str) -> int:
    """Sum of the letter values; pure addition, order never matters."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty Greek numeral")
    if stripped.isascii():
        total = 0
        for name in stripped.split("+"):
            name = name.strip()
            if name not in NAME_VALUES:
                raise ParseError(f"unknown Greek letter name: {name!r}")
            total += NAME_VALUES[name]
    else:
        total = 0
        for ch in stripped:
            if ch.isspace():
                continue
            if ch not in GLYPH_VALUES:
                raise ParseError(f"unknown Greek numeral letter: {ch!r}")
            total += GLYPH_VALUES[ch]
    if total > MAX_VALUE:
        raise RangeError(f"{total} exceeds the myriad, the largest writable value")
    return total


def render_greek(n: int) -> str:
    """Greedy letter decomposition of n, largest values first."""
    if n < 1 or n > MAX_VALUE:
        raise RangeError(f"Greek numerals cover 1..{MAX_VALUE}, got {n}")
    out = []
    for value in _DESCENDING:
        count, n = divmod(n, value)
        out.append(VALUE_GLYPHS[value] * count)
        if n == 0:
            break
    return "".join(out)


def render_greek_names(n: int) -> str:
    """Like render_greek but as "+"-joined ASCII letter names."""
    glyph_names = {e["glyph"]: e["name"] for e in _ENTRIES}
    return "+".join(glyph_names[g] for g in render_greek(n))
