"""Truncated vector-valued formal power series with exact coefficients.

A Series holds coefficients for (channel, word) pairs, channels 1-based,
words no longer than max_len.  Truncation is by word length: every
product implemented here only lengthens words, so computing with
truncation L is exact for all words of length <= L.

`DeltaSeries` marks the shifted element "identity + series" of the
feedback group; the identity symbol itself is never stored as a word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .lincomb import LinComb, as_fraction, format_rational, parse_rational
from .words import Word, format_word, parse_word


@dataclass(frozen=True)
class Series:
    ell: int
    m: int
    max_len: int
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean: dict[tuple[int, Word], Fraction] = {}
        for (channel, word), value in self.coeffs.items():
            word = tuple(word)
            if not 1 <= channel <= self.ell:
                raise ValueError(f"channel {channel} outside 1..{self.ell}")
            if any(not 0 <= letter <= self.m for letter in word):
                raise ValueError(f"letter outside alphabet in word {word}")
            if len(word) > self.max_len:
                raise ValueError(f"word {word} longer than max_len={self.max_len}")
            value = as_fraction(value)
            if value:
                clean[(channel, word)] = value
        object.__setattr__(self, "coeffs", clean)

    def coeff(self, channel: int, word: Word) -> Fraction:
        return self.coeffs.get((channel, tuple(word)), Fraction(0))

    def channel_poly(self, channel: int) -> LinComb:
        out = LinComb()
        for (ch, word), value in self.coeffs.items():
            if ch == channel:
                out[word] = value
        return out

    def is_zero(self) -> bool:
        return not self.coeffs

    def truncated(self, max_len: int) -> "Series":
        return Series(self.ell, self.m, max_len, {
            key: value for key, value in self.coeffs.items() if len(key[1]) <= max_len})

    def scaled(self, factor) -> "Series":
        factor = as_fraction(factor)
        return Series(self.ell, self.m, self.max_len,
                      {key: factor * value for key, value in self.coeffs.items()})

    def __neg__(self) -> "Series":
        return self.scaled(-1)

    def sorted_items(self):
        return sorted(
            self.coeffs.items(),
            key=lambda item: (item[0][0], len(item[0][1]), item[0][1]))


def zero_series(ell: int, m: int, max_len: int) -> Series:
    return Series(ell, m, max_len, {})


def from_channel_polys(polys, m: int, max_len: int) -> Series:
    """Build a series from one word-LinComb per channel."""
    coeffs = {}
    for channel, poly in enumerate(polys, start=1):
        for word, value in poly.items():
            if len(word) <= max_len:
                coeffs[(channel, word)] = value
    return Series(len(polys), m, max_len, coeffs)


def _require_same_shape(a: Series, b: Series) -> None:
    if a.ell != b.ell or a.m != b.m:
        raise ValueError(
            f"series shape mismatch: ({a.ell},{a.m}) vs ({b.ell},{b.m})")


def add(a: Series, b: Series) -> Series:
    _require_same_shape(a, b)
    max_len = min(a.max_len, b.max_len)
    coeffs: dict = {}
    for key, value in a.coeffs.items():
        if len(key[1]) <= max_len:
            coeffs[key] = value
    for key, value in b.coeffs.items():
        if len(key[1]) > max_len:
            continue
        total = coeffs.get(key, Fraction(0)) + value
        if total:
            coeffs[key] = total
        else:
            coeffs.pop(key, None)
    return Series(a.ell, a.m, max_len, coeffs)


def shuffle_product(a: Series, b: Series) -> Series:
    """Channel-wise shuffle; the series-level product of parallel systems."""
    from .words import shuffle_polys

    _require_same_shape(a, b)
    max_len = min(a.max_len, b.max_len)
    polys = [
        shuffle_polys(a.channel_poly(ch), b.channel_poly(ch), max_len)
        for ch in range(1, a.ell + 1)
    ]
    return from_channel_polys(polys, a.m, max_len)


def left_concat(letter: int, a: Series) -> Series:
    if not 0 <= letter <= a.m:
        raise ValueError(f"letter {letter} outside alphabet 0..{a.m}")
    coeffs = {}
    for (channel, word), value in a.coeffs.items():
        if len(word) + 1 <= a.max_len:
            coeffs[(channel, (letter,) + word)] = value
    return Series(a.ell, a.m, a.max_len, coeffs)


@dataclass(frozen=True)
class DeltaSeries:
    """identity + base, an element of the feedback group."""

    base: Series

    def __post_init__(self):
        if self.base.ell != self.base.m:
            raise ValueError("feedback group elements need a square series (ell == m)")


# ---------------------------------------------------------------------------
# text and document formats


def format_series(a: Series) -> str:
    lines = [
        f"{channel} {format_word(word)} {format_rational(value)}"
        for (channel, word), value in a.sorted_items()
    ]
    return "\n".join(lines)


def parse_series(text: str, ell: int | None = None, m: int | None = None,
                 max_len: int | None = None) -> Series:
    """Parse `<channel> <word> <rational>` lines; shape is inferred unless given."""
    coeffs: dict = {}
    max_channel = 0
    max_letter = 0
    longest = 0
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"malformed series line {raw!r}")
        channel = int(parts[0])
        word = parse_word(parts[1], m)
        value = parse_rational(parts[2])
        if channel < 1:
            raise ValueError(f"channel {channel} must be >= 1")
        key = (channel, word)
        coeffs[key] = coeffs.get(key, Fraction(0)) + value
        max_channel = max(max_channel, channel)
        max_letter = max(max_letter, max(word, default=0))
        longest = max(longest, len(word))
    ell = ell if ell is not None else max(max_channel, 1)
    m = m if m is not None else max(max_letter, 1)
    max_len = max_len if max_len is not None else longest
    return Series(ell, m, max_len, coeffs)


def series_to_doc(a: Series) -> dict:
    return {
        "ell": a.ell,
        "m": a.m,
        "max_len": a.max_len,
        "terms": [
            {"channel": channel, "word": format_word(word), "coeff": format_rational(value)}
            for (channel, word), value in a.sorted_items()
        ],
    }


def series_from_doc(doc: dict) -> Series:
    coeffs = {}
    for term in doc["terms"]:
        key = (int(term["channel"]), parse_word(term["word"], int(doc["m"])))
        coeffs[key] = coeffs.get(key, Fraction(0)) + parse_rational(term["coeff"])
    return Series(int(doc["ell"]), int(doc["m"]), int(doc["max_len"]), coeffs)


def dumps_json(a: Series) -> str:
    return json.dumps(series_to_doc(a), indent=2)


def loads_json(text: str) -> Series:
    return series_from_doc(json.loads(text))
