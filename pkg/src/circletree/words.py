"""Letters, words and the shuffle algebra.

The alphabet is {x_0, ..., x_m} with x_0 the distinguished integrator
letter.  A word is a tuple of letter indices read left to right; the
empty tuple is the empty word.  The grading gives x_0 weight 2 and every
other letter weight 1.
"""

from __future__ import annotations

from functools import lru_cache

from .lincomb import LinComb

Word = tuple[int, ...]

EMPTY_WORD: Word = ()


def letter_weight(letter: int) -> int:
    return 2 if letter == 0 else 1


def word_degree(word: Word) -> int:
    """Sum of letter weights (without the +1 a rooted tree adds)."""
    return sum(letter_weight(letter) for letter in word)


def concat(u: Word, v: Word) -> Word:
    return u + v


@lru_cache(maxsize=None)
def _shuffle_items(u: Word, v: Word) -> tuple[tuple[Word, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    acc = LinComb()
    for word, coeff in _shuffle_items(u[1:], v):
        acc.add_term((u[0],) + word, coeff)
    for word, coeff in _shuffle_items(u, v[1:]):
        acc.add_term((v[0],) + word, coeff)
    return tuple(acc.items())


def shuffle(u: Word, v: Word) -> LinComb:
    """Shuffle product as a LinComb over words; coefficients are positive ints."""
    return LinComb(_shuffle_items(tuple(u), tuple(v)))


def shuffle_polys(p: LinComb, q: LinComb, max_len: int | None = None) -> LinComb:
    """Bilinear shuffle of two word polynomials, dropping words longer than max_len."""
    out = LinComb()
    for u, a in p.items():
        for v, b in q.items():
            if max_len is not None and len(u) + len(v) > max_len:
                continue
            ab = a * b
            for word, mult in _shuffle_items(u, v):
                out.add_term(word, ab * mult)
    return out


def format_word(word: Word) -> str:
    if not word:
        return "e"
    return ".".join(str(letter) for letter in word)


def parse_word(text: str, m: int | None = None) -> Word:
    """Parse `0.1.2` (or `e` for the empty word); letters above m are rejected."""
    text = text.strip()
    if text == "e":
        return ()
    try:
        letters = tuple(int(part) for part in text.split("."))
    except ValueError as exc:
        raise ValueError(f"malformed word {text!r}") from exc
    if any(letter < 0 for letter in letters):
        raise ValueError(f"negative letter index in {text!r}")
    if m is not None and any(letter > m for letter in letters):
        raise ValueError(f"letter index above alphabet bound m={m} in {text!r}")
    return letters
