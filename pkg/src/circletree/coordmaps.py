"""Hopf algebra of coordinate maps for the output-feedback group.

A coordinate map picks out one coefficient of a vector-valued series:
channel i, word eta.  The coproduct here is *not* computed through
extraction combinatorics; it is built from the three recursions on the
prepend operators (deshuffle coproduct, then the feedback coproduct,
then the full one).  That makes this module an implementation of the
same Hopf algebra that `hopf` realises on circle trees, reached by a
completely different route, so the two can cross-check each other via
the channel/word bijection at the bottom of this file.

Tensor values share the monomial-pair convention of `hopf`: keys are
(left monomial, right monomial) with single-map monomials of length 1.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .lincomb import LinComb, format_rational
from .trees import Rct
from .words import Word, format_word, parse_word


class CoordMap(NamedTuple):
    channel: int
    word: Word


CMono = tuple[CoordMap, ...]

UNIT: CMono = ()


def degree(a: CoordMap) -> int:
    return sum(2 if letter == 0 else 1 for letter in a.word) + 1


def mono_degree(mono: CMono) -> int:
    return sum(degree(a) for a in mono)


def mono_mul(a: CMono, b: CMono) -> CMono:
    return tuple(sorted(a + b))


def poly_mul(p: LinComb, q: LinComb) -> LinComb:
    out = LinComb()
    for ma, ka in p.items():
        for mb, kb in q.items():
            out.add_term(mono_mul(ma, mb), ka * kb)
    return out


def deshuffle_coproduct(a: CoordMap, j: int) -> LinComb:
    """Split a's word into ordered subword pairs; the right legs live on channel j."""
    out = LinComb()
    word = a.word
    k = len(word)
    for mask in range(1 << k):
        left = tuple(word[i] for i in range(k) if not mask >> i & 1)
        right = tuple(word[i] for i in range(k) if mask >> i & 1)
        out.add_term(((CoordMap(a.channel, left),), (CoordMap(j, right),)), 1)
    return out


@lru_cache(maxsize=None)
def _tilde_items(channel: int, word: Word, m: int) -> tuple[tuple[CoordMap, CMono, int], ...]:
    """Feedback coproduct terms (left single map, right monomial, coefficient)."""
    if not word:
        return ((CoordMap(channel, ()), UNIT, 1),)
    head, tail = word[0], word[1:]
    acc = LinComb()
    # prepending any letter acts on the left leg
    for left, right, coeff in _tilde_items(channel, tail, m):
        acc.add_term((CoordMap(left.channel, (head,) + left.word), right), coeff)
    if head == 0:
        # the integrator letter additionally couples to a deshuffle of the tail
        for n in range(1, m + 1):
            for (lmono, rmono), dcoeff in deshuffle_coproduct(CoordMap(channel, tail), n).items():
                u = lmono[0]
                v = rmono[0]
                for left, right, coeff in _tilde_items(u.channel, u.word, m):
                    acc.add_term(
                        (CoordMap(left.channel, (n,) + left.word), mono_mul(right, (v,))),
                        coeff * dcoeff)
    return tuple((left, right, coeff) for (left, right), coeff in acc.items())


def tilde_delta(a: CoordMap, m: int) -> LinComb:
    """Coproduct dual to the modified composition product."""
    out = LinComb()
    for left, right, coeff in _tilde_items(a.channel, a.word, m):
        out.add_term(((left,), right), coeff)
    return out


def full_delta(a: CoordMap, m: int) -> LinComb:
    """Coproduct dual to the group product: tilde_delta plus the right-primitive part."""
    out = tilde_delta(a, m)
    out.add_term((UNIT, (a,)), 1)
    return out


def reduced_delta(a: CoordMap, m: int) -> LinComb:
    out = tilde_delta(a, m)
    out.add_term(((a,), UNIT), -1)
    return out


def full_delta_monomial(mono: CMono, m: int) -> LinComb:
    acc = LinComb.single((UNIT, UNIT), 1)
    for factor in mono:
        step = LinComb()
        for (la, ra), ka in acc.items():
            for (lb, rb), kb in full_delta(factor, m).items():
                step.add_term((mono_mul(la, lb), mono_mul(ra, rb)), ka * kb)
        acc = step
    return acc


def counit(p: LinComb):
    return p.get(UNIT, 0)


@lru_cache(maxsize=None)
def _antipode_mono(a: CoordMap, m: int, side: str) -> tuple[tuple[CMono, int], ...]:
    acc = LinComb.single((a,), -1)
    for left, right, coeff in _tilde_items(a.channel, a.word, m):
        if left == a and not right:
            continue  # the left-primitive part is not in the reduced coproduct
        if side == "left":
            for mono, k in _antipode_mono(left, m, side):
                acc.add_term(mono_mul(mono, right), -coeff * k)
        else:
            prod = LinComb.single((left,), 1)
            for factor in right:
                prod = poly_mul(prod, LinComb(dict(_antipode_mono(factor, m, side))))
            acc.add_comb(prod, -coeff)
    return tuple(acc.items())


def antipode(a: CoordMap, m: int, side: str = "left") -> LinComb:
    if side not in {"left", "right"}:
        raise ValueError(f"side must be left or right, got {side!r}")
    return LinComb(dict(_antipode_mono(a, m, side)))


def antipode_poly(p: LinComb, m: int, side: str = "left") -> LinComb:
    out = LinComb()
    for mono, coeff in p.items():
        acc = LinComb.single(UNIT, 1)
        for factor in mono:
            acc = poly_mul(acc, antipode(factor, m, side))
        out.add_comb(acc, coeff)
    return out


# ---------------------------------------------------------------------------
# bijection with circle trees


def to_coord_map(c: Rct) -> CoordMap:
    return CoordMap(c.root, c.word)


def to_rct(a: CoordMap) -> Rct:
    return Rct(a.channel, a.word)


def tree_poly_to_coord(p: LinComb) -> LinComb:
    return p.map_basis(lambda mono: tuple(sorted(to_coord_map(c) for c in mono)))


def tree_tensor_to_coord(t: LinComb) -> LinComb:
    return t.map_basis(lambda lr: (
        tuple(sorted(to_coord_map(c) for c in lr[0])),
        tuple(sorted(to_coord_map(c) for c in lr[1]))))


# ---------------------------------------------------------------------------
# text format


def format_coord_map(a: CoordMap) -> str:
    return f"a[{a.channel};{format_word(a.word)}]"


def parse_coord_map(text: str, m: int | None = None) -> CoordMap:
    text = text.strip()
    if not (text.startswith("a[") and text.endswith("]")):
        raise ValueError(f"malformed coordinate map {text!r}")
    inner = text[2:-1]
    if ";" not in inner:
        raise ValueError(f"malformed coordinate map {text!r}")
    channel_text, word_text = inner.split(";", 1)
    channel = int(channel_text)
    if channel < 1 or (m is not None and channel > m):
        raise ValueError(f"channel {channel} outside 1..{m}")
    return CoordMap(channel, parse_word(word_text, m))


def mono_sort_key(mono: CMono):
    return (len(mono), mono)


def format_cmono(mono: CMono) -> str:
    if not mono:
        return "1"
    return "*".join(format_coord_map(a) for a in mono)


def format_poly(p: LinComb) -> str:
    lines = [
        f"{format_cmono(mono)} {format_rational(p[mono])}"
        for mono in sorted(p, key=mono_sort_key)
    ]
    return "\n".join(lines) if lines else "0"
