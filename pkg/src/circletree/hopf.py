"""Hopf algebra of decorated rooted circle trees.

Monomials are multisets of trees (canonically sorted tuples); the empty
tuple is the algebra unit.  The coproduct sums quotient (x) extracted
sub-trees over admissible extractions, with every extraction label
expanded concretely over 1..m.  The antipode comes three ways: two
recursions over proper admissible extractions, and a closed formula
summing signed nesting forests over all general extractions.  The
closed formula never mixes signs on a monomial, which is what makes it
cheap at high degree.

Memoization of the recursions is on by default; set CIRCLETREE_MEMO=off
(or pass memoize=False) to force the raw expansion, e.g. to time it.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import chain, product
from typing import Iterator

from .lincomb import LinComb, format_rational
from .trees import (
    Extraction,
    ForestNode,
    Rct,
    _forest_nodes,
    admissible_subsets,
    degree,
    format_rct,
    iter_admissible_families,
    iter_general_families,
    quotient,
    restrict,
)

Monomial = tuple[Rct, ...]

UNIT: Monomial = ()


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


def mono_degree(mono: Monomial) -> int:
    return sum(degree(c) for c in mono)


def poly_mul(p: LinComb, q: LinComb) -> LinComb:
    out = LinComb()
    for ma, ka in p.items():
        for mb, kb in q.items():
            out.add_term(mono_mul(ma, mb), ka * kb)
    return out


def tensor_mul(s: LinComb, t: LinComb) -> LinComb:
    out = LinComb()
    for (la, ra), ka in s.items():
        for (lb, rb), kb in t.items():
            out.add_term((mono_mul(la, lb), mono_mul(ra, rb)), ka * kb)
    return out


@lru_cache(maxsize=None)
def _proper_items(c: Rct, m: int) -> tuple[tuple[Rct, Monomial], ...]:
    """Quotient/sub-tree pairs of all proper admissible extractions, labels expanded."""
    out: list[tuple[Rct, Monomial]] = []
    for family in iter_admissible_families(c):
        for labels in product(range(1, m + 1), repeat=len(family)):
            q = quotient(c, family, labels, m)
            rest = tuple(sorted(
                restrict(c, subset, label, m)
                for subset, label in zip(family, labels)))
            out.append((q, rest))
    return tuple(out)


def coproduct(c: Rct, m: int) -> LinComb:
    """Full coproduct of a generator as a tensor polynomial."""
    out = LinComb()
    out.add_term(((c,), UNIT), 1)
    out.add_term((UNIT, (c,)), 1)
    for q, rest in _proper_items(c, m):
        out.add_term(((q,), rest), 1)
    return out


def reduced_coproduct(c: Rct, m: int) -> LinComb:
    out = LinComb()
    for q, rest in _proper_items(c, m):
        out.add_term(((q,), rest), 1)
    return out


def linearized_coproduct(c: Rct, m: int) -> LinComb:
    """Single-subset part of the coproduct; both legs are single trees."""
    out = LinComb()
    for subset in admissible_subsets(c):
        for label in range(1, m + 1):
            q = quotient(c, [subset], [label], m)
            r = restrict(c, subset, label, m)
            out.add_term(((q,), (r,)), 1)
    return out


def coproduct_monomial(mono: Monomial, m: int) -> LinComb:
    acc = LinComb.single((UNIT, UNIT), 1)
    for factor in mono:
        acc = tensor_mul(acc, coproduct(factor, m))
    return acc


def coproduct_poly(p: LinComb, m: int) -> LinComb:
    out = LinComb()
    for mono, coeff in p.items():
        out.add_comb(coproduct_monomial(mono, m), coeff)
    return out


def counit(p: LinComb):
    return p.get(UNIT, 0)


def extraction_term(c: Rct, extraction: Extraction, labels, m: int) -> tuple[Monomial, Monomial]:
    """Coproduct tensor term of one admissible extraction at fixed labels."""
    if extraction.kind == "empty":
        return ((c,), UNIT)
    if extraction.kind == "total":
        return (UNIT, (c,))
    subsets = extraction.subsets
    q = quotient(c, subsets, labels, m)
    rest = tuple(sorted(
        restrict(c, subset, label, m) for subset, label in zip(subsets, labels)))
    return ((q,), rest)


# ---------------------------------------------------------------------------
# recursive antipodes


def _memo_enabled(override: bool | None) -> bool:
    if override is not None:
        return override
    return os.environ.get("CIRCLETREE_MEMO", "").strip().lower() not in {"off", "0", "false"}


_ANTIPODE_CACHE: dict[tuple, dict] = {}


def clear_caches() -> None:
    _ANTIPODE_CACHE.clear()
    _proper_items.cache_clear()
    _generated_count.cache_clear()


def _antipode_dict(c: Rct, m: int, side: str, use_memo: bool) -> dict:
    key = (side, m, c)
    if use_memo:
        hit = _ANTIPODE_CACHE.get(key)
        if hit is not None:
            return hit
    acc: dict[Monomial, int] = {(c,): -1}

    def add(mono: Monomial, coeff: int) -> None:
        new = acc.get(mono, 0) + coeff
        if new:
            acc[mono] = new
        else:
            del acc[mono]

    for q, rest in _proper_items(c, m):
        if side == "left":
            for mono, coeff in _antipode_dict(q, m, side, use_memo).items():
                add(mono_mul(mono, rest), -coeff)
        else:
            prod: dict[Monomial, int] = {(q,): 1}
            for r in rest:
                nxt: dict[Monomial, int] = {}
                for mono, coeff in prod.items():
                    for smono, scoeff in _antipode_dict(r, m, side, use_memo).items():
                        key2 = mono_mul(mono, smono)
                        val = nxt.get(key2, 0) + coeff * scoeff
                        if val:
                            nxt[key2] = val
                        else:
                            del nxt[key2]
                prod = nxt
            for mono, coeff in prod.items():
                add(mono, -coeff)
    if use_memo:
        _ANTIPODE_CACHE[key] = acc
    return acc


def antipode_recursive(c: Rct, m: int, side: str = "left", memoize: bool | None = None) -> LinComb:
    if side not in {"left", "right"}:
        raise ValueError(f"side must be left or right, got {side!r}")
    return LinComb(_antipode_dict(c, m, side, _memo_enabled(memoize)))


def antipode_poly(p: LinComb, m: int, method: str = "left") -> LinComb:
    """Antipode extended multiplicatively to monomials, linearly to polynomials."""
    out = LinComb()
    for mono, coeff in p.items():
        acc = LinComb.single(UNIT, 1)
        for factor in mono:
            acc = poly_mul(acc, antipode(factor, m, method))
        out.add_comb(acc, coeff)
    return out


# ---------------------------------------------------------------------------
# closed forest formula


def _node_factors(c: Rct, node: ForestNode, label_of: dict, m: int) -> list[Rct]:
    sub = restrict(c, node.subset, label_of[node.subset], m)
    index_of = {p: i + 1 for i, p in enumerate(sorted(node.subset)[1:])}
    kid_subsets = [tuple(index_of[p] for p in child.subset) for child in node.children]
    kid_labels = [label_of[child.subset] for child in node.children]
    factors = [quotient(sub, kid_subsets, kid_labels, m)]
    for child in node.children:
        factors.extend(_node_factors(c, child, label_of, m))
    return factors


def forest_signed_terms(c: Rct, m: int) -> Iterator[tuple[tuple, Monomial, int]]:
    """Signed monomials of the closed antipode formula, one per
    (general extraction, label assignment)."""
    for family in chain([()], iter_general_families(c)):
        nodes = _forest_nodes(family) if family else ()
        sign = -1 if (1 + len(family)) % 2 else 1
        for labels in product(range(1, m + 1), repeat=len(family)):
            label_of = dict(zip(family, labels))
            top_subsets = [node.subset for node in nodes]
            top_labels = [label_of[s] for s in top_subsets]
            factors = [quotient(c, top_subsets, top_labels, m)]
            for node in nodes:
                factors.extend(_node_factors(c, node, label_of, m))
            yield family, tuple(sorted(factors)), sign


def antipode_forest(c: Rct, m: int) -> LinComb:
    out = LinComb()
    for _family, mono, sign in forest_signed_terms(c, m):
        out.add_term(mono, sign)
    return out


def antipode(c: Rct, m: int, method: str = "left", memoize: bool | None = None) -> LinComb:
    if method == "forest":
        return antipode_forest(c, m)
    return antipode_recursive(c, m, method, memoize)


# ---------------------------------------------------------------------------
# term statistics


@dataclass(frozen=True)
class StatsRecord:
    degree: int
    method: str
    generated: int
    distinct: int
    cancelled_mass: int


@lru_cache(maxsize=None)
def _generated_count(c: Rct, m: int) -> int:
    """Signed monomials the raw left recursion would emit before combining."""
    total = 1
    for q, _rest in _proper_items(c, m):
        total += _generated_count(q, m)
    return total


def antipode_stats(c: Rct, m: int, method: str = "recursive_left") -> StatsRecord:
    if method == "forest":
        poly = LinComb()
        generated = 0
        for _family, mono, sign in forest_signed_terms(c, m):
            generated += 1
            poly.add_term(mono, sign)
    elif method == "recursive_left":
        generated = _generated_count(c, m)
        poly = antipode_recursive(c, m, "left")
    else:
        raise ValueError(f"unknown stats method {method!r}")
    cancelled = generated - poly.coeff_mass()
    return StatsRecord(degree(c), method, generated, len(poly), cancelled)


# ---------------------------------------------------------------------------
# text output


def mono_sort_key(mono: Monomial):
    return (len(mono), mono)


def format_monomial(mono: Monomial) -> str:
    if not mono:
        return "1"
    return "*".join(format_rct(c) for c in mono)


def format_poly(p: LinComb) -> str:
    lines = [
        f"{format_monomial(mono)} {format_rational(p[mono])}"
        for mono in sorted(p, key=mono_sort_key)
    ]
    return "\n".join(lines) if lines else "0"


def format_tensor(t: LinComb) -> str:
    keys = sorted(t, key=lambda lr: (mono_sort_key(lr[0]), mono_sort_key(lr[1])))
    lines = [
        f"{format_monomial(left)} | {format_monomial(right)} {format_rational(t[(left, right)])}"
        for left, right in keys
    ]
    return "\n".join(lines) if lines else "0"
