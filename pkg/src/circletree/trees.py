"""Decorated rooted circle trees and their extraction combinatorics.

A rooted circle tree is a root label together with the word of internal
vertex decorations, read clockwise from the root.  Internal positions
are 1-based.  A position is white when its letter is x_0, black
otherwise.  A subset of positions is admissible when its minimum is
white.  Extraction families come in two flavours:

* admissible extractions: pairwise disjoint admissible subsets;
* general extractions: pairwise distinct minima, every pair of subsets
  either disjoint or strictly nested.

Both enumerations include the empty family; the "total" extraction (the
whole tree, root included) exists only as a marker for the coproduct.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .words import Word, format_word, parse_word, word_degree

Subset = tuple[int, ...]


class Rct(NamedTuple):
    root: int
    word: Word


class Extraction(NamedTuple):
    kind: str  # "empty" | "total" | "proper"
    subsets: tuple[Subset, ...] = ()


EMPTY_EXTRACTION = Extraction("empty")
TOTAL_EXTRACTION = Extraction("total")


def proper_extraction(subsets) -> Extraction:
    subsets = tuple(tuple(s) for s in subsets)
    if not subsets:
        raise ValueError("a proper extraction needs at least one subset")
    return Extraction("proper", subsets)


def weight(c: Rct) -> int:
    """Number of vertices, root included."""
    return len(c.word) + 1


def degree(c: Rct) -> int:
    return word_degree(c.word) + 1


def is_white(letter: int) -> bool:
    return letter == 0


def admissible_subsets(c: Rct) -> list[Subset]:
    """All position subsets whose minimum is white, in lexicographic order."""
    k = len(c.word)
    out: list[Subset] = []
    for p in range(1, k + 1):
        if not is_white(c.word[p - 1]):
            continue
        tail = list(range(p + 1, k + 1))
        for mask in range(1 << len(tail)):
            rest = tuple(tail[i] for i in range(len(tail)) if mask >> i & 1)
            out.append((p,) + rest)
    out.sort()
    return out


def _compatible_disjoint(cand: Subset, chosen: list[Subset]) -> bool:
    cset = set(cand)
    return all(cset.isdisjoint(s) for s in chosen)


def _compatible_general(cand: Subset, chosen: list[Subset]) -> bool:
    # cand's minimum exceeds every chosen minimum, so nesting can only be cand inside chosen.
    cset = set(cand)
    for s in chosen:
        if cand[0] == s[0]:
            return False
        sset = set(s)
        if not (cset.isdisjoint(sset) or cset < sset):
            return False
    return True


def _iter_families(subsets: list[Subset], compatible) -> Iterator[tuple[Subset, ...]]:
    """Pre-order enumeration of families drawn from the lexicographic subset list."""
    chosen: list[Subset] = []

    def rec(start: int) -> Iterator[tuple[Subset, ...]]:
        for idx in range(start, len(subsets)):
            cand = subsets[idx]
            if not compatible(cand, chosen):
                continue
            chosen.append(cand)
            yield tuple(chosen)
            yield from rec(idx + 1)
            chosen.pop()

    yield from rec(0)


def iter_admissible_families(c: Rct) -> Iterator[tuple[Subset, ...]]:
    """Nonempty families of pairwise disjoint admissible subsets."""
    yield from _iter_families(admissible_subsets(c), _compatible_disjoint)


def iter_general_families(c: Rct) -> Iterator[tuple[Subset, ...]]:
    """Nonempty disjoint-or-nested families with pairwise distinct minima."""
    yield from _iter_families(admissible_subsets(c), _compatible_general)


def enumerate_admissible_extractions(c: Rct, include_trivial: bool = False) -> list[Extraction]:
    out: list[Extraction] = []
    if include_trivial:
        out.append(EMPTY_EXTRACTION)
    out.extend(Extraction("proper", fam) for fam in iter_admissible_families(c))
    if include_trivial:
        out.append(TOTAL_EXTRACTION)
    return out


def enumerate_all_extractions(c: Rct) -> list[Extraction]:
    """General extractions for the closed antipode formula; starts with the empty one."""
    out = [EMPTY_EXTRACTION]
    out.extend(Extraction("proper", fam) for fam in iter_general_families(c))
    return out


def _check_positions(c: Rct, subset: Subset) -> None:
    k = len(c.word)
    if not subset:
        raise ValueError("empty subset")
    if any(not 1 <= p <= k for p in subset):
        raise ValueError(f"subset {subset} out of range for word of length {k}")
    if not is_white(c.word[subset[0] - 1]):
        raise ValueError(f"subset {subset} is not admissible: minimum is not white")


def quotient(c: Rct, subsets, labels, m: int) -> Rct:
    """Collapse each subset to its minimum, redecorated by the matching label.

    `subsets` must be pairwise disjoint; every non-minimal subset position
    disappears from the word.
    """
    subsets = [tuple(sorted(s)) for s in subsets]
    labels = list(labels)
    if len(subsets) != len(labels):
        raise ValueError("one label per subset required")
    seen: set[int] = set()
    relabel: dict[int, int] = {}
    drop: set[int] = set()
    for subset, label in zip(subsets, labels):
        _check_positions(c, subset)
        if not 1 <= label <= m:
            raise ValueError(f"label {label} outside 1..{m}")
        if seen & set(subset):
            raise ValueError("subsets overlap")
        seen |= set(subset)
        relabel[subset[0]] = label
        drop |= set(subset[1:])
    word = []
    for pos in range(1, len(c.word) + 1):
        if pos in drop:
            continue
        word.append(relabel.get(pos, c.word[pos - 1]))
    return Rct(c.root, tuple(word))


def restrict(c: Rct, subset: Subset, label: int, m: int) -> Rct:
    """Sub-tree on `subset`: its minimum becomes the root, labelled `label`."""
    subset = tuple(sorted(subset))
    _check_positions(c, subset)
    if not 1 <= label <= m:
        raise ValueError(f"label {label} outside 1..{m}")
    return Rct(label, tuple(c.word[p - 1] for p in subset[1:]))


def delete_positions(c: Rct, positions) -> Rct:
    """Drop the given internal positions outright (no relabelling)."""
    gone = set(positions)
    return Rct(c.root, tuple(
        letter for pos, letter in enumerate(c.word, start=1) if pos not in gone))


class ForestNode(NamedTuple):
    subset: Subset
    children: tuple["ForestNode", ...]


class NestingForest(NamedTuple):
    root: int
    nodes: tuple[ForestNode, ...]


def build_nesting_forest(c: Rct, extraction: Extraction) -> NestingForest:
    """Containment hierarchy of a general extraction as a decorated forest."""
    if extraction.kind != "proper":
        raise ValueError("nesting forest needs a proper extraction")
    return NestingForest(c.root, _forest_nodes(extraction.subsets))


def _forest_nodes(subsets: tuple[Subset, ...]) -> tuple[ForestNode, ...]:
    order = sorted(subsets, key=lambda s: (s[0], s))
    sets = [set(s) for s in order]

    def immediate_parent(i: int) -> int | None:
        best = None
        for j in range(len(order)):
            if j != i and sets[i] < sets[j]:
                if best is None or sets[j] < sets[best]:
                    best = j
        return best

    children_of: dict[int | None, list[int]] = {}
    for i in range(len(order)):
        children_of.setdefault(immediate_parent(i), []).append(i)

    def build(i: int) -> ForestNode:
        kids = tuple(build(j) for j in children_of.get(i, []))
        return ForestNode(order[i], kids)

    return tuple(build(i) for i in children_of.get(None, []))


def iter_words(max_weight: int, m: int) -> Iterator[Word]:
    """All words over {x_0..x_m} of grading weight at most max_weight."""
    def rec(budget: int) -> Iterator[Word]:
        yield ()
        for letter in range(m + 1):
            cost = 2 if letter == 0 else 1
            if cost <= budget:
                for tail in rec(budget - cost):
                    yield (letter,) + tail

    yield from rec(max_weight)


def iter_rcts(max_degree: int, m: int) -> Iterator[Rct]:
    """All generators (single trees) of degree at most max_degree."""
    for word in iter_words(max_degree - 1, m):
        for root in range(1, m + 1):
            yield Rct(root, word)


def format_rct(c: Rct) -> str:
    return f"{c.root}:{format_word(c.word)}"


def parse_rct(text: str, m: int | None = None) -> Rct:
    text = text.strip()
    if ":" not in text:
        raise ValueError(f"malformed tree {text!r}, expected <root>:<word>")
    root_text, word_text = text.split(":", 1)
    try:
        root = int(root_text)
    except ValueError as exc:
        raise ValueError(f"malformed root in {text!r}") from exc
    if root < 1 or (m is not None and root > m):
        raise ValueError(f"root label {root} outside 1..{m}")
    return Rct(root, parse_word(word_text, m))


def format_subset(subset: Subset) -> str:
    return "{" + ",".join(str(p) for p in subset) + "}"


def parse_subset(text: str) -> Subset:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"malformed subset {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        raise ValueError("empty subset")
    return tuple(sorted(int(part) for part in inner.split(",")))
