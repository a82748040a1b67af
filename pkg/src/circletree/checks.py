"""Property suites shared by the command-line front end and the tests.

Each check sweeps generators up to a degree bound (or runs seeded random
trials), raises AssertionError with context on the first violation, and
returns the number of cases it verified.
"""

from __future__ import annotations

import random

from . import coordmaps, groupops, hopf, numeric, prelie
from .lincomb import LinComb
from .series import Series, add, left_concat, shuffle_product, zero_series
from .trees import Rct, degree, iter_rcts
from .words import Word


# ---------------------------------------------------------------------------
# Hopf axioms on the tree side


def check_coassociativity(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        delta = hopf.coproduct(c, m)
        lhs = LinComb()
        rhs = LinComb()
        for (left, right), coeff in delta.items():
            for (a, b), k in hopf.coproduct_monomial(left, m).items():
                lhs.add_term((a, b, right), coeff * k)
            for (a, b), k in hopf.coproduct_monomial(right, m).items():
                rhs.add_term((left, a, b), coeff * k)
        assert lhs == rhs, f"coassociativity fails on {c}"
        count += 1
    return count


def check_counit(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        delta = hopf.coproduct(c, m)
        left_collapsed = LinComb()
        right_collapsed = LinComb()
        for (left, right), coeff in delta.items():
            if not left:
                left_collapsed.add_term(right, coeff)
            if not right:
                right_collapsed.add_term(left, coeff)
        expected = LinComb.single((c,), 1)
        assert left_collapsed == expected, f"left counit fails on {c}"
        assert right_collapsed == expected, f"right counit fails on {c}"
        count += 1
    return count


def check_grading(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        d = degree(c)
        for (left, right), _coeff in hopf.coproduct(c, m).items():
            split = hopf.mono_degree(left) + hopf.mono_degree(right)
            assert split == d, f"grading fails on {c}: {left}|{right}"
        count += 1
    return count


def check_antipode_convolution(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        delta = hopf.coproduct(c, m)
        left_conv = LinComb()
        right_conv = LinComb()
        for (left, right), coeff in delta.items():
            s_left = hopf.antipode_poly(LinComb.single(left, 1), m)
            for mono, k in s_left.items():
                left_conv.add_term(hopf.mono_mul(mono, right), coeff * k)
            s_right = hopf.antipode_poly(LinComb.single(right, 1), m)
            for mono, k in s_right.items():
                right_conv.add_term(hopf.mono_mul(left, mono), coeff * k)
        assert not left_conv, f"S*id fails on {c}: {left_conv}"
        assert not right_conv, f"id*S fails on {c}: {right_conv}"
        count += 1
    return count


def check_antipode_agreement(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        s_left = hopf.antipode_recursive(c, m, "left")
        s_right = hopf.antipode_recursive(c, m, "right")
        s_forest = hopf.antipode_forest(c, m)
        assert s_left == s_right == s_forest, f"antipode variants disagree on {c}"
        count += 1
    return count


def check_forest_sign_purity(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        sign_of: dict = {}
        for _family, mono, sign in hopf.forest_signed_terms(c, m):
            seen = sign_of.setdefault(mono, sign)
            assert seen == sign, f"mixed signs on {mono} for {c}"
        count += 1
    return count


# ---------------------------------------------------------------------------
# pre-Lie structure


def _linearized_pairs(c: Rct, m: int) -> LinComb:
    out = LinComb()
    for (left, right), coeff in hopf.linearized_coproduct(c, m).items():
        out.add_term((left[0], right[0]), coeff)
    return out


def check_copre_lie(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        first = LinComb()
        second = LinComb()
        for (a, b), coeff in _linearized_pairs(c, m).items():
            for (x, y), k in _linearized_pairs(a, m).items():
                first.add_term((x, y, b), coeff * k)
            for (x, y), k in _linearized_pairs(b, m).items():
                second.add_term((a, x, y), coeff * k)
        diff = first - second
        flipped = diff.map_basis(lambda t: (t[0], t[2], t[1]))
        assert diff == flipped, f"co-pre-Lie relation fails on {c}"
        count += 1
    return count


def check_prelie_identity(max_degree: int, m: int, random_trials: int = 0,
                          random_degree: int = 6, seed: int = 2024) -> int:
    gens = list(iter_rcts(max_degree, m))
    triples = [(a, b, c) for a in gens for b in gens for c in gens]
    if random_trials:
        pool = list(iter_rcts(random_degree, m))
        rng = random.Random(seed)
        triples += [tuple(rng.choice(pool) for _ in range(3)) for _ in range(random_trials)]
    count = 0
    for a, b, c in triples:
        ab = prelie.prelie_product(a, b)
        ac = prelie.prelie_product(a, c)
        bc = prelie.prelie_product(b, c)
        cb = prelie.prelie_product(c, b)
        lhs = prelie.prelie_combs(ab, LinComb.single(c, 1)) \
            - prelie.prelie_combs(LinComb.single(a, 1), bc)
        rhs = prelie.prelie_combs(ac, LinComb.single(b, 1)) \
            - prelie.prelie_combs(LinComb.single(a, 1), cb)
        assert lhs == rhs, f"pre-Lie identity fails on {(a, b, c)}"
        count += 1
    return count


def check_jacobi(max_degree: int, m: int, random_trials: int = 0,
                 random_degree: int = 6, seed: int = 4048) -> int:
    gens = list(iter_rcts(max_degree, m))
    triples = [(a, b, c) for a in gens for b in gens for c in gens]
    if random_trials:
        pool = list(iter_rcts(random_degree, m))
        rng = random.Random(seed)
        triples += [tuple(rng.choice(pool) for _ in range(3)) for _ in range(random_trials)]

    def bracket_combs(p: LinComb, q: LinComb) -> LinComb:
        return prelie.prelie_combs(p, q) - prelie.prelie_combs(q, p)

    count = 0
    for a, b, c in triples:
        pa, pb, pc = (LinComb.single(x, 1) for x in (a, b, c))
        total = bracket_combs(pa, bracket_combs(pb, pc)) \
            + bracket_combs(pb, bracket_combs(pc, pa)) \
            + bracket_combs(pc, bracket_combs(pa, pb))
        assert not total, f"Jacobi fails on {(a, b, c)}"
        count += 1
    return count


def check_duality(max_degree: int, m: int) -> int:
    """Insertion product vs single-subset coproduct, as full pairing tables."""
    gens = list(iter_rcts(max_degree, m))
    from_coproduct: dict = {}
    for c in gens:
        for (a, b), coeff in _linearized_pairs(c, m).items():
            from_coproduct[(a, b, c)] = coeff
    from_insertion: dict = {}
    for a in gens:
        for b in gens:
            if degree(a) + degree(b) > max_degree:
                continue
            for c, coeff in prelie.prelie_product(a, b).items():
                from_insertion[(a, b, c)] = coeff
    assert from_coproduct == from_insertion, "pairing tables differ"
    return len(gens)


# ---------------------------------------------------------------------------
# isomorphism with the coordinate-map side


def check_iso_coproduct(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        lhs = coordmaps.tree_tensor_to_coord(hopf.coproduct(c, m))
        rhs = coordmaps.full_delta(coordmaps.to_coord_map(c), m)
        assert lhs == rhs, f"coproducts disagree through the bijection on {c}"
        count += 1
    return count


def check_iso_antipode(max_degree: int, m: int) -> int:
    count = 0
    for c in iter_rcts(max_degree, m):
        lhs = coordmaps.tree_poly_to_coord(hopf.antipode_recursive(c, m))
        a = coordmaps.to_coord_map(c)
        s_left = coordmaps.antipode(a, m, "left")
        s_right = coordmaps.antipode(a, m, "right")
        assert lhs == s_left == s_right, f"antipodes disagree through the bijection on {c}"
        count += 1
    return count


def check_figure_relations(max_degree: int, m: int) -> int:
    """The four coproducts differ by primitive-part additions."""
    count = 0
    for c in iter_rcts(max_degree, m):
        a = coordmaps.to_coord_map(c)
        mono = (a,)
        tilde = coordmaps.tilde_delta(a, m)
        full = coordmaps.full_delta(a, m)
        reduced = coordmaps.reduced_delta(a, m)
        with_left = LinComb(reduced)
        with_left.add_term((mono, coordmaps.UNIT), 1)
        assert tilde == with_left, f"tilde vs reduced fails on {c}"
        with_right = LinComb(tilde)
        with_right.add_term((coordmaps.UNIT, mono), 1)
        assert full == with_right, f"full vs tilde fails on {c}"
        transported = coordmaps.tree_tensor_to_coord(hopf.reduced_coproduct(c, m))
        assert transported == reduced, f"reduced coproducts disagree on {c}"
        count += 1
    return count


def check_deshuffle_correspondence(max_degree: int, m: int) -> int:
    """Single sub-tree extraction at a leading white vertex is the deshuffle."""
    from .trees import admissible_subsets, delete_positions, restrict

    count = 0
    for c in iter_rcts(max_degree, m):
        if not c.word or c.word[0] != 0:
            continue
        tail = Rct(c.root, c.word[1:])
        for n in range(1, m + 1):
            pairs = LinComb()
            for subset in admissible_subsets(c):
                if subset[0] != 1:
                    continue
                left = delete_positions(c, subset)
                right = restrict(c, subset, n, m)
                pairs.add_term(
                    ((coordmaps.to_coord_map(left),), (coordmaps.to_coord_map(right),)), 1)
            expected = coordmaps.deshuffle_coproduct(coordmaps.to_coord_map(tail), n)
            assert pairs == expected, f"deshuffle correspondence fails on {c}, n={n}"
        count += 1
    return count


# ---------------------------------------------------------------------------
# randomized series-level checks


def random_series(rng: random.Random, ell: int, m: int, max_len: int,
                  word_len: int = 2, terms: int = 4, bound: int = 2) -> Series:
    coeffs: dict = {}
    for channel in range(1, ell + 1):
        for _ in range(terms):
            n = rng.randint(0, word_len)
            word: Word = tuple(rng.randint(0, m) for _ in range(n))
            coeffs[(channel, word)] = coeffs.get((channel, word), 0) + rng.randint(-bound, bound)
    return Series(ell, m, max_len, {k: v for k, v in coeffs.items() if v})


def check_group_axioms(trials: int = 20, m: int = 2, max_len: int = 4,
                       seed: int = 99) -> int:
    rng = random.Random(seed)
    zero = zero_series(m, m, max_len)
    for trial in range(trials):
        c = random_series(rng, m, m, max_len)
        d = random_series(rng, m, m, max_len)
        e = random_series(rng, m, m, max_len)
        lhs = groupops.group_product(groupops.group_product(c, d), e)
        rhs = groupops.group_product(c, groupops.group_product(d, e))
        assert lhs.coeffs == rhs.coeffs, f"associativity fails on trial {trial}"
        assert groupops.group_product(c, zero).coeffs == c.coeffs
        assert groupops.group_product(zero, c).coeffs == c.coeffs
        inv = groupops.group_inverse(c)
        assert groupops.group_product(c, inv).is_zero(), f"right inverse fails on trial {trial}"
        assert groupops.group_product(inv, c).is_zero(), f"left inverse fails on trial {trial}"
    return trials


def check_mod_compose_identities(trials: int = 50, m: int = 2, max_len: int = 4,
                                 seed: int = 314) -> int:
    rng = random.Random(seed)
    for trial in range(trials):
        c = random_series(rng, 1, m, max_len)
        d = random_series(rng, m, m, max_len)
        e = random_series(rng, m, m, max_len)
        letter = rng.randint(0, m)
        lhs = groupops.mod_compose(left_concat(letter, c), d)
        inner = groupops.mod_compose(c, d)
        rhs = left_concat(letter, inner)
        if letter != 0:
            d_i = Series(1, m, max_len,
                         {(1, w): v for (ch, w), v in d.coeffs.items() if ch == letter})
            rhs = add(rhs, left_concat(0, shuffle_product(d_i, inner)))
        assert lhs.coeffs == rhs.coeffs, f"prepend identity fails on trial {trial}"

        lhs2 = groupops.mod_compose(groupops.mod_compose(c, d), e)
        rhs2 = groupops.mod_compose(c, add(groupops.mod_compose(d, e), e))
        assert lhs2.coeffs == rhs2.coeffs, f"nesting identity fails on trial {trial}"
    return trials


def check_convolution(trials: int = 20, m: int = 2, max_len: int = 4,
                      word_bound: int = 3, seed: int = 2718) -> int:
    from itertools import product as iter_product

    rng = random.Random(seed)
    for trial in range(trials):
        c = random_series(rng, m, m, max_len)
        d = random_series(rng, m, m, max_len)
        phi = groupops.Character(c)
        psi = groupops.Character(d)
        g = groupops.group_product(c, d)
        for n in range(word_bound + 1):
            for word in iter_product(range(m + 1), repeat=n):
                for channel in range(1, m + 1):
                    got = groupops.convolve(phi, psi, coordmaps.CoordMap(channel, word))
                    assert got == g.coeff(channel, word), \
                        f"convolution fails on trial {trial}, {channel}, {word}"
    return trials


def check_numeric(N: int = 2000, tol: float = 1e-6,
                  ratio_lo: float = 3.2, ratio_hi: float = 4.8,
                  noise_floor: float = 1e-12) -> list:
    records = numeric.run_standard_checks(N=N)
    for rec in records:
        assert rec.final_deviation <= tol, \
            f"{rec.kind} case {rec.case}: deviation {rec.final_deviation:.3e} > {tol}"
        if rec.final_deviation > noise_floor:
            for ratio in rec.ratios():
                assert ratio_lo <= ratio <= ratio_hi, \
                    f"{rec.kind} case {rec.case}: ratio {ratio:.2f} outside [{ratio_lo},{ratio_hi}]"
    return records


# ---------------------------------------------------------------------------
# aggregate sweep for the command line


def run_axioms(max_degree: int, m: int) -> list[tuple[str, int]]:
    inner = max(max_degree - 1, 1)
    results = [
        ("coassociativity", check_coassociativity(max_degree, m)),
        ("counit", check_counit(max_degree, m)),
        ("grading", check_grading(max_degree, m)),
        ("antipode convolution", check_antipode_convolution(max_degree, m)),
        ("antipode agreement", check_antipode_agreement(max_degree, m)),
        ("forest sign purity", check_forest_sign_purity(max_degree, m)),
        ("co-pre-Lie relation", check_copre_lie(inner, m)),
        ("bijection coproduct", check_iso_coproduct(max_degree, m)),
        ("bijection antipode", check_iso_antipode(max_degree, m)),
        ("coproduct ladder", check_figure_relations(max_degree, m)),
        ("deshuffle correspondence", check_deshuffle_correspondence(max_degree, m)),
    ]
    return results
