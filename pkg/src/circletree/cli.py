"""Command-line front end.

Parse errors exit with code 2, semantic errors (shape or alphabet
mismatches, insufficient truncation) with code 3.  All output is
canonically sorted, so identical invocations produce identical bytes.
"""

from __future__ import annotations

import argparse
import sys

from . import checks, coordmaps, groupops, hopf, numeric, prelie, series as series_mod
from .lincomb import format_rational
from .series import Series
from .trees import (
    Rct,
    degree,
    enumerate_admissible_extractions,
    enumerate_all_extractions,
    format_subset,
    parse_rct,
    weight,
)
from .words import format_word, parse_word, shuffle, word_degree

PARSE_ERROR = 2
SEMANTIC_ERROR = 3


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", PARSE_ERROR) from exc


def _load_series(path: str, args) -> Series:
    text = _read_text(path)
    try:
        if args.format == "json":
            return series_mod.loads_json(text)
        return series_mod.parse_series(text, ell=args.ell, m=args.m, max_len=args.maxlen)
    except (ValueError, KeyError) as exc:
        raise CliError(f"cannot parse series {path}: {exc}", PARSE_ERROR) from exc


def _emit_series(result: Series, args) -> None:
    if args.format == "json":
        print(series_mod.dumps_json(result))
    else:
        print(series_mod.format_series(result))


def _parse_rct_arg(text: str, m: int) -> Rct:
    try:
        return parse_rct(text, m)
    except ValueError as exc:
        raise CliError(str(exc), PARSE_ERROR) from exc


def _extraction_line(extraction) -> str:
    if extraction.kind == "empty":
        return "empty"
    if extraction.kind == "total":
        return "total"
    return " ".join(format_subset(s) for s in extraction.subsets)


def _add_series_io(parser, two_inputs=True):
    parser.add_argument("inputs", nargs=2 if two_inputs else 1,
                        help="series file(s), '-' for stdin")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--ell", type=int, default=None)
    parser.add_argument("--m", type=int, default=None)
    parser.add_argument("--maxlen", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circletree",
        description="exact Hopf-algebra calculations on decorated rooted circle trees "
                    "and the feedback group of their series")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("shuffle", help="shuffle product of two words")
    p.add_argument("words", nargs=2)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("degree", help="grading of a word or a tree")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--word")
    group.add_argument("--rct")
    p.add_argument("--m", type=int, default=None)

    p = sub.add_parser("subsets", help="admissible position subsets of a tree")
    p.add_argument("--rct", required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("extractions", help="extraction families of a tree")
    p.add_argument("--rct", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--all", action="store_true",
                   help="general (disjoint-or-nested) families instead of admissible ones")
    p.add_argument("--include-trivial", action="store_true",
                   help="list the empty and total extractions too")

    p = sub.add_parser("coproduct", help="coproduct of a tree")
    p.add_argument("--rct", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--linearized", action="store_true")

    p = sub.add_parser("antipode", help="antipode of a tree")
    p.add_argument("--rct", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("left", "right", "forest"), default="left")

    p = sub.add_parser("stats", help="antipode term statistics (CSV)")
    p.add_argument("--rct", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--method", choices=("recursive_left", "forest"), default="recursive_left")

    p = sub.add_parser("table1", help="distinct antipode terms of the all-white trees (CSV)")
    p.add_argument("--max-degree", type=int, required=True)

    p = sub.add_parser("prelie", help="insertion product of two trees")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--m", type=int, required=True)

    for name, help_text in (
        ("compose", "cascade product of two series"),
        ("modcompose", "modified cascade product"),
        ("hatcompose", "identity-shifted cascade product"),
        ("group", "feedback group product"),
    ):
        p = sub.add_parser(name, help=help_text)
        _add_series_io(p)

    p = sub.add_parser("invert", help="feedback group inverse")
    p.add_argument("inputs", nargs=1, help="series file, '-' for stdin")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--maxlen", type=int, default=None,
                   help="word length up to which the inverse is computed")

    p = sub.add_parser("convolve", help="character convolution on one coordinate map")
    _add_series_io(p)
    p.add_argument("--coordmap", required=True, help="e.g. a[1;0.1]")

    p = sub.add_parser("numcheck", help="numerical identity check (CSV)")
    p.add_argument("--kind", choices=("shuffle", "compose", "group"), required=True)
    p.add_argument("--N", type=int, default=2000)
    p.add_argument("--T", type=float, default=1.0)

    p = sub.add_parser("axioms", help="run the structural property suites")
    p.add_argument("--max-degree", type=int, default=8)
    p.add_argument("--m", type=int, default=2)

    return parser


def _run(args) -> int:
    if args.command == "shuffle":
        try:
            u = parse_word(args.words[0], args.m)
            v = parse_word(args.words[1], args.m)
        except ValueError as exc:
            raise CliError(str(exc), PARSE_ERROR) from exc
        result = shuffle(u, v)
        for word in sorted(result, key=lambda w: (len(w), w)):
            print(f"{format_word(word)} {format_rational(result[word])}")
        return 0

    if args.command == "degree":
        if args.word is not None:
            try:
                word = parse_word(args.word, args.m)
            except ValueError as exc:
                raise CliError(str(exc), PARSE_ERROR) from exc
            print(word_degree(word))
        else:
            c = _parse_rct_arg(args.rct, args.m)
            print(f"degree {degree(c)}")
            print(f"weight {weight(c)}")
        return 0

    if args.command == "subsets":
        c = _parse_rct_arg(args.rct, args.m)
        from .trees import admissible_subsets
        for subset in admissible_subsets(c):
            print(format_subset(subset))
        return 0

    if args.command == "extractions":
        c = _parse_rct_arg(args.rct, args.m)
        if args.all:
            items = enumerate_all_extractions(c)
        else:
            items = enumerate_admissible_extractions(c, include_trivial=args.include_trivial)
        for extraction in items:
            print(_extraction_line(extraction))
        return 0

    if args.command == "coproduct":
        c = _parse_rct_arg(args.rct, args.m)
        if args.linearized:
            tensor = hopf.linearized_coproduct(c, args.m)
        elif args.reduced:
            tensor = hopf.reduced_coproduct(c, args.m)
        else:
            tensor = hopf.coproduct(c, args.m)
        print(hopf.format_tensor(tensor))
        return 0

    if args.command == "antipode":
        c = _parse_rct_arg(args.rct, args.m)
        print(hopf.format_poly(hopf.antipode(c, args.m, args.method)))
        return 0

    if args.command == "stats":
        c = _parse_rct_arg(args.rct, args.m)
        record = hopf.antipode_stats(c, args.m, args.method)
        print("degree,method,generated,distinct,cancelled_mass")
        print(f"{record.degree},{record.method},{record.generated},"
              f"{record.distinct},{record.cancelled_mass}")
        return 0

    if args.command == "table1":
        print("degree,distinct_terms")
        k = 1
        while 2 * k + 1 <= args.max_degree:
            c = Rct(1, (0,) * k)
            poly = hopf.antipode_recursive(c, 1, "left")
            print(f"{2 * k + 1},{len(poly)}")
            k += 1
        return 0

    if args.command == "prelie":
        left = _parse_rct_arg(args.left, args.m)
        right = _parse_rct_arg(args.right, args.m)
        result = prelie.prelie_product(left, right)
        for c in sorted(result):
            from .trees import format_rct
            print(f"{format_rct(c)} {format_rational(result[c])}")
        return 0

    if args.command in {"compose", "modcompose", "hatcompose", "group"}:
        a = _load_series(args.inputs[0], args)
        b = _load_series(args.inputs[1], args)
        op = {
            "compose": groupops.compose,
            "modcompose": groupops.mod_compose,
            "hatcompose": groupops.hat_compose,
            "group": groupops.group_product,
        }[args.command]
        try:
            result = op(a, b)
        except ValueError as exc:
            raise CliError(str(exc), SEMANTIC_ERROR) from exc
        _emit_series(result, args)
        return 0

    if args.command == "invert":
        target = args.maxlen
        args.maxlen = None  # file terms fix the polynomial; parse at natural length
        a = _load_series(args.inputs[0], args)
        args.maxlen = target
        if target is not None and target > a.max_len:
            a = Series(a.ell, a.m, target, dict(a.coeffs))
        try:
            result = groupops.group_inverse(a, target)
        except ValueError as exc:
            raise CliError(str(exc), SEMANTIC_ERROR) from exc
        _emit_series(result, args)
        return 0

    if args.command == "convolve":
        a = _load_series(args.inputs[0], args)
        b = _load_series(args.inputs[1], args)
        try:
            cmap = coordmaps.parse_coord_map(args.coordmap)
        except ValueError as exc:
            raise CliError(str(exc), PARSE_ERROR) from exc
        try:
            value = groupops.convolve(groupops.Character(a), groupops.Character(b), cmap)
        except ValueError as exc:
            raise CliError(str(exc), SEMANTIC_ERROR) from exc
        print(format_rational(value))
        return 0

    if args.command == "numcheck":
        grid_sizes = [args.N // 8, args.N // 4, args.N // 2, args.N]
        fns = numeric.standard_inputs()
        print("kind,case,N,deviation")
        worst = 0.0
        for case, (kind, c, d) in enumerate(numeric.standard_corpus()):
            if kind != args.kind:
                continue
            for n_size, dev in numeric.convergence_table(kind, c, d, fns, args.T, grid_sizes):
                print(f"{kind},{case},{n_size},{dev:.6e}")
                if n_size == args.N:
                    worst = max(worst, dev)
        print(f"max deviation at N={args.N}: {worst:.6e}")
        return 0

    if args.command == "axioms":
        for name, count in checks.run_axioms(args.max_degree, args.m):
            print(f"{name}: OK ({count} cases)")
        print("OK")
        return 0

    raise CliError(f"unknown command {args.command}", PARSE_ERROR)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except AssertionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
