"""Command line front end.

    squarekit VERB [INPUT] [--builder SPEC] [--levels N] [--mode proto|stable] [--out PATH]

INPUT is a JSON interchange file; SPEC names a built-in example instead:
finset:N, pmonoid:FILE|1x, graph:1:FILE|edge, graph:2:N, graph:3:N,
intervals:q:L[:refl], path:FILE|z2.  Exit status: 0 pass, 1 failed check,
2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from importlib import resources

from . import examples as ex
from .catcore import Report, compact, is_groupoid, ordered
from .constructions import (check_strict_1segal, comparison_witnesses, double_nerve_diag,
                            forgetful_equivalence, ob_s, s_simplicial, t_simplicial)
from .diagrams import enumerate_diagrams, row_shape, staircase_shape
from .double import (check_completion_axioms, search_completions, validate_squares_category,
                     weak_equivalences)
from .interchange import InterchangeError, load_json, load_squares, parse_sset
from .k0 import k0_group
from .simplicial import (PartialMonoid, check_2segal_groupoids, check_segal,
                         check_sset_isomorphism, find_sset_isomorphism, validate_truncated)

VERBS = ("validate", "weq", "k0", "nerve", "segal", "compare", "roundtrip", "dot")


class UsageError(Exception):
    pass


def shipped_example(name="finset2.json"):
    return resources.files("squarekit").joinpath("data", name)


def _pmonoid(arg):
    if arg == "1x":
        return ex.pmonoid_1x()
    doc = load_json(arg)
    if not isinstance(doc, dict) or set(doc) != {"carrier", "unit", "table"}:
        raise InterchangeError("pmonoid: expected exactly the keys carrier, unit, table")
    table = {}
    for k, t in enumerate(doc["table"]):
        if not (isinstance(t, list) and len(t) == 3):
            raise InterchangeError(f"table[{k}]: expected [a, b, ab]")
        table[(t[0], t[1])] = t[2]
    m = PartialMonoid(list(doc["carrier"]), doc["unit"], table)
    r = m.validate()
    if not r.passed:
        raise InterchangeError("pmonoid: " + r.violations[0])
    return m


def _sset(arg):
    if arg == "z2":
        return ex.z2_nerve(4)
    return parse_sset(load_json(arg))


def build(spec: str):
    """Returns (squares category, completion data or None, source simplicial set or None)."""
    parts = spec.split(":")
    kind = parts[0]
    try:
        if kind == "finset" and len(parts) == 2:
            d = ex.finset_squares(int(parts[1]))
        elif kind == "pmonoid" and len(parts) == 2:
            d = ex.partial_monoid_squares(_pmonoid(parts[1]))
        elif kind == "graph" and len(parts) == 3:
            variant = int(parts[1])
            if variant == 1:
                if parts[2] == "edge":
                    g = ex.single_edge()
                else:
                    doc = load_json(parts[2])
                    if not isinstance(doc, dict) or set(doc) != {"vertices", "edges"}:
                        raise InterchangeError("graph: expected exactly the keys vertices, edges")
                    g = ex.GraphData(doc["vertices"], doc["edges"])
                d = ex.graph_squares(1, g)
            else:
                d = ex.graph_squares(variant, int(parts[2]))
        elif kind == "intervals" and len(parts) in (3, 4):
            if len(parts) == 4 and parts[3] != "refl":
                raise UsageError(f"bad builder flag {parts[3]!r}")
            d = ex.interval_polytopes(int(parts[1]), int(parts[2]), len(parts) == 4)
        elif kind == "path" and len(parts) == 2:
            x = _sset(parts[1])
            d = ex.path_double_category(x)
            return d, d.completion, x
        else:
            raise UsageError(f"unknown builder spec {spec!r}")
    except (ValueError, KeyError, TypeError, OSError) as e:
        if isinstance(e, InterchangeError):
            raise
        raise UsageError(f"builder {spec!r}: {e}") from None
    return d, getattr(d, "completion", None), None


def load(args):
    if args.builder and args.input:
        raise UsageError("give either an input file or --builder, not both")
    if args.builder:
        return build(args.builder)
    if not args.input:
        raise UsageError("no input: give a JSON file or --builder SPEC")
    try:
        d, comp = load_squares(args.input)
    except OSError as e:
        raise UsageError(str(e)) from None
    return d, comp, None


# verbs; each returns (passed, text)

def _validate(d, comp, x, args):
    r = validate_squares_category(d)
    return r.passed, r.text()


def _weq(d, comp, x, args):
    w = weak_equivalences(d)
    lines = [f"weak equivalences of {d.name}",
             f"  horizontal ({len(w.hweq)}): " + ", ".join(compact(f) for f in ordered(w.hweq)),
             f"  vertical ({len(w.vweq)}): " + ", ".join(compact(u) for u in ordered(w.vweq))]
    return True, "\n".join(lines)


def _k0(d, comp, x, args):
    k = k0_group(d)
    return True, k.describe(compact)


def _nerve(d, comp, x, args):
    n = args.levels
    lines = [f"nerves of {d.name} up to level {n}"]
    lines.append("  T objects: " + " ".join(str(len(enumerate_diagrams(d, row_shape(k))))
                                            for k in range(n + 1)))
    lines.append("  S objects: " + " ".join(str(len(enumerate_diagrams(d, staircase_shape(k))))
                                            for k in range(n + 1)))
    diag = double_nerve_diag(d, min(n, 2))
    r = validate_truncated(diag)
    lines.append(f"  double nerve diagonal (levels 0..{diag.bound}): "
                 + " ".join(map(str, diag.sizes())))
    lines.append("  " + r.text().replace("\n", "\n  "))
    return r.passed, "\n".join(lines)


def _segal(d, comp, x, args):
    n = args.levels
    reps = [check_strict_1segal(t_simplicial(d, n), levels=tuple(range(2, n + 1)))]
    S = s_simplicial(d, n)
    bad = [k for k, c in enumerate(S.levels) if not is_groupoid(c)[0]]
    if bad:
        reps.append(Report("2-Segal (groupoid level)", False,
                           [f"precondition: S level {bad[0]} is not a groupoid"]))
    else:
        reps.append(check_2segal_groupoids(S))
    return all(r.passed for r in reps), "\n".join(r.text() for r in reps)


def _compare(d, comp, x, args):
    if comp is None:
        comp = search_completions(d, stable=(args.mode == "stable"))
    reps = [check_completion_axioms(d, comp, args.mode)]
    if reps[0].passed:
        targets = ("H", "V") if args.mode == "stable" else ("H",)
        for n in range(1, min(args.levels, 2) + 1):
            for t in targets:
                reps.append(forgetful_equivalence(d, comp, n, t))
            reps.append(comparison_witnesses(d, comp, n))
    return all(r.passed for r in reps), "\n".join(r.text() for r in reps)


def _roundtrip(d, comp, x, args):
    if x is None:
        raise UsageError("roundtrip needs a simplicial set input: --builder path:FILE or path:z2")
    n = min(args.levels, x.bound, 3)
    o = ob_s(d, n)
    iso = find_sset_isomorphism(o, x.truncate(n))
    reps = []
    if iso is None:
        reps.append(Report(f"round trip (levels 0..{n})", False,
                           [f"no isomorphism: sizes {o.sizes()} vs {x.truncate(n).sizes()}"]))
    else:
        reps.append(check_sset_isomorphism(o, x.truncate(n), iso))
    reps.append(check_segal(o, 2))
    return all(r.passed for r in reps), "\n".join(r.text() for r in reps)


def _dot(d, comp, x, args):
    from .dot import export_ladder, export_square, export_staircase
    n, k = args.levels, args.index
    if args.kind == "square":
        items = d.ordered_squares
        render = lambda it: export_square(d, it, f"square_{k}")
    elif args.kind == "staircase":
        items = enumerate_diagrams(d, staircase_shape(n))
        render = lambda it: export_staircase(d, n, it, f"staircase_{n}_{k}")
    else:
        T = t_simplicial(d, n).levels[n]
        items = ordered(T.morphisms)
        render = lambda it: export_ladder(d, n, it, f"ladder_{n}_{k}")
    if not 0 <= k < len(items):
        raise UsageError(f"--index {k} out of range: {len(items)} {args.kind}s")
    return True, render(items[k]).rstrip("\n")


HANDLERS = {"validate": _validate, "weq": _weq, "k0": _k0, "nerve": _nerve, "segal": _segal,
            "compare": _compare, "roundtrip": _roundtrip, "dot": _dot}


def parser():
    p = argparse.ArgumentParser(prog="squarekit", description=__doc__.split("\n\n")[0])
    p.add_argument("verb", choices=VERBS)
    p.add_argument("input", nargs="?")
    p.add_argument("--builder")
    p.add_argument("--levels", type=int, default=4)
    p.add_argument("--mode", choices=("proto", "stable"), default="stable")
    p.add_argument("--out")
    p.add_argument("--kind", choices=("square", "staircase", "ladder"), default="square",
                   help="dot: what to export")
    p.add_argument("--index", type=int, default=0, help="dot: which item, in canonical order")
    return p


def main(argv=None) -> int:
    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        if args.levels < 0:
            raise UsageError("--levels must be nonnegative")
        d, comp, x = load(args)
        passed, text = HANDLERS[args.verb](d, comp, x, args)
    except (InterchangeError, UsageError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if passed else 1


if __name__ == "__main__":
    sys.exit(main())
