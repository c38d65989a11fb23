"""Command-line entry point: ``gradedrham <command> RING [options]``.

Exit codes: 0 success, 1 mismatch or failure to stabilize, 2 usage or parse error.
"""

import argparse
import json
import re
import sys
from fractions import Fraction

from .amitsur import amitsur_cohomology, default_window
from .compare import Workbench, dimension_report, h1_to_oneform, log_cocycle, naive_class_is_nonzero
from .corpus import resolve_ring, run_corpus
from .derham import hartshorne_cohomology, naive_cohomology
from .errors import GradedRhamError, NonHomogeneousRelation, ParseError, WeightZeroInfinite
from .graded import ORDERS, WindowPolicy
from .ringfile import load_ring, parse_polynomial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _interval(text):
    try:
        lo, _, hi = text.partition("..")
        lo, hi = int(lo), int(hi if hi else lo)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an interval like -6..6, got {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty interval {text!r}")
    return range(lo, hi + 1)


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def build_parser():
    ap = argparse.ArgumentParser(prog="gradedrham", description=(
        "Exact de Rham cohomology of weighted-homogeneous affine algebras over Q, "
        "computed by the completed Amitsur complex, by Hartshorne's complex and by Kahler forms."))
    sub = ap.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("ring", help="ring file, or the name of a bundled ring such as cusp")
    common.add_argument("--weights", type=_interval, help="weight window a..b (default -8..8, or 0..12 for positive weights)")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--jobs", type=_positive, default=1, help="threads used across weights")
    _policy_flags(common)

    p = sub.add_parser("check", parents=[common], help="dimensions of the weight pieces of B")
    p = sub.add_parser("amitsur", parents=[common], help="completed (or plain) Amitsur cohomology")
    p.add_argument("--adic", type=_positive, default=4, help="largest adic order N_max (default 4)")
    p.add_argument("--levels", type=_positive, default=3, help="level cap M; degrees 0..M-1 are reported")
    p.add_argument("--uncompleted", action="store_true", help="skip the completion (plain Amitsur complex)")
    p = sub.add_parser("hartshorne", parents=[common], help="Hartshorne's de Rham cohomology")
    p.add_argument("--p-max", type=_positive, default=8, dest="p_max")
    sub.add_parser("naive", parents=[common], help="cohomology of the Kahler de Rham complex")
    p = sub.add_parser("compare", parents=[common], help="side-by-side tables and a verdict")
    p.add_argument("--adic", type=_positive, default=4)
    p.add_argument("--levels", type=_positive, default=3)
    p.add_argument("--p-max", type=_positive, default=8, dest="p_max")
    p = sub.add_parser("log-cocycle", parents=[common], help="logarithmic 1-cocycle of a unit")
    p.add_argument("--unit", required=True)
    p.add_argument("--inverse", required=True)
    p.add_argument("--adic", type=_positive, default=4)

    p = sub.add_parser("corpus", help="check every bundled ring against its expected values")
    p.add_argument("--dir", help="directory of .ring files (default: the bundled corpus)")
    p.add_argument("--only", nargs="*", help="ring names to run")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.add_argument("--jobs", type=_positive, default=1)
    _policy_flags(p)
    return ap


def _policy_flags(p):
    d = WindowPolicy()
    g = p.add_argument_group("window policy")
    g.add_argument("--std-cap", type=_positive, default=d.std_degree_cap, help="initial standard-degree window T")
    g.add_argument("--tensor-window", type=_positive, default=d.tensor_factor_window,
                   help="per-factor weight window K for the uncompleted complex")
    g.add_argument("--growth", type=Fraction, default=d.growth_factor)
    g.add_argument("--confirmations", type=_positive, default=d.confirmations)
    g.add_argument("--hard-cap", type=_positive, default=d.hard_cap)
    g.add_argument("--order", choices=sorted(ORDERS), default=d.order, help="monomial order")


def _policy(args):
    try:
        return WindowPolicy(args.std_cap, args.tensor_window, args.growth, args.confirmations,
                            args.hard_cap, args.order)
    except ValueError as err:
        raise UsageError(str(err)) from None


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False, default=str))
    else:
        print(text)


def report_text(rep):
    lines = [f"{rep.source} cohomology of {rep.ring}  {json.dumps(rep.params)}"]
    width = rep.degrees
    lines.append(f"{'d':>4}  " + "".join(f"{'H^' + str(i):>6}" for i in range(width)) + "  stabilized")
    for e in rep.entries:
        cells = "".join(f"{v:>6}" for v in e.h) + " " * 6 * (width - len(e.h))
        lines.append(f"{e.d:>4}  {cells}  {'yes' if e.stabilized else 'NO'}")
    lines.append(f"{'tot':>4}  " + "".join(f"{v:>6}" for v in rep.totals))
    lines.extend(f"warning: {w}" for w in rep.warnings)
    return "\n".join(lines)


def _window(args, pres):
    return args.weights if args.weights is not None else default_window(pres)


def cmd_check(args, pres, policy):
    bench = Workbench(pres, policy)
    rows = []
    for d in _window(args, pres):
        try:
            piece = bench.alg.piece(d)
            rows.append({"d": d, "dim": piece.dim, "stabilized": piece.stabilized, "T": piece.params.get("T")})
        except GradedRhamError as err:
            rows.append({"d": d, "dim": None, "stabilized": False, "error": str(err)})
    payload = {"ring": pres.name, "regime": pres.regime, "pieces": rows}
    text = [f"ring {pres.name} ({pres.regime} weights)", f"{'d':>4}  {'dim B_d':>8}"]
    text += [f"{r['d']:>4}  {r['dim'] if r['dim'] is not None else '?':>8}" for r in rows]
    _emit(args, payload, "\n".join(text))
    return EXIT_OK if all(r["stabilized"] for r in rows) else EXIT_FAIL


def cmd_report(args, pres, policy):
    window = _window(args, pres)
    if args.command == "amitsur":
        bench = Workbench(pres, policy)
        rep = amitsur_cohomology(pres, window, args.adic, args.levels, uncompleted=args.uncompleted,
                                 engine=bench.amitsur, jobs=args.jobs)
    elif args.command == "hartshorne":
        rep = hartshorne_cohomology(pres, window, args.p_max, policy, jobs=args.jobs)
    else:
        rep = naive_cohomology(pres, window, policy, jobs=args.jobs)
    _emit(args, rep.as_json(), report_text(rep))
    return EXIT_OK if rep.stabilized else EXIT_FAIL


def cmd_compare(args, pres, policy):
    rep = dimension_report(pres, _window(args, pres), args.adic, args.levels, args.p_max, policy, args.jobs)
    _emit(args, rep.as_json(), rep.table())
    return EXIT_OK if rep.verdict == "AGREE" else EXIT_FAIL


def cmd_log_cocycle(args, pres, policy):
    u = parse_polynomial(args.unit, pres.symbols)
    ui = parse_polynomial(args.inverse, pres.symbols)
    bench = Workbench(pres, policy)
    lc = log_cocycle(bench, u, ui, args.adic)
    form = h1_to_oneform(bench, lc.coords, args.adic, check=False)
    nonzero = naive_class_is_nonzero(bench, form) if lc.verified else None
    payload = {**lc.as_json(), "ring": pres.name, "oneform": str(form), "class_nonzero": nonzero}
    status = "cocycle OK" if lc.verified else "cocycle check FAILED"
    text = f"{status}; 1-form = {form}"
    if nonzero is not None:
        text += "\nclass in naive H^1: " + ("nonzero" if nonzero else "zero")
    _emit(args, payload, text)
    return EXIT_OK if lc.verified else EXIT_FAIL


def cmd_corpus(args, policy):
    checks = run_corpus(args.dir, set(args.only) if args.only else None, policy, args.jobs)
    failed = [c for c in checks if not c.ok]
    text = [f"{'ok' if c.ok else 'FAIL':<5}{c.ring:<10} {c.what}: expected {c.expected}, got {c.got}"
            + (f"  ({c.note})" if c.note else "") for c in checks]
    text.append(f"{len(checks) - len(failed)}/{len(checks)} checks passed")
    _emit(args, {"checks": [c.as_json() for c in checks], "passed": not failed}, "\n".join(text))
    return EXIT_FAIL if failed else EXIT_OK


def _error(args, err, code):
    fmt = getattr(args, "format", "table")
    kind = getattr(err, "code", "usage_error")
    if fmt == "json":
        print(json.dumps({"error": {"code": kind, "message": str(err)}}))
    else:
        print(f"error ({kind}): {err}", file=sys.stderr)
    return code


def _join_negative_intervals(argv):
    """Let ``--weights -6..6`` through argparse, which would read ``-6..6`` as an option."""
    out = []
    it = iter(argv)
    for a in it:
        if a == "--weights":
            nxt = next(it, None)
            if nxt is not None and re.fullmatch(r"-?\d+(\.\.-?\d+)?", nxt):
                out.append(f"--weights={nxt}")
                continue
            out.append(a)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(a)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_join_negative_intervals(argv))
    try:
        policy = _policy(args)
        if args.command == "corpus":
            return cmd_corpus(args, policy)
        try:
            pres = load_ring(resolve_ring(args.ring)).presentation
        except (FileNotFoundError, ParseError, NonHomogeneousRelation, WeightZeroInfinite) as err:
            return _error(args, err, EXIT_USAGE)
        handler = {"check": cmd_check, "amitsur": cmd_report, "hartshorne": cmd_report, "naive": cmd_report,
                   "compare": cmd_compare, "log-cocycle": cmd_log_cocycle}[args.command]
        return handler(args, pres, policy)
    except (UsageError, ParseError, ValueError) as err:
        return _error(args, err, EXIT_USAGE)
    except GradedRhamError as err:
        return _error(args, err, EXIT_FAIL)


if __name__ == "__main__":
    sys.exit(main())
