"""Command line front end: ``catpoly <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 verification mismatch,
3 internal solver error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from itertools import combinations

from . import contfrac, solvers
from .series import MPoly
from .words import (STATISTICS, CatalanWord, EnumerationCapError, Polyomino,
                    black_capacity, capacity_sequence, catalan_number,
                    diag_bijection, distribution, polyominoes, vertical_capacities)

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3

SUPPORTED = {
    "brute": {"F", "OD", "EV", "C"},
    "matrix": {"F", "OD", "EV"},
    "contfrac": {"F", "A0"},
    "closed": {"OD", "EV"},
    "funceq": {"F", "C"},
}


class UsageError(Exception):
    pass


def _stats_arg(text: str) -> list[str]:
    stats = [s for s in text.split(",") if s]
    bad = [s for s in stats if s not in STATISTICS]
    if bad:
        raise UsageError(f"unknown statistic(s) {', '.join(bad)}; "
                         f"choose from {', '.join(sorted(STATISTICS))}")
    return stats


def cmd_enumerate(args, out):
    stats = _stats_arg(args.stats)
    rows = []
    for p in polyominoes(args.n):
        rec = {"heights": list(p.heights)}
        for s in stats:
            rec[s] = STATISTICS[s](p.heights)
        rows.append(rec)
    if args.format == "json":
        for rec in rows:
            out.write(json.dumps(rec) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["heights", *stats])
        for rec in rows:
            w.writerow([",".join(map(str, rec["heights"])), *(rec[s] for s in stats)])
    else:
        for rec in rows:
            extra = " ".join(f"{s}={rec[s]}" for s in stats)
            out.write((",".join(map(str, rec["heights"])) + (" " + extra if extra else "")) + "\n")
    return EXIT_OK


def cmd_distribution(args, out):
    stats = _stats_arg(args.stats)
    if not stats:
        raise UsageError("--stats needs at least one statistic")
    table = distribution(args.n, stats)
    if args.format == "json":
        data = [{"n": n, "stats": dict(zip(stats, key)), "count": c}
                for (n, key), c in sorted(table.entries.items())]
        out.write(json.dumps(data) + "\n")
    elif args.format == "csv":
        csv.writer(out, lineterminator="\n").writerows(table.to_csv_rows())
    else:
        for key, c in table.for_length(args.n).items():
            out.write(f"{','.join(map(str, key))}: {c}\n")
        out.write(f"total: {table.total(args.n)}\n")
    return EXIT_OK


def _brute(gf: str, x_max: int) -> MPoly:
    if gf == "F":
        return solvers.brute_force_series(solvers.f_ring(x_max), {"q": "bck"}, x_max)
    if gf in ("OD", "EV"):
        ring = solvers._evod_ring(x_max, True)
        s = solvers.brute_force_series(ring, {"y": "ver", "z": "white", "u": "last"}, x_max)
        parity = 1 if gf == "OD" else 0
        return s.filter(lambda e: e[0] % 2 == parity)
    ring = solvers._funceq_ring(x_max)
    return solvers.brute_force_series(ring, {"y": "s", "z": "s_bar", "u": "last"}, x_max)


def compute_series(method: str, gf: str, x_max: int, full: bool = False) -> solvers.GFResult:
    """Dispatch ``(method, gf)``; without ``full`` the displayed specialisation
    is returned: ``F(x,1,q)``, ``OD(x,y,1,1)``, ``EV(x,1,z,1)``, ``C(x,y,1,1)``."""
    if gf not in SUPPORTED.get(method, ()):
        raise UsageError(f"method {method!r} does not produce {gf!r}; "
                         f"it supports {', '.join(sorted(SUPPORTED.get(method, [])))}")
    if x_max < 1:
        raise UsageError("--xmax must be positive")
    if method == "brute":
        series = _brute(gf, x_max)
    elif method == "matrix" and gf == "F":
        series = (solvers.matrix_solve_full(x_max).series if full
                  else solvers.matrix_solve_at_u1(x_max)["F"].series)
    elif method == "matrix":
        res = solvers.evod_solve_iteration(x_max, with_u=full)
        series = res[gf if full else gf + "1"].series
    elif method == "closed":
        series = solvers.evod_closed_form(x_max)[gf + "1"].series
    elif method == "contfrac":
        a0, _ = contfrac.a0_b0(x_max)
        series = a0 if gf == "A0" else a0 - 1
    else:
        res = solvers.funceq_solve(x_max)
        if gf == "C":
            series = res["C"].series if full else res["C1"].series
        else:
            series = solvers.c_to_f(res["C1"].series, solvers.f_ring(x_max))
    if not full:
        series = _specialise(gf, series)
    return solvers.GFResult(gf, method, series, x_max)


def _specialise(gf: str, s: MPoly) -> MPoly:
    names = s.ring.names
    drop = {"F": ["u"], "OD": ["z", "u"], "EV": ["y", "u"], "C": ["z", "u"]}.get(gf, [])
    for v in drop:
        if v in names:
            s = s.eval_one(v)
    return s


def cmd_series(args, out):
    res = compute_series(args.method, args.gf, args.xmax, args.full)
    if args.format == "json":
        out.write(res.dumps() + "\n")
    else:
        for d, text in res.series.graded_text("x"):
            out.write(f"x^{d}: {text}\n")
    return EXIT_OK


VERIFY_METHODS = ("brute", "matrix", "contfrac", "iteration", "closed", "funceq")


def verify_all(x_max: int) -> dict[str, MPoly]:
    """``F(x,1,q)`` from every route, keyed by method name."""
    ring = solvers.f_ring(x_max)
    out = {"brute": solvers.brute_force_series(ring, {"q": "bck"}, x_max),
           "matrix": solvers.matrix_solve_at_u1(x_max)["F"].series}
    a0, _ = contfrac.a0_b0(x_max)
    out["contfrac"] = a0 - 1
    it = solvers.evod_solve_iteration(x_max, with_u=False)
    out["iteration"] = solvers.evod_to_f(it["EV1"].series, it["OD1"].series, ring)
    cf = solvers.evod_closed_form(x_max)
    out["closed"] = solvers.evod_to_f(cf["EV1"].series, cf["OD1"].series, ring)
    out["funceq"] = solvers.c_to_f(solvers.funceq_solve(x_max)["C1"].series, ring)
    return out


def cmd_verify(args, out):
    results = verify_all(args.xmax)
    names = list(results)
    width = max(map(len, names))
    out.write(" " * width + "  " + "  ".join(n[:9].rjust(9) for n in names) + "\n")
    for a in names:
        cells = ["ok".rjust(9) if results[a] == results[b] else "DIFF".rjust(9) for b in names]
        out.write(a.ljust(width) + "  " + "  ".join(cells) + "\n")
    failures = []
    for a, b in combinations(names, 2):
        r = solvers.compare(f"{a} vs {b}", results[a], results[b])
        if not r:
            failures.append(r)
    if failures:
        r = failures[0]
        exps, ca, cb = r.first
        ring = results[names[0]].ring
        mono = "*".join(f"{n}^{e}" for n, e in zip(ring.names, exps) if e) or "1"
        out.write(f"MISMATCH {r.name} at {mono}: {ca} != {cb}\n")
        return EXIT_MISMATCH
    out.write(f"all {len(names)} methods agree on F(x,1,q) through x^{args.xmax}\n")
    return EXIT_OK


def cmd_bijection(args, out):
    if args.n is not None:
        n = args.n
        bad = None
        images = set()
        for p in polyominoes(n):
            img = diag_bijection(p)
            images.add(img.heights)
            target = vertical_capacities(img)[0 if n % 2 else 1]
            if black_capacity(p) != target and bad is None:
                bad = (p, img)
        injective = len(images) == catalan_number(n)
        ok = bad is None and injective
        label = "ver" if n % 2 else "white"
        out.write(f"n={n}: bck(P) = {label}(f(P)) for all {catalan_number(n)} polyominoes: "
                  f"{'pass' if bad is None else 'FAIL at ' + str(bad[0])}\n")
        out.write(f"n={n}: f injective: {'pass' if injective else 'FAIL'}\n")
        return EXIT_OK if ok else EXIT_MISMATCH
    try:
        if args.word is not None:
            p = CatalanWord.parse(args.word).polyomino()
        else:
            p = Polyomino.parse(args.heights)
    except ValueError as exc:
        raise UsageError(f"invalid input: {exc}") from None
    if not len(p):
        raise UsageError("empty polyomino")
    img = diag_bijection(p)
    bck = black_capacity(p)
    ver, white = vertical_capacities(img)
    label, value = ("ver", ver) if len(p) % 2 else ("white", white)
    out.write(f"P: {p}\n")
    out.write(f"f(P): {img}\n")
    out.write(f"bck(P) = {bck}, {label}(f(P)) = {value}: {'pass' if bck == value else 'FAIL'}\n")
    return EXIT_OK if bck == value else EXIT_MISMATCH


def cmd_sequence(args, out):
    seq = capacity_sequence(args.stat, args.kmax, max_length=args.max_length)
    if args.format == "bfile":
        for k, v in enumerate(seq, start=1):
            out.write(f"{k} {v}\n")
    else:
        out.write(",".join(map(str, seq)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catpoly",
        description="Black cell capacity of Catalan polyominoes: enumeration and "
                    "generating functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list every polyomino of length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", default="")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("distribution", help="counts by statistic values for length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stats", default="bck")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_distribution)

    p = sub.add_parser("series", help="series coefficients by x-degree")
    p.add_argument("--method", choices=sorted(SUPPORTED), required=True)
    p.add_argument("--gf", choices=["F", "OD", "EV", "C", "A0"], required=True)
    p.add_argument("--xmax", type=int, default=6)
    p.add_argument("--full", action="store_true",
                   help="keep every variable instead of the usual specialisation")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="cross-check every method on F(x,1,q)")
    p.add_argument("--xmax", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bijection", help="apply or check the diagonal bijection")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--heights")
    g.add_argument("--n", type=int)
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("sequence", help="polyomino counts by bck or ver value")
    p.add_argument("--stat", choices=["bck", "ver"], required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--max-length", type=int, default=None)
    p.add_argument("--format", choices=["plain", "bfile"], default="plain")
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    buf = io.StringIO()
    try:
        code = args.func(args, buf)
    except (UsageError, EnumerationCapError) as exc:
        err.write(f"catpoly {args.command}: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        err.write(f"catpoly {args.command}: {exc}\n")
        return EXIT_USAGE
    except ArithmeticError as exc:
        err.write(f"catpoly {args.command}: internal solver error: {exc}\n")
        return EXIT_INTERNAL
    out.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
