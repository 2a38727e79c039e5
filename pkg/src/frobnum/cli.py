"""Command-line entry point.

Exit codes: 0 success, 1 verification mismatch, 2 invalid input,
3 output failure. Numbers print with '.' decimals; z to 1 decimal and
R to 5 decimals.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import asdict
from fractions import Fraction
from functools import reduce

from . import __version__, counting, dedekind, experiment, frobenius, verify
from .numtheory import pairwise_coprime

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=1, default=_jsonable))
    else:
        print(text)


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    raise TypeError(type(obj).__name__)


def _positive(parts):
    if not parts or min(parts) < 1:
        raise InputError(f"parts must be positive integers, got {parts}")


# -- commands ---------------------------------------------------------------

def compute(parts: list[int], method: str = "auto") -> tuple[frobenius.FrobeniusResult, str]:
    """Frobenius number for 2 or more parts; returns (result, note)."""
    _positive(parts)
    if len(parts) < 2:
        raise InputError("need at least two parts")
    if reduce(math.gcd, parts) != 1:
        raise InputError(f"gcd{tuple(parts)} > 1: Frobenius number undefined")
    parts = tuple(parts)
    if method == "sieve":
        return frobenius.FrobeniusResult(parts, frobenius.frobenius_sieve(parts), "sieve"), ""
    if len(parts) == 2:
        if method == "search":
            raise InputError("--method search needs exactly three parts")
        return frobenius.FrobeniusResult(parts, frobenius.sylvester(*parts), "sylvester"), ""
    if len(parts) > 3:
        if method == "search":
            raise InputError("--method search needs exactly three parts")
        note = "formula-based counting covers three parts; used the sieve"
        return frobenius.FrobeniusResult(parts, frobenius.frobenius_sieve(parts), "sieve"), note
    a, b, c = parts
    if method == "search" or (pairwise_coprime(a, b, c) and min(parts) > 1):
        if not pairwise_coprime(a, b, c):
            raise InputError(f"{parts} is not pairwise coprime; use --method auto")
        if min(parts) == 1:
            raise InputError("a part equals 1: every integer is representable (g = -1)")
        return frobenius.frobenius_search(a, b, c), ""
    return frobenius.FrobeniusResult(parts, frobenius.johnson_reduce(a, b, c), "johnson"), ""


def cmd_compute(args) -> int:
    res, note = compute(args.parts, args.method)
    payload = {"parts": list(res.parts), "g": res.g, "f": res.f,
               "method": res.method, "evaluations": res.evaluations}
    if note:
        payload["note"] = note
    text = f"g={res.g} f={res.f} method={res.method} evaluations={res.evaluations}"
    if note:
        text += f"\nnote: {note}"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_count(args) -> int:
    t, parts = args.t, args.parts
    _positive(parts)
    if t < 0:
        raise InputError("t must be nonnegative")
    oracle = counting.count_oracle(t, parts, positive=args.positive)
    payload = {"t": t, "parts": parts, "positive": args.positive, "oracle": oracle}
    text = f"oracle={oracle}"
    if len(parts) == 3 and pairwise_coprime(*parts):
        fn = counting.count_pos_formula if args.positive else counting.count_nonneg_formula
        payload["formula"] = fn(t, *parts)
        text = f"formula={payload['formula']} " + text
    _emit(args, payload, text)
    return EXIT_OK


def cmd_sigma(args) -> int:
    t, a, b, c = args.t, args.a, args.b, args.c
    fn = dedekind.sigma_direct if args.method == "direct" else dedekind.sigma_fast
    value = fn(t, a, b, c)
    payload = {"t": t, "a": a, "b": b, "c": c, "sigma": value, "float": float(value)}
    text = f"sigma_{t}({a},{b};{c}) = {value}"
    if args.check:
        diff = dedekind.sigma_numeric_check(t, a, b, c, args.check)
        payload["numeric_error"] = diff
        text += f"\n|numeric - exact| = {diff:.3e} at {args.check} digits"
    _emit(args, payload, text)
    return EXIT_OK


def cmd_classify(args) -> int:
    _positive([args.a, args.b, args.c])
    rep = frobenius.classify(args.a, args.b, args.c)
    payload = {"parts": [args.a, args.b, args.c], "verdict": rep.verdict, "witness": rep.witness}
    text = rep.verdict + (f" {rep.witness}" if rep.witness else "")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_bounds(args) -> int:
    a, b, c = args.a, args.b, args.c
    _positive([a, b, c])
    if math.gcd(math.gcd(a, b), c) != 1:
        raise InputError(f"gcd{(a, b, c)} > 1: Frobenius number undefined")
    rep = frobenius.bounds_report(a, b, c)
    payload = asdict(rep)
    text = "\n".join([
        f"g={rep.g}",
        f"davison_lower={rep.davison_lower:.3f} holds={rep.lower_holds}",
        f"bdr_upper={rep.bdr_upper:.3f} holds={rep.bdr_holds}",
        f"conjecture_upper={rep.conjecture_upper:.3f} holds={rep.conjecture_holds}",
    ])
    _emit(args, payload, text)
    return EXIT_OK


def _summary_text(s: experiment.SummaryStats) -> str:
    head = "     ".join(experiment.SUMMARY_COLUMNS)
    vals = " ".join([str(s.n)] + [f"{v:.3f}" for v in (s.mean, s.median, s.stdev, s.min, s.max, s.q1, s.q3)])
    return f"R: {head}\n   {vals}"


def cmd_experiment(args) -> int:
    try:
        cfg = experiment.ExperimentConfig(args.n, args.lo, args.hi, args.seed, args.workers)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    run = experiment.run_experiment(cfg)
    try:
        paths = experiment.emit_data(run.records, args.data_format, args.out, run.metadata,
                                     args.bin_width, args.bin_start)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    violators = experiment.scan_conjecture(run.records)
    below = experiment.davison_violations(run.records)
    payload = {
        "summary": asdict(run.summary),
        "tail_above_3": experiment.tail_census(run.records, 3),
        "tail_above_7_5": experiment.tail_census(run.records, 7.5),
        "conjecture_violations": experiment.confirm_violations(violators),
        "davison_violations": [(r.a, r.b, r.c) for r in below],
        "draws": run.draws,
        "rejections": run.rejections,
        "files": [str(p) for p in paths],
    }
    lines = [
        _summary_text(run.summary),
        f"R > 3: {payload['tail_above_3']}   R > 7.5: {payload['tail_above_7_5']}",
        f"f >= z^(5/4): {len(violators)} record(s)",
        f"f < sqrt(3abc): {len(below)} record(s)",
        f"draws={run.draws} rejected={sum(run.rejections.values())} {dict(sorted(run.rejections.items()))}",
        "wrote " + ", ".join(str(p) for p in paths),
    ]
    for v in payload["conjecture_violations"]:
        lines.append(f"  violation {v}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max > verify.MAX_GUARD:
        raise InputError(f"--max must be at most {verify.MAX_GUARD}")
    try:
        results = verify.run_all(args.max)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    ok = all(r.passed for r in results)
    payload = {"max": args.max, "passed": ok,
               "suites": [{"name": r.name, "checked": r.checked, "failed": r.failed,
                           "counterexamples": r.failures} for r in results]}
    lines = []
    for r in results:
        lines.append(f"{'PASS' if r.passed else 'FAIL'} {r.name}: {r.checked} checked, {r.failed} failed")
        for ex in r.failures:
            lines.append(f"  counterexample {ex}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_table(args) -> int:
    rows = experiment.reproduce_extremes()
    ok = all(r.passed for r in rows)
    payload = {"passed": ok, "rows": [
        {"triple": list(r.triple), "f": r.f, "expected_f": r.expected_f,
         "checks": r.checks, "passed": r.passed} for r in rows]}
    lines = []
    for r in rows:
        rec = experiment.ExperimentRecord(*r.triple, r.f)
        bad = [k for k, v in r.checks.items() if not v]
        lines.append(
            f"{'PASS' if r.passed else 'FAIL'} {r.triple[0]:>4} {r.triple[1]:>4} {r.triple[2]:>4} "
            f"f={r.f:<7} z={rec.z:.1f} sqrt3z={rec.sqrt3z:.1f} z^5/4={rec.zpow:.1f} R={rec.R:.5f}"
            + (f"  mismatch: {', '.join(bad)}" if bad else "")
        )
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if ok else EXIT_MISMATCH


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text",
                        help="printed output style (default: text)")

    p = argparse.ArgumentParser(prog="frobnum", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("compute", parents=[common], help="Frobenius number of the given parts")
    s.add_argument("parts", type=int, nargs="+")
    s.add_argument("--method", choices=("auto", "search", "sieve"), default="auto")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("count", parents=[common], help="number of representations of t")
    s.add_argument("t", type=int)
    s.add_argument("parts", type=int, nargs="+")
    s.add_argument("--positive", action="store_true", help="count strictly positive coefficients")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("sigma", parents=[common], help="Fourier-Dedekind sum sigma_t(a,b;c)")
    for name in ("t", "a", "b", "c"):
        s.add_argument(name, type=int)
    s.add_argument("--method", choices=("fast", "direct"), default="fast")
    s.add_argument("--check", type=int, metavar="DIGITS", default=0,
                   help="also compare with the root-of-unity sum at DIGITS precision")
    s.set_defaults(func=cmd_sigma)

    for verb, func, hlp in (("classify", cmd_classify, "admissibility of a triple"),
                            ("bounds", cmd_bounds, "g against the lower, BDR and conjectured bounds")):
        s = sub.add_parser(verb, parents=[common], help=hlp)
        for name in ("a", "b", "c"):
            s.add_argument(name, type=int)
        s.set_defaults(func=func)

    s = sub.add_parser("experiment", parents=[common], help="Monte Carlo run over random admissible triples")
    s.add_argument("--n", type=int, default=10000)
    s.add_argument("--lo", type=int, default=1)
    s.add_argument("--hi", type=int, default=750)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=experiment.default_workers(),
                   help="worker processes (default: $FROBNUM_WORKERS or 1)")
    s.add_argument("--out", default="frobnum-out", help="output directory")
    s.add_argument("--data-format", choices=("csv", "json"), default="csv")
    s.add_argument("--bin-width", type=float, default=0.25)
    s.add_argument("--bin-start", type=float, default=1.5)
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("verify", parents=[common], help="formulas and search against brute-force oracles")
    s.add_argument("--max", type=int, default=40)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", parents=[common], help="recompute the 24-row extreme-ratio table")
    s.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
