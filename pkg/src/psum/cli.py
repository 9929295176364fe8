"""Command line: ``psum reduce | min-steps | scan | verify``.

Exit codes: 0 success, 1 failed claim or strategy assertion, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys

from .digitcore import MAX_TEXT_BASE, from_value, parse_digits
from .errors import PsumError, StrategyAssertionFailed
from .oracle import OracleCache, min_steps, optimal_trace, scan
from .strategies import reduce, sum_digits_reduce
from . import verify as suites


class UsageError(Exception):
    pass


def _base(text):
    b = int(text)
    if not 2 <= b <= MAX_TEXT_BASE:
        raise argparse.ArgumentTypeError(f"base must be in [2, {MAX_TEXT_BASE}]")
    return b


def _natural(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("bounds must be non-negative")
    return v


def _number(args):
    if args.decimal:
        if not args.number.isdigit():
            raise UsageError(f"{args.number!r} is not a decimal number")
        return from_value(int(args.number), args.base)
    return parse_digits(args.number, args.base)


def _cache(args):
    if getattr(args, "cache", None):
        try:
            return OracleCache.load(args.cache, args.base)
        except FileNotFoundError:
            pass
    return OracleCache(args.base)


def _save_cache(args, cache):
    if getattr(args, "cache", None):
        cache.save(args.cache)


def run_reduce(args, out) -> int:
    d = _number(args)
    cache = _cache(args)
    if args.strategy == "constructive":
        trace = reduce(d, cache)
    elif args.strategy == "sum-digits":
        trace = sum_digits_reduce(d)
    else:
        trace = optimal_trace(d.value, d.base, cache)
    _save_cache(args, cache)
    if args.json:
        print(json.dumps(trace.to_dict()), file=out)
    else:
        print(trace.render(), file=out)
    return 0


def run_min_steps(args, out) -> int:
    d = _number(args)
    cache = _cache(args)
    print(min_steps(d.value, d.base, cache), file=out)
    _save_cache(args, cache)
    return 0


def run_scan(args, out) -> int:
    if args.lo > args.hi:
        raise UsageError("--lo must not exceed --hi")
    if args.threshold < 1:
        raise UsageError("--threshold must be >= 1")
    cache = _cache(args)
    found = scan(args.base, args.lo, args.hi, args.threshold, cache, workers=args.workers)
    _save_cache(args, cache)
    for v in found:
        print(v if args.decimal else from_value(v, args.base), file=out)
    return 0


def run_verify(args, out) -> int:
    if args.suite == "theorem1":
        claims = suites.theorem1(args.base, args.max or (1 << 20 if args.base == 2 else args.base**10))
    elif args.suite == "base3-exceptions":
        claims = suites.base3_exceptions(args.max or 3**12, workers=args.workers)
    elif args.suite == "lemma4a-tightness":
        claims = suites.lemma4a_tightness(range(4, (args.max_base or 10) + 1))
    else:
        if args.base < 4:
            raise UsageError("family needs --base >= 4")
        claims = suites.family(args.base, args.zeros)
    for c in claims:
        print(c.line(), file=out)
    return 0 if all(c.passed for c in claims) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="psum", description="Partition-and-sum reductions.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, number=True):
        sp.add_argument("--base", type=_base, default=10)
        sp.add_argument("--cache", help="oracle cache snapshot to load and update")
        if number:
            sp.add_argument("number")
            sp.add_argument("--decimal", action="store_true", help="read the number in base 10")

    r = sub.add_parser("reduce", help="reduce a number to one digit")
    common(r)
    r.add_argument("--strategy", choices=["constructive", "sum-digits", "optimal"], default="constructive")
    r.add_argument("--json", action="store_true", help="machine-readable trace")

    m = sub.add_parser("min-steps", help="exact minimum number of steps")
    common(m)

    s = sub.add_parser("scan", help="values in [lo, hi) needing >= threshold steps")
    common(s, number=False)
    s.add_argument("--lo", type=_natural, default=2)
    s.add_argument("--hi", type=_natural, required=True)
    s.add_argument("--threshold", type=int, default=3)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--decimal", action="store_true", help="print values in base 10")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["theorem1", "base3-exceptions", "lemma4a-tightness", "family"])
    v.add_argument("--base", type=_base, default=2)
    v.add_argument("--max", type=_natural, help="exclusive upper bound on scanned values")
    v.add_argument("--max-base", type=_base, help="largest base for lemma4a-tightness")
    v.add_argument("--zeros", type=_natural, default=5)
    v.add_argument("--workers", type=int, default=1)
    return p


HANDLERS = {"reduce": run_reduce, "min-steps": run_min_steps, "scan": run_scan, "verify": run_verify}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return HANDLERS[args.command](args, out)
    except StrategyAssertionFailed as exc:
        print(f"psum: strategy failed: {exc}", file=sys.stderr)
        return 1
    except (UsageError, PsumError, ValueError) as exc:
        print(f"psum: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
