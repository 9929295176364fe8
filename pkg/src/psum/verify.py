"""Exhaustive and randomized checks of the step bounds.

Each suite returns a list of :class:`Claim` results; the CLI prints them and
the test suite asserts on them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .digitcore import DigitString, from_value, to_value
from .oracle import OracleCache, min_steps, scan
from .partition import Partition, apply
from .strategies import (
    base2_reduce,
    lemma4b_step,
    reduce,
    small_bound,
    step_bound,
)

EXCEPTIONAL_BASE3 = (1781, 3239, 3887, 11177, 14821, 33047, 41065, 43981, 98657, 131461, 393901)


@dataclass
class Claim:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        tag = "pass" if self.passed else "FAIL"
        return f"{self.name}: {tag}" + (f" ({self.detail})" if self.detail else "")


def _first_bad(items, limit=5):
    items = list(items)
    return ", ".join(map(str, items[:limit])) + (" ..." if len(items) > limit else "")


def theorem1(base: int, hi: int, cache: OracleCache | None = None) -> list[Claim]:
    """Every n in [2, hi): oracle and constructive trace both within the bound."""
    cache = cache or OracleCache(base)
    bound = step_bound(base)
    over, bad_trace, not_power = [], [], []
    for n in range(2, hi):
        if min_steps(n, base, cache) > bound:
            over.append(n)
        d = from_value(n, base)
        trace = base2_reduce(d) if base == 2 else reduce(d, cache)
        if len(trace) > bound or not trace.is_valid():
            bad_trace.append(n)
        if base == 2 and trace.steps:
            s = trace.steps[0].sum
            if s & (s - 1):
                not_power.append(n)
    out = [
        Claim(f"all n < {hi} have min_steps <= {bound}", not over, _first_bad(over)),
        Claim(f"all constructive traces valid with <= {bound} steps", not bad_trace, _first_bad(bad_trace)),
    ]
    if base == 2:
        out.append(Claim("first step lands on a power of two", not not_power, _first_bad(not_power)))
    return out


def base3_exceptions(hi: int = 3**12, cache: OracleCache | None = None, workers: int = 1) -> list[Claim]:
    cache = cache or OracleCache(3)
    found = scan(3, 2, hi, 3, cache, workers=workers)
    expected = [v for v in EXCEPTIONAL_BASE3 if v < hi]
    worse = scan(3, 2, hi, 4, cache, workers=workers)
    return [
        Claim(f"three-step values below {hi} are exactly the listed ones", found == expected,
              f"found {len(found)}: {_first_bad(found, 11)}"),
        Claim(f"no value below {hi} needs more than 3 steps", not worse, _first_bad(worse)),
    ]


def lemma4a_tightness(bases=range(4, 11)) -> list[Claim]:
    out = []
    for b in bases:
        cache = OracleCache(b)
        edge = small_bound(b)
        over = [n for n in range(2, edge) if min_steps(n, b, cache) > 2]
        out.append(Claim(f"base {b}: every n < {edge} takes <= 2 steps", not over, _first_bad(over)))
        form_ok = from_value(edge, b).digits == (2, b - 2, b - 1)
        steps = min_steps(edge, b, cache)
        out.append(Claim(f"base {b}: {edge} = 2({b - 2})({b - 1}) takes 3 steps", form_ok and steps == 3,
                         f"min_steps {steps}"))
    return out


def family_value(base: int, zeros: int) -> int:
    return to_value(DigitString(base, (2,) + (0,) * zeros + (base - 2, base - 1)))


def family(base: int, zeros: int = 5) -> list[Claim]:
    cache = OracleCache(base)
    out = []
    for z in range(zeros + 1):
        v = family_value(base, z)
        steps = min_steps(v, base, cache)
        out.append(Claim(f"base {base}: 2{'0' * z}({base - 2})({base - 1}) = {v} takes 3 steps",
                         steps == 3, f"min_steps {steps}"))
    return out


def random_heavy_string(rng: random.Random, base: int, max_len: int = 60) -> DigitString:
    """A random digit string of length <= max_len with digit sum >= base**2."""
    shortest = -(-base * base // (base - 1))
    while True:
        n = rng.randint(shortest, max_len)
        digs = [rng.randrange(1, base)] + [rng.randrange(base) for _ in range(n - 1)]
        if sum(digs) >= base * base:
            return DigitString(base, tuple(digs))


def lemma4b_form(bases=range(4, 11), samples: int = 10_000, seed: int = 0) -> list[Claim]:
    rng = random.Random(seed)
    out = []
    for b in bases:
        bad = []
        for _ in range(samples):
            d = random_heavy_string(rng, b)
            step, plan = lemma4b_step(d)
            digs = step.output.digits
            c, mid, de = digs[0], digs[1:-2], digs[-2] * b + digs[-1]
            ok = (
                plan.boundary <= step.sum < plan.boundary + (b - 1) ** 2
                and step.is_valid()
                and len(digs) >= 3
                and c <= 2
                and not any(mid)
                and de <= b * b - 2 * b
            )
            if not ok:
                bad.append(str(d))
        out.append(Claim(f"base {b}: {samples} pair-merge steps land on c0...0de", not bad, _first_bad(bad, 2)))
    return out


def residue_invariance(samples: int = 10_000, seed: int = 1) -> list[Claim]:
    rng = random.Random(seed)
    bad = []
    for _ in range(samples):
        b = rng.randint(3, 16)
        n = rng.randint(1, 40)
        d = DigitString(b, tuple([rng.randrange(1, b)] + [rng.randrange(b) for _ in range(n - 1)]))
        cuts = tuple(c for c in range(1, n) if rng.random() < 0.5)
        if apply(d, Partition(cuts)) % (b - 1) != to_value(d) % (b - 1):
            bad.append((b, str(d), cuts))
    return [Claim(f"{samples} random partitions preserve the value mod b-1", not bad, _first_bad(bad, 2))]
