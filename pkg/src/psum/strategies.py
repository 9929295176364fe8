"""Constructive reductions to a single digit.

* base 2: one step to a power of two by triple merging, then sum the digits
  (at most 2 steps);
* base >= 4: small numbers in two steps, otherwise sum the digits or apply
  the alternating-pair merge first (at most 3 steps);
* base 3: sum the digits (or a one-pair variant of that), then finish with
  the oracle (at most 3 steps).
"""
from __future__ import annotations

from dataclasses import dataclass

from .digitcore import DigitString, digit_sum, from_value, to_value
from .errors import (
    AlreadySingleDigit,
    NotBase2,
    NotBase3,
    PreconditionViolated,
    StrategyAssertionFailed,
)
from .oracle import OracleCache, min_steps, optimal_trace
from .partition import Partition, ReductionStep, make_step
from .trace import ReductionTrace

BASE3_ORACLE_BOUND = 3**13


@dataclass(frozen=True)
class TripleMergePlan:
    m: int
    k: int
    target: int
    triples: tuple[int, ...]
    twins: tuple[int, ...]
    partition: Partition
    special: str | None = None


@dataclass(frozen=True)
class PairMergePlan:
    m: int
    A: int
    t: int
    boundary: int
    M: int
    pairs: tuple[int, ...]


def _groups_partition(length, groups):
    """All-cuts partition with each ``(start, size)`` group merged."""
    inside = set()
    for start, size in groups:
        inside.update(range(start + 1, start + size))
    return Partition(tuple(c for c in range(1, length) if c not in inside))


def sum_digits_step(d: DigitString) -> ReductionStep:
    if d.is_single_digit:
        raise AlreadySingleDigit(f"{d} is already a single digit")
    return make_step(d, Partition.all_cuts(len(d)))


# -- base 2 ---------------------------------------------------------------


def triple_merge_plan(d: DigitString) -> TripleMergePlan:
    if d.base != 2:
        raise NotBase2(f"triple merging needs base 2, got base {d.base}")
    if d.is_single_digit:
        raise AlreadySingleDigit(f"{d} is already a single digit")
    digs = d.digits
    n = len(digs)
    m = sum(digs)
    k = (m - 1).bit_length() - 1
    target = 1 << (k + 1)

    if m == 5:
        for i in range(n - 2):
            if digs[i] == 1 and digs[i + 1] == 0:
                return TripleMergePlan(m, k, target, (i,), (), _groups_partition(n, [(i, 3)]), "10*")
        if digs == (1, 1, 1, 1, 1, 0):
            return TripleMergePlan(m, k, target, (), (0, 2, 4), Partition((2, 4)), "111110")
        if digs == (1, 1, 1, 1, 1):
            # 8 is unreachable from 11111; 1 + 1111 lands on the next power
            return TripleMergePlan(m, k, 16, (), (), Partition((1,)), "11111")
        raise StrategyAssertionFailed(f"m = 5 input {d} matched no known case")

    total = m
    triples, twins = [], []
    pos = 0
    while True:
        i = pos
        while i < n and digs[i] == 0:
            i += 1
        if i + 2 >= n:
            break
        gain = 3 + digs[i + 1]
        if total + gain > target:
            break
        triples.append(i)
        total += gain
        pos = i + 3
    j = pos
    while total < target and j < n - 1:
        if digs[j] == 1:
            twins.append(j)
            total += 1
            j += 2
        else:
            j += 1
    if total != target:
        raise StrategyAssertionFailed(f"triple merging reached {total}, not {target}, on {d}")
    groups = [(i, 3) for i in triples] + [(j, 2) for j in twins]
    return TripleMergePlan(m, k, target, tuple(triples), tuple(twins), _groups_partition(n, groups))


def base2_power_step(d: DigitString) -> ReductionStep:
    """One step taking a binary string with ``m`` ones to ``2**ceil(log2 m)``."""
    plan = triple_merge_plan(d)
    step = make_step(d, plan.partition)
    if step.sum != plan.target:
        raise StrategyAssertionFailed(f"{d}: step sum {step.sum} != target {plan.target}")
    return step


def base2_reduce(d: DigitString) -> ReductionTrace:
    if d.base != 2:
        raise NotBase2(f"base2_reduce needs base 2, got base {d.base}")
    if d.is_single_digit:
        return ReductionTrace.chain(d, ())
    steps = []
    cur = d
    if digit_sum(d) != 1:
        steps.append(base2_power_step(d))
        cur = steps[-1].output
    if not cur.is_single_digit:
        steps.append(sum_digits_step(cur))
    return ReductionTrace.chain(d, steps)


# -- base >= 4 ------------------------------------------------------------


def small_bound(base: int) -> int:
    """Smallest value the two-step rule for small numbers does not cover."""
    return 3 * base * base - base - 1


def lemma4a_reduce(d: DigitString) -> ReductionTrace:
    """At most two steps for ``base >= 4`` and value below ``3b^2 - b - 1``."""
    b = d.base
    if b < 4:
        raise PreconditionViolated(f"needs base >= 4, got {b}")
    if to_value(d) >= small_bound(b):
        raise PreconditionViolated(f"{d} is not below {small_bound(b)} in base {b}")
    if d.is_single_digit:
        return ReductionTrace.chain(d, ())
    if digit_sum(d) <= 2 * b - 2:
        first = sum_digits_step(d)
    elif d.digits == (1, b - 1, b - 1):
        # 1 + (b-1)(b-1) = 100
        first = make_step(d, Partition((1,)))
    else:  # pragma: no cover - unreachable below the bound
        raise StrategyAssertionFailed(f"{d} has digit sum above 2b-2")
    steps = [first]
    if not first.output.is_single_digit:
        steps.append(sum_digits_step(first.output))
    return ReductionTrace.chain(d, steps)


def _interval(m: int, b: int) -> tuple[int, int]:
    t = 0
    p = 1
    while p * b <= m:
        p *= b
        t += 1
    boundary = 2 * p if m < 2 * p else p * b
    return t, boundary


def pair_merge_plan(d: DigitString) -> PairMergePlan:
    b = d.base
    if b < 4:
        raise PreconditionViolated(f"needs base >= 4, got {b}")
    m = digit_sum(d)
    if m < b * b:
        raise PreconditionViolated(f"digit sum {m} is below {b * b}")
    digs = d.digits
    n = len(digs)
    # digit a_j sits at index n-1-j; a_0 (last digit) never leads a pair
    odd = sum(digs[n - 1 - j] for j in range(1, n, 2))
    even = sum(digs[n - 1 - j] for j in range(2, n, 2))
    parity = 0 if even >= odd else 1
    A = max(odd, even)
    t, boundary = _interval(m, b)
    total = m
    pairs = []
    for j in range(n - 1, 0, -1):
        if total >= boundary:
            break
        if j % 2 != parity:
            continue
        lead = digs[n - 1 - j]
        if lead:
            pairs.append(n - 1 - j)
            total += lead * (b - 1)
    if not boundary <= total < boundary + (b - 1) ** 2:
        raise StrategyAssertionFailed(f"pair merging on {d} reached {total}, boundary {boundary}")
    return PairMergePlan(m, A, t, boundary, total, tuple(pairs))


def lemma4b_step(d: DigitString) -> tuple[ReductionStep, PairMergePlan]:
    """One step from a large digit sum to the form ``c0...0de``."""
    plan = pair_merge_plan(d)
    part = _groups_partition(len(d), [(i, 2) for i in plan.pairs])
    step = make_step(d, part)
    if step.sum != plan.M:
        raise StrategyAssertionFailed(f"{d}: pair step sum {step.sum} != planned {plan.M}")
    return step, plan


def base_ge4_reduce(d: DigitString) -> ReductionTrace:
    b = d.base
    if b < 4:
        raise PreconditionViolated(f"needs base >= 4, got {b}")
    if to_value(d) < small_bound(b):
        return lemma4a_reduce(d)
    if digit_sum(d) < b * b:
        first = sum_digits_step(d)
        rest = lemma4a_reduce(first.output)
        return ReductionTrace.chain(d, (first,) + rest.steps)
    first, _ = lemma4b_step(d)
    steps = [first, sum_digits_step(first.output)]
    if not steps[-1].output.is_single_digit:
        steps.append(sum_digits_step(steps[-1].output))
    return ReductionTrace.chain(d, steps)


# -- base 3 ---------------------------------------------------------------


def base3_reduce(
    d: DigitString,
    cache: OracleCache | None = None,
    oracle_bound: int = BASE3_ORACLE_BOUND,
) -> ReductionTrace:
    """At most three steps in base 3.

    Small inputs get an optimal trace outright. Larger ones take a first
    step to the digit sum, or to the digit sum plus ``2a`` by merging one
    pair led by digit ``a``, choosing the first candidate that the oracle
    can finish in two steps.
    """
    if d.base != 3:
        raise NotBase3(f"base3_reduce needs base 3, got base {d.base}")
    if d.is_single_digit:
        return ReductionTrace.chain(d, ())
    v = to_value(d)
    if v < oracle_bound:
        return optimal_trace(v, 3, cache)
    candidates = [sum_digits_step(d)]
    seen = {candidates[0].sum}
    n = len(d)
    for i in range(n - 1):
        lead = d.digits[i]
        if lead and candidates[0].sum + 2 * lead not in seen:
            seen.add(candidates[0].sum + 2 * lead)
            candidates.append(make_step(d, _groups_partition(n, [(i, 2)])))
        if len(seen) == 3:
            break
    for first in candidates:
        if min_steps(first.sum, 3, cache) <= 2:
            rest = optimal_trace(first.sum, 3, cache)
            return ReductionTrace.chain(d, (first,) + rest.steps)
    raise StrategyAssertionFailed(f"no single-pair first step of {d} is two-step reducible")


def reduce(d: DigitString, cache: OracleCache | None = None) -> ReductionTrace:
    """Reduce ``d`` to one digit in at most 2 (base 2) or 3 (base >= 3) steps."""
    if d.base == 2:
        return base2_reduce(d)
    if d.base == 3:
        return base3_reduce(d, cache)
    return base_ge4_reduce(d)


def sum_digits_reduce(d: DigitString) -> ReductionTrace:
    """The naive baseline: sum the digits until one digit remains."""
    steps = []
    cur = d
    while not cur.is_single_digit:
        steps.append(sum_digits_step(cur))
        cur = steps[-1].output
    return ReductionTrace.chain(d, steps)


def step_bound(base: int) -> int:
    return 2 if base == 2 else 3
