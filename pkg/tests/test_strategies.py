import random

import pytest

from oracles import brute_min_steps, brute_sums
from psum import (
    AlreadySingleDigit,
    DigitString,
    NotBase2,
    NotBase3,
    OracleCache,
    PreconditionViolated,
    base2_power_step,
    base2_reduce,
    base3_reduce,
    base_ge4_reduce,
    digit_sum,
    from_value,
    lemma4a_reduce,
    lemma4b_step,
    min_steps,
    parse_digits,
    reduce,
    sum_digits_reduce,
    sum_digits_step,
    to_value,
)
from psum.strategies import small_bound, triple_merge_plan
from psum.verify import EXCEPTIONAL_BASE3, random_heavy_string


def chain(trace):
    return [trace.start.value] + [s.sum for s in trace.steps]


def rendered_terms(step):
    return "+".join(map(str, step.terms))


def test_sum_digits_step():
    assert sum_digits_step(parse_digits("199", 10)).sum == 19
    assert sum_digits_step(parse_digits("1000", 2)).sum == 1
    assert sum_digits_step(parse_digits("289", 10)).sum == 19
    with pytest.raises(AlreadySingleDigit):
        sum_digits_step(parse_digits("7", 10))


@pytest.mark.parametrize(
    "text, terms, total",
    [
        ("111110", "11+11+10", 8),
        ("11111", "1+1111", 16),
        ("111111111", "111+11+11+11", 16),
        ("100", "1+0+0", 1),
        ("11011011", "11+0+11+0+1+1", 8),
    ],
)
def test_base2_power_step(text, terms, total):
    step = base2_power_step(parse_digits(text, 2))
    assert rendered_terms(step) == terms
    assert step.sum == total and step.is_valid()
    assert step.sum in brute_sums(list(step.input.digits), 2)


def test_base2_power_step_errors():
    with pytest.raises(NotBase2):
        base2_power_step(parse_digits("12", 3))
    with pytest.raises(AlreadySingleDigit):
        base2_power_step(parse_digits("1", 2))


def test_triple_merge_power_postcondition_exhaustive():
    for n in range(2, 1 << 18):
        d = from_value(n, 2)
        plan = triple_merge_plan(d)
        m = plan.m
        assert (plan.special is not None) == (m == 5)
        if (1 << plan.k) >= m or m > (2 << plan.k) if m > 1 else plan.k != -1:
            pytest.fail(f"bad k for m={m}")
        assert plan.target == (16 if plan.special == "11111" else 1 << (plan.k + 1))
        step = base2_power_step(d)
        assert step.sum == plan.target


def test_base2_reduce():
    assert chain(base2_reduce(from_value(511, 2))) == [511, 16, 1]
    assert chain(base2_reduce(parse_digits("1000", 2))) == [8, 1]
    assert len(base2_reduce(parse_digits("1", 2))) == 0


def test_lemma4a_reduce():
    assert chain(lemma4a_reduce(parse_digits("199", 10))) == [199, 100, 1]
    assert chain(lemma4a_reduce(parse_digits("18", 10))) == [18, 9]
    assert chain(lemma4a_reduce(parse_digits("98", 10))) == [98, 17, 8]
    with pytest.raises(PreconditionViolated):
        lemma4a_reduce(parse_digits("289", 10))
    with pytest.raises(PreconditionViolated):
        lemma4a_reduce(parse_digits("12", 3))


@pytest.mark.parametrize("b", range(4, 9))
def test_lemma4a_rule_agrees_with_oracle(b):
    cache = OracleCache(b)
    for n in range(small_bound(b)):
        trace = lemma4a_reduce(from_value(n, b))
        assert trace.is_valid() and len(trace) <= 2
        assert len(trace) >= min_steps(n, b, cache)


@pytest.mark.parametrize(
    "text, base, terms, total, out",
    [
        ("9" * 12, 10, "99+99+" + "+".join("9" * 8), 270, "270"),
        ("3333333", 4, "33+33+3+3+3", 39, "213"),
        ("4444441", 5, "44+44+4+4+1", 57, "212"),
    ],
)
def test_lemma4b_step(text, base, terms, total, out):
    step, plan = lemma4b_step(parse_digits(text, base))
    assert rendered_terms(step) == terms
    assert step.sum == plan.M == total and str(step.output) == out
    assert plan.boundary <= plan.M < plan.boundary + (base - 1) ** 2
    assert plan.A >= (plan.m - (base - 1)) / 2
    if len(text) <= 12:
        assert total in brute_sums(list(step.input.digits), base)


def test_lemma4b_preconditions():
    with pytest.raises(PreconditionViolated):
        lemma4b_step(parse_digits("99", 10))


def test_base_ge4_reduce():
    t = base_ge4_reduce(parse_digits("289", 10))
    assert len(t) == 3 and t.is_valid()
    assert chain(base_ge4_reduce(parse_digits("199", 10))) == [199, 100, 1]
    assert chain(base_ge4_reduce(parse_digits("9" * 12, 10))) == [10**12 - 1, 270, 9]


@pytest.mark.parametrize("b", range(4, 11))
def test_base_ge4_random_long_strings(b):
    rng = random.Random(b)
    for _ in range(300):
        d = random_heavy_string(rng, b, max_len=80)
        t = base_ge4_reduce(d)
        assert t.is_valid() and len(t) <= 3


def test_base3_reduce_examples():
    t = base3_reduce(parse_digits("2102222", 3))
    assert len(t) == 3 and t.is_valid()
    assert len(base3_reduce(from_value(1780, 3))) <= 2
    assert chain(base3_reduce(parse_digits("10", 3))) == [3, 1]
    with pytest.raises(NotBase3):
        base3_reduce(parse_digits("10", 2))


def test_base3_constructive_path_exhaustive():
    # oracle_bound=0 forces the sum-digits / single-pair first step everywhere
    cache = OracleCache(3)
    for n in range(3, 3**10):
        t = base3_reduce(from_value(n, 3), cache, oracle_bound=0)
        assert len(t) <= 3 and t.is_valid(), n


def test_base3_constructive_near_exceptional_digit_sums():
    # strings whose digit sum is exactly an exceptional value force the pair fallback
    rng = random.Random(11)
    cache = OracleCache(3)
    for e in EXCEPTIONAL_BASE3[:6]:
        for _ in range(3):
            digs = [2] * (e // 2) + [1] * (e % 2)
            rng.shuffle(digs)
            d = DigitString(3, tuple(digs))
            assert digit_sum(d) == e
            t = base3_reduce(d, cache, oracle_bound=0)
            assert t.is_valid() and len(t) <= 3
            assert t.steps[0].sum != e


def test_base3_large_input():
    rng = random.Random(5)
    d = DigitString(3, tuple([1] + [rng.randrange(3) for _ in range(2000)]))
    t = base3_reduce(d)
    assert t.is_valid() and len(t) <= 3


@pytest.mark.parametrize("base, hi", [(2, 1 << 12), (3, 3**8), (4, 4**6), (7, 7**4), (10, 3000)])
def test_reduce_within_bound_and_not_below_optimum(base, hi):
    bound = 2 if base == 2 else 3
    cache = OracleCache(base)
    for n in range(hi):
        t = reduce(from_value(n, base), cache)
        assert t.is_valid() and min_steps(n, base, cache) <= len(t) <= bound


def test_reduce_dispatch_and_single_digit():
    for b in (2, 3, 10, 36):
        assert len(reduce(from_value(b - 1, b))) == 0
    assert len(reduce(from_value(511, 2))) == 2
    assert len(reduce(parse_digits("289", 10))) == 3


def test_sum_digits_baseline():
    t = sum_digits_reduce(from_value(2**64, 10))
    assert t.is_valid() and all(len(s.partition) == len(s.input) - 1 for s in t.steps)


def test_brute_force_agrees_on_small_lemma4a_edges():
    for b in (4, 5):
        edge = small_bound(b)
        assert brute_min_steps(edge, b) == 3
        assert brute_min_steps(2 * b * b - 1, b) == 2  # 1(b-1)(b-1)
