import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from oracles import brute_sums
from psum import (
    CutNotPresent,
    CutOutOfRange,
    DigitString,
    Partition,
    apply,
    digit_sum,
    make_step,
    parse_digits,
    reachable_sums,
    residue,
    segments,
    to_value,
    uncut_gain,
)
from psum.partition import find_partition, sum_mask


def terms(d, cuts):
    return [str(s) for s in segments(d, Partition(cuts))]


def test_segments():
    assert terms(parse_digits("111110", 2), (2, 4)) == ["11", "11", "10"]
    assert terms(parse_digits("11111", 2), (1,)) == ["1", "1111"]
    assert terms(parse_digits("100", 2), ()) == ["100"]
    assert terms(parse_digits("1002", 3), (1,)) == ["1", "002"]


def test_partition_validation():
    with pytest.raises(CutOutOfRange):
        Partition((2, 2))
    with pytest.raises(CutOutOfRange):
        Partition((0,))
    with pytest.raises(CutOutOfRange):
        segments(parse_digits("11", 2), Partition((2,)))


def test_apply():
    assert apply(parse_digits("111110", 2), Partition((2, 4))) == 8
    assert apply(parse_digits("199", 10), Partition((1,))) == 100
    d = parse_digits("98765", 10)
    assert apply(d, Partition()) == to_value(d)
    assert apply(d, Partition.all_cuts(5)) == digit_sum(d)


def test_uncut_gain_observation():
    # 1+1 -> 11 gains 1
    assert uncut_gain(parse_digits("11", 2), Partition((1,)), 1) == 1
    # 1+0+x -> 10x gains 3 in total, 1+1+x -> 11x gains 4
    for x in (0, 1):
        for mid, total in ((0, 3), (1, 4)):
            d = DigitString(2, (1, mid, x))
            g1 = uncut_gain(d, Partition((1, 2)), 1)
            g2 = uncut_gain(d, Partition((2,)), 2)
            assert g1 + g2 == total
    assert uncut_gain(parse_digits("1002", 3), Partition((1, 3)), 3) == 0
    with pytest.raises(CutNotPresent):
        uncut_gain(parse_digits("111", 2), Partition((1,)), 2)


@given(st.data())
def test_uncut_gain_matches_apply(data):
    b = data.draw(st.integers(2, 12))
    n = data.draw(st.integers(2, 12))
    digs = [data.draw(st.integers(1, b - 1))] + data.draw(st.lists(st.integers(0, b - 1), min_size=n - 1, max_size=n - 1))
    d = DigitString(b, tuple(digs))
    cuts = tuple(sorted(data.draw(st.sets(st.integers(1, n - 1), min_size=1))))
    p = Partition(cuts)
    cut = data.draw(st.sampled_from(cuts))
    gain = uncut_gain(d, p, cut)
    assert gain == apply(d, p.without(cut)) - apply(d, p)
    i = cuts.index(cut)
    left = segments(d, p)[i]
    assert gain >= 0 and (gain > 0) == (to_value(left) > 0)


def test_reachable_sums_examples():
    assert reachable_sums(parse_digits("111", 2)) == {3, 4}
    assert reachable_sums(parse_digits("10", 2)) == {1}
    d = parse_digits("2102222", 3)
    assert all(s % 2 == residue(d) for s in reachable_sums(d))


@pytest.mark.parametrize("base", [2, 3, 4, 7, 10])
def test_reachable_sums_vs_brute_force(base):
    rng = random.Random(base)
    for _ in range(60):
        n = rng.randint(1, 12)
        digs = [rng.randrange(1, base)] + [rng.randrange(base) for _ in range(n - 1)]
        d = DigitString(base, tuple(digs))
        for rc in (True, False):
            assert reachable_sums(d, rc) == brute_sums(digs, base, rc)
        full = reachable_sums(d, False)
        if n >= 2:
            assert min(reachable_sums(d)) == digit_sum(d)
        assert max(full) == to_value(d)
        cap = rng.randint(0, 200)
        assert reachable_sums(d, limit=cap) == {s for s in brute_sums(digs, base) if s <= cap}
        mask = sum_mask(digs, base, cap)
        assert {s for s in range(cap + 1) if mask >> s & 1} == {s for s in brute_sums(digs, base) if s <= cap}


def test_find_partition_hits_every_reachable_sum():
    d = parse_digits("21102", 3)
    for s in reachable_sums(d):
        p = find_partition(d, s)
        assert len(p) >= 1 and apply(d, p) == s
    assert find_partition(d, 1) is None


def test_step_decreases_and_validates():
    d = parse_digits("289", 10)
    step = make_step(d, Partition((1,)))
    assert step.sum == 2 + 89 and step.sum < to_value(d) and step.is_valid()
    assert not make_step(d, Partition()).is_valid()


def test_pair_breaking_changes_sum_by_at_most_square():
    rng = random.Random(3)
    for _ in range(300):
        b = rng.randint(4, 10)
        n = rng.randint(3, 40)
        d = DigitString(b, tuple([rng.randrange(1, b)] + [rng.randrange(b) for _ in range(n - 1)]))
        # full pairing of one parity class, then break pairs left to right
        parity = rng.randint(0, 1)
        starts = [n - 1 - j for j in range(n - 1, 0, -1) if j % 2 == parity]
        inside = {s + 1 for s in starts}
        p = Partition(tuple(c for c in range(1, n) if c not in inside))
        prev = apply(d, p)
        for s in starts:
            p = Partition(tuple(sorted(p.cuts + (s + 1,))))
            cur = apply(d, p)
            assert 0 <= prev - cur <= (b - 1) ** 2
            prev = cur
        assert prev == digit_sum(d)
