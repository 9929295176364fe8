"""One application of partition and sum.

A :class:`Partition` is a set of cut positions. Position ``i`` sits between
digit ``i - 1`` and digit ``i`` (1-based gaps counted from the left), so a
string of length ``L`` has gaps ``1 .. L-1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .digitcore import DigitString, digits_value, from_value, to_value
from .errors import CutNotPresent, CutOutOfRange


@dataclass(frozen=True)
class Partition:
    cuts: tuple[int, ...] = ()

    def __post_init__(self):
        cuts = tuple(self.cuts)
        object.__setattr__(self, "cuts", cuts)
        prev = 0
        for c in cuts:
            if c <= prev:
                raise CutOutOfRange(f"cuts must be positive and strictly increasing: {cuts}")
            prev = c

    @classmethod
    def all_cuts(cls, length: int) -> Partition:
        return cls(tuple(range(1, length)))

    @classmethod
    def from_groups(cls, lengths) -> Partition:
        """Partition whose consecutive terms have the given lengths."""
        cuts, pos = [], 0
        for n in list(lengths)[:-1]:
            pos += n
            cuts.append(pos)
        return cls(tuple(cuts))

    def __len__(self):
        return len(self.cuts)

    def without(self, cut: int) -> Partition:
        if cut not in self.cuts:
            raise CutNotPresent(f"cut {cut} not in {self.cuts}")
        return Partition(tuple(c for c in self.cuts if c != cut))

    def check(self, length: int) -> None:
        if self.cuts and self.cuts[-1] >= length:
            raise CutOutOfRange(f"cut {self.cuts[-1]} outside gaps 1..{length - 1}")


@dataclass(frozen=True)
class ReductionStep:
    input: DigitString
    partition: Partition
    terms: tuple[DigitString, ...]
    sum: int

    @property
    def output(self) -> DigitString:
        return from_value(self.sum, self.input.base)

    def is_valid(self) -> bool:
        if len(self.partition) == 0 or not self.input.is_canonical:
            return False
        try:
            terms = tuple(segments(self.input, self.partition))
        except CutOutOfRange:
            return False
        return (
            terms == self.terms
            and self.sum == sum(to_value(t) for t in terms)
            and self.sum < to_value(self.input)
        )


def segments(d: DigitString, p: Partition) -> list[DigitString]:
    p.check(len(d))
    bounds = (0,) + p.cuts + (len(d),)
    return [DigitString(d.base, d.digits[a:b]) for a, b in zip(bounds, bounds[1:])]


def apply(d: DigitString, p: Partition) -> int:
    return sum(to_value(s) for s in segments(d, p))


def make_step(d: DigitString, p: Partition) -> ReductionStep:
    terms = tuple(segments(d, p))
    return ReductionStep(d, p, terms, sum(to_value(t) for t in terms))


def uncut_gain(d: DigitString, p: Partition, cut: int) -> int:
    """Increase of the sum when ``cut`` is removed from ``p``.

    Equals ``left * (base**len(right) - 1)`` for the two terms that merge.
    """
    if cut not in p.cuts:
        raise CutNotPresent(f"cut {cut} not in {p.cuts}")
    p.check(len(d))
    i = p.cuts.index(cut)
    lo = p.cuts[i - 1] if i > 0 else 0
    hi = p.cuts[i + 1] if i + 1 < len(p.cuts) else len(d)
    left = digits_value(d.digits[lo:cut], d.base)
    return left * (d.base ** (hi - cut) - 1)


def reachable_sums(d: DigitString, require_cut: bool = True, limit: int | None = None) -> set[int]:
    """Every sum one partition of ``d`` can produce.

    Prefix dynamic program: ``sums[i]`` holds the distinct sums over the first
    ``i`` digits; each is extended by every possible final term. With
    ``limit`` only sums ``<= limit`` are kept.
    """
    b, digs = d.base, d.digits
    n = len(digs)
    sums: list[set[int]] = [{0}]
    for i in range(1, n + 1):
        acc: set[int] = set()
        val, weight = 0, 1
        lowest = 1 if (require_cut and i == n) else 0
        for j in range(i - 1, lowest - 1, -1):
            val += digs[j] * weight
            weight *= b
            if limit is not None and val > limit:
                break
            if limit is None:
                acc.update(s + val for s in sums[j])
            else:
                acc.update(s + val for s in sums[j] if s + val <= limit)
        sums.append(acc)
    return sums[n]


def sum_mask(digits, base: int, cap: int, require_cut: bool = True) -> int:
    """Bit set (bit ``s`` set iff sum ``s`` reachable) of sums ``<= cap``.

    Same prefix DP as :func:`reachable_sums` with Python ints as bit sets;
    used by the oracle's hot loop.
    """
    n = len(digits)
    full = (2 << cap) - 1
    masks = [1]
    for i in range(1, n + 1):
        acc = 0
        val, weight = 0, 1
        lowest = 1 if (require_cut and i == n) else 0
        for j in range(i - 1, lowest - 1, -1):
            val += digits[j] * weight
            if val > cap:
                break
            weight *= base
            acc |= masks[j] << val
        masks.append(acc & full)
    return masks[n]


def find_partition(d: DigitString, target: int) -> Partition | None:
    """A partition (with at least one cut) of ``d`` summing to ``target``."""
    b, digs = d.base, d.digits
    n = len(digs)
    full = (2 << target) - 1
    masks = [1]
    for i in range(1, n + 1):
        acc = 0
        val, weight = 0, 1
        lowest = 1 if i == n else 0
        for j in range(i - 1, lowest - 1, -1):
            val += digs[j] * weight
            if val > target:
                break
            weight *= b
            acc |= masks[j] << val
        masks.append(acc & full)
    if not masks[n] >> target & 1:
        return None
    cuts = []
    i, need = n, target
    while i > 0:
        val, weight = 0, 1
        lowest = 1 if i == n else 0
        for j in range(i - 1, lowest - 1, -1):
            val += digs[j] * weight
            weight *= b
            if val > need:
                raise AssertionError("backtrack lost the target")  # pragma: no cover
            if masks[j] >> (need - val) & 1:
                need -= val
                i = j
                if j:
                    cuts.append(j)
                break
    return Partition(tuple(reversed(cuts)))
