"""Exhaustive minimum-step oracle.

``min_steps(v) = 0`` for single digits, otherwise one plus the minimum over
every sum reachable with at least one cut. Two facts keep this fast:

* the smallest reachable sum is the digit sum, so ``v`` takes one step
  exactly when its digit sum is a single digit;
* ``v`` takes two steps exactly when some reachable sum has a single-digit
  digit sum. Those targets are sparse, so a capped bit-set DP usually finds
  one without building the full sum set.
"""
from __future__ import annotations

import threading
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .digitcore import DigitString, check_base, from_value, value_digits
from .errors import CacheBaseMismatch
from .partition import find_partition, make_step, reachable_sums, sum_mask
from .trace import ReductionTrace

DEFAULT_BOUND = 1 << 24
SNAPSHOT_HEADER = "psum-cache v1 base={}"


class OracleCache:
    """Memo of ``value -> min_steps`` for one base.

    Entries are final. Values above ``bound`` are computed but not stored.
    Plain dict writes are atomic under the GIL, and a lost update is harmless
    because recomputation yields the same entry.
    """

    def __init__(self, base: int, bound: int = DEFAULT_BOUND):
        self.base = check_base(base)
        self.bound = bound
        self.memo: dict[int, int] = {}
        self._one_step_mask = 0
        self._mask_cap = -1
        self._mask_lock = threading.Lock()

    def __len__(self):
        return len(self.memo)

    def __contains__(self, v):
        return v in self.memo

    def get(self, v):
        if v < self.base:
            return 0
        return self.memo.get(v)

    def put(self, v: int, steps: int) -> None:
        if v <= self.bound:
            self.memo[v] = steps

    def update(self, other: OracleCache) -> None:
        if other.base != self.base:
            raise CacheBaseMismatch(f"cannot merge base {other.base} into base {self.base}")
        self.memo.update(other.memo)

    def one_step_mask(self, cap: int) -> int:
        """Bits ``r`` in ``[base, cap]`` where ``r`` takes exactly one step."""
        if cap > self._mask_cap:
            with self._mask_lock:
                b = self.base
                mask = 0
                for r in range(b, cap + 1):
                    if sum(value_digits(r, b)) < b:
                        mask |= 1 << r
                self._one_step_mask, self._mask_cap = mask, cap
        return self._one_step_mask & ((2 << cap) - 1)

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(SNAPSHOT_HEADER.format(self.base) + "\n")
            for v in sorted(self.memo):
                fh.write(f"{v}\t{self.memo[v]}\n")

    @classmethod
    def load(cls, path, base: int, bound: int = DEFAULT_BOUND) -> OracleCache:
        cache = cls(base, bound)
        lines = Path(path).read_text(encoding="ascii").splitlines()
        if not lines or lines[0].strip() != SNAPSHOT_HEADER.format(base):
            got = lines[0].strip() if lines else "<empty file>"
            raise CacheBaseMismatch(f"snapshot header {got!r} does not match base {base}")
        for line in lines[1:]:
            if line.strip():
                v, steps = line.split("\t")
                cache.memo[int(v)] = int(steps)
        return cache


_default_caches: dict[int, OracleCache] = {}
_default_lock = threading.Lock()


def default_cache(base: int) -> OracleCache:
    with _default_lock:
        cache = _default_caches.get(base)
        if cache is None:
            cache = _default_caches[base] = OracleCache(base)
        return cache


def _resolve(base, cache):
    if cache is None:
        return default_cache(base)
    if cache.base != base:
        raise CacheBaseMismatch(f"cache is for base {cache.base}, not {base}")
    return cache


def _probe_cap(digits, base):
    # big enough to hold the digit sum plus a few merges, small enough to be cheap
    return max(4 * base * base, 8 * sum(digits))


def _min_steps(v: int, base: int, cache: OracleCache) -> int:
    if v < base:
        return 0
    got = cache.memo.get(v)
    if got is not None:
        return got
    digits = value_digits(v, base)
    if sum(digits) < base:
        steps = 1
    else:
        cap = min(_probe_cap(digits, base), v - 1)
        if sum_mask(digits, base, cap) & cache.one_step_mask(cap):
            steps = 2
        else:
            # every reachable sum has digit sum >= base, hence needs >= 1 step
            best, floor = None, 2
            d = DigitString(base, tuple(digits))
            for r in sorted(reachable_sums(d)):
                s = 1 + _min_steps(r, base, cache)
                if best is None or s < best:
                    best = s
                    if best == floor:
                        break
            steps = best
    cache.put(v, steps)
    return steps


def min_steps(v: int, base: int, cache: OracleCache | None = None) -> int:
    if v < 0:
        raise ValueError("min_steps needs a non-negative value")
    return _min_steps(v, base, _resolve(base, cache))


def _ascending_reachable(d: DigitString, v: int):
    """Reachable sums in ascending order, widening a cap as needed."""
    cap = max(2 * sum(d.digits), d.base)
    seen = -1
    while True:
        cap = min(cap, v - 1)
        mask = sum_mask(d.digits, d.base, cap) >> (seen + 1)
        r = seen + 1
        while mask:
            low = (mask & -mask).bit_length() - 1
            r += low
            yield r
            mask >>= low + 1
            r += 1
        if cap >= v - 1:
            return
        seen = cap
        cap *= 4


def optimal_trace(v: int, base: int, cache: OracleCache | None = None) -> ReductionTrace:
    """A shortest trace; each step goes to the smallest sum that stays optimal."""
    cache = _resolve(base, cache)
    start = from_value(v, base)
    steps = []
    cur = start
    need = _min_steps(v, base, cache)
    while need > 0:
        cur_v = cur.value
        for r in _ascending_reachable(cur, cur_v):
            if _min_steps(r, base, cache) == need - 1:
                break
        else:  # pragma: no cover
            raise AssertionError(f"no optimal successor for {cur_v}")
        step = make_step(cur, find_partition(cur, r))
        steps.append(step)
        cur = step.output
        need -= 1
    return ReductionTrace(base, tuple(steps), cur, start)


def _scan_block(args):
    base, lo, hi, threshold, bound = args
    cache = OracleCache(base, bound)
    return [v for v in range(lo, hi) if _min_steps(v, base, cache) >= threshold]


def scan(
    base: int,
    lo: int,
    hi: int,
    threshold: int,
    cache: OracleCache | None = None,
    workers: int = 1,
    block: int = 1 << 16,
) -> list[int]:
    """Ascending values in ``[lo, hi)`` needing at least ``threshold`` steps."""
    if lo > hi:
        raise ValueError("scan needs lo <= hi")
    if threshold < 1:
        raise ValueError("threshold must be >= 1")
    if workers <= 1:
        cache = _resolve(base, cache)
        return [v for v in range(lo, hi) if _min_steps(v, base, cache) >= threshold]
    bound = cache.bound if cache is not None else DEFAULT_BOUND
    jobs = [(base, a, min(a + block, hi), threshold, bound) for a in range(lo, hi, block)]
    out = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for found in pool.map(_scan_block, jobs):
            out.extend(found)
    return out
