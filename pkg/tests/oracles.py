"""Independent brute-force references. Deliberately naive: no DP, no caps."""
from functools import lru_cache
from itertools import product


def to_int(digits, base):
    return int("".join("0123456789abcdefghijklmnopqrstuvwxyz"[x] for x in digits), base)


def brute_sums(digits, base, require_cut=True):
    n = len(digits)
    out = set()
    for mask in product((0, 1), repeat=n - 1):
        if require_cut and not any(mask):
            continue
        total, start = 0, 0
        for gap, cut in enumerate(mask, start=1):
            if cut:
                total += to_int(digits[start:gap], base)
                start = gap
        total += to_int(digits[start:], base)
        out.add(total)
    return out


def int_digits(v, base):
    out = []
    while True:
        v, r = divmod(v, base)
        out.append(r)
        if not v:
            return out[::-1]


@lru_cache(maxsize=None)
def brute_min_steps(v, base):
    """Breadth-first search over all partitions of every intermediate."""
    frontier, depth = {v}, 0
    while all(x >= base for x in frontier):
        frontier = {s for x in frontier for s in brute_sums(int_digits(x, base), base)}
        depth += 1
    return depth
