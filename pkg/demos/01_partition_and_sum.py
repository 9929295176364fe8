"""One step of partition and sum, and everything a single step can reach."""
from psum import Partition, parse_digits, reachable_sums, segments, apply, uncut_gain

d = parse_digits("111110", 2)
p = Partition((2, 4))
print(d, "=", "+".join(map(str, segments(d, p))), "=", apply(d, p))

# merging two terms raises the sum by left * (base**len(right) - 1)
for text in ("11", "100", "101", "110", "111"):
    s = parse_digits(text, 2)
    full = Partition.all_cuts(len(s))
    total = apply(s, Partition()) - apply(s, full)
    print(f"{'+'.join(text)} -> {text}: first merge +{uncut_gain(s, full, 1)}, whole merge +{total}")

d = parse_digits("2102222", 3)
sums = sorted(reachable_sums(d))
print(f"{d} (base 3) reaches {len(sums)} sums, smallest {sums[:8]}")
print("every sum is odd like 1781 itself:", all(s % 2 == 1 for s in sums))
