"""Bases >= 4: the 3b^2-b-1 edge, the infinite 3-step family, and pair merging."""
from psum import OracleCache, min_steps, parse_digits, reduce, from_value, DigitString, to_value
from psum.strategies import lemma4b_step, small_bound

for b in range(4, 11):
    edge = small_bound(b)
    print(f"base {b:2d}: edge {edge:3d} = {from_value(edge, b)} needs {min_steps(edge, b)} steps")

cache = OracleCache(5)
for zeros in range(6):
    v = to_value(DigitString(5, (2,) + (0,) * zeros + (3, 4)))
    print(f"base 5: {from_value(v, 5)} needs {min_steps(v, 5, cache)} steps")

d = parse_digits("9" * 12, 10)
step, plan = lemma4b_step(d)
print(plan)
print(reduce(d).render())
print(reduce(parse_digits("289", 10)).render())
