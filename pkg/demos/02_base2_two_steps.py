"""Base 2: triple merging lands on a power of two, then one more step."""
import random

from psum import base2_reduce, from_value
from psum.strategies import triple_merge_plan

rng = random.Random(1)
for _ in range(5):
    d = from_value(rng.getrandbits(40) | 1 << 39, 2)
    plan = triple_merge_plan(d)
    print(f"m={plan.m:2d} target={plan.target:3d} triples at {plan.triples} twins at {plan.twins}")
    print(base2_reduce(d).render())
    print()

print(base2_reduce(from_value(31, 2)).render())
