"""Base 3: exhaustively find the numbers that need three steps (takes a few seconds)."""
import time

from psum import OracleCache, from_value, optimal_trace, scan

cache = OracleCache(3)
t0 = time.time()
found = scan(3, 2, 3**12, 3, cache)
print(f"scanned 3^12 values in {time.time() - t0:.1f}s")
for v in found:
    print(f"{v:7d} = {from_value(v, 3)}")

print(optimal_trace(found[0], 3, cache).render())
