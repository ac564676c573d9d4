#!/usr/bin/env python3
"""Tour of the golden-ratio Beatty pair that underpins every closed form.

The lower sequence floor(n*phi) and upper sequence floor(n*phi^2) are
computed with pure integer arithmetic; together they tile the positive
integers with no gaps and no overlaps, which is exactly why they can
describe the zero-value positions of Wythoff-style games.
"""

from wythoff_variants import lower_wythoff, upper_wythoff, verify_complementarity

print("index, lower = floor(n*phi), upper = floor(n*phi^2):")
for n in range(16):
    a, b = lower_wythoff(n), upper_wythoff(n)
    print(f"  n={n:>2}   ({a:>3}, {b:>3})   difference b-a = {b - a}")

print()
print("the two sequences interleave to cover 1..30 exactly once:")
lower = {lower_wythoff(n) for n in range(1, 40)}
row = "".join("L" if v in lower else "U" for v in range(1, 31))
print("  value 1..30 ->", row)
print("  (L = lower sequence, U = upper sequence; no value is missed or doubled)")

print()
report = verify_complementarity(10_000)
print(f"exhaustive complementarity check up to 10^4: {report.status} "
      f"in {report.elapsed_ms:.1f} ms")

print()
print("consecutive lower-sequence gaps follow the golden pattern (1s and 2s):")
gaps = [lower_wythoff(n + 1) - lower_wythoff(n) for n in range(1, 25)]
print("  ", gaps)
