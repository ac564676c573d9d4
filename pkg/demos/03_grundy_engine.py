#!/usr/bin/env python3
"""The exact nim-value engine, and why translated zero sets are interesting.

Builds full Sprague-Grundy tables, prints the familiar value grids, and
shows the headline phenomenon: the zero-value positions of wk(k) are the
classical ones translated by k (plus a small diagonal block), and the whole
ratio family tk(k) shares one translated zero set for every k.
"""

import time

from wythoff_variants import (
    formula_p_tk,
    formula_p_wk,
    grundy_table,
    tk,
    wk,
    wythoff,
)

def show_grid(table, size):
    print(f"   nim-values of {table.ruleset.label()} for a (rows) x b (cols) <= {size}:")
    print("      " + "".join(f"{b:>4}" for b in range(size + 1)))
    for a in range(size + 1):
        row = "".join(f"{table.value(a, b):>4}" for b in range(size + 1))
        print(f"  a={a:>2}" + row)


t0 = time.perf_counter()
classical = grundy_table(wythoff(), 200)
print(f"built the classical table to bound 200 in "
      f"{(time.perf_counter() - t0) * 1000:.1f} ms")
show_grid(classical, 9)

print()
print("zeros of the classical game vs the closed golden-ratio form (bound 30):")
print("  engine :", classical.p_positions().positions[:8], "...")
print("  formula:", formula_p_wk(0, 30).positions[:8], "...")

print()
w2 = grundy_table(wk(2), 200)
print("under wk(2) the zero set is the same staircase shifted by 2,")
print("plus the small diagonal {(0,0),(1,1)}:")
print("  engine :", w2.p_positions().positions[:8], "...")
print("  formula:", formula_p_wk(2, 30).positions[:8], "...")

print()
print("every ratio game tk(k) shares one zero set (shift by exactly 1):")
for k in (0, 3, 17):
    t = grundy_table(tk(k), 40)
    print(f"  tk({k:>2}) zeros to 40:", t.p_positions().positions)
print("  formula:            ", formula_p_tk(40).positions)

print()
print("but larger nim-values are NOT shared between the families:")
w1 = grundy_table(wk(1), 30)
t1 = grundy_table(tk(1), 30)
print(f"  g(20,30) = {w1.value(20, 30)} in wk(1)   "
      f"vs   g(20,30) = {t1.value(20, 30)} in tk(1)")
first = next(p for p in ((a, b) for b in range(31) for a in range(b + 1))
             if (w1.value(*p) == 2) != (t1.value(*p) == 2))
print(f"  the two games' value-2 sets first disagree at {first}")
