#!/usr/bin/env python3
"""How the rule families restrict the diagonal move.

Every family allows the two single-pile (nim) moves unchanged; they differ
only in which equal-removal amounts s are legal.  The showcase position is
(5,10): under the ratio rule tk(k), removing s tokens from both piles is
legal only when the integer ratio of the piles changes by at most k.
"""

from wythoff_variants import (
    diagonal_moves,
    is_legal,
    move_list,
    moves,
    t_infinity,
    tk,
    wk,
    wk_prime,
    wkl,
    wythoff,
)

print("diagonal options from (5,10) as the ratio tolerance k grows:")
for k in range(5):
    opts = diagonal_moves(tk(k), (5, 10))
    targets = ", ".join(f"{t}" for _, t in opts)
    print(f"  tk({k}):  s in {[s for s, _ in opts]}  ->  {targets}")
print("  (k=0 keeps the ratio at 2; k=4 finally reaches (1,6) with ratio 6)")

print()
print("threshold families from (6,9):")
print("  wythoff  :", [t for _, t in diagonal_moves(wythoff(), (6, 9))])
print("  wk(3)    :", [t for _, t in diagonal_moves(wk(3), (6, 9))],
      " (both piles must keep >= 3)")
print("  wkl(3,5) :", [t for _, t in diagonal_moves(wkl(3, 5), (6, 9))],
      " (smaller >= 3 and larger >= 5)")
print("  e.g. (6,9) -> (3,6) legal:", is_legal(wkl(3, 5), (6, 9), (3, 6)),
      "but (6,9) -> (2,5):", is_legal(wkl(3, 5), (6, 9), (2, 5)))

print()
print("the primed family only guards the equal-pile landing spots:")
print("  wk_prime(2) from (4,7):", [t for _, t in diagonal_moves(wk_prime(2), (4, 7))])
print("  wk_prime(2) from (4,4):", [t for _, t in diagonal_moves(wk_prime(2), (4, 4))])

print()
print("rule sets nest: each family only restricts the classical diagonal.")
p = (7, 12)
chain = [("wythoff", wythoff()), ("t_infinity", t_infinity()),
         ("tk(2)", tk(2)), ("tk(0)", tk(0))]
for name, rs in chain:
    print(f"  |moves({name:>10}, {p})| = {len(moves(rs, p))}")

print()
print("a full deduplicated move list from (3,3) under wythoff rules:")
for m in move_list(wythoff(), (3, 3)):
    print(f"  {m.kind:<10} amount={m.amount}  ->  {m.target}")
