#!/usr/bin/env python3
"""Explore the open questions: invariance conjectures and nearness claims.

Three families of open statements are swept for counterexamples up to a
bound.  Consistency here proves nothing — it only reports that no witness
exists below the bound — but a single witness at an unproven nim-value
would be a genuine discovery, so the sweep prints any it finds.
"""

from wythoff_variants import (
    TableCache,
    check_reference_values,
    closeness_check,
    explore_conjecture,
    run_conjecture_sweep,
    s1_coincidence_check,
    wk,
    wkl,
)

cache = TableCache()

print("recorded reference values first — the engine must reproduce them:")
report = check_reference_values(cache=cache)
for c in report.detail["checks"]:
    kind = "hard" if c["strength"] == "hard" else "soft"
    print(f"  g(20,30) in {c['ruleset']:<8} = {c['actual']:>2}  "
          f"(expected {c['expected']}, {kind} expectation)")
print(f"  -> {report.status}")

print()
print("one conjecture instance in detail: the threshold-pair games")
print("wkl(0,4) and wkl(2,4) should share their g-sets for g <= 2:")
r = explore_conjecture("c1", bound=100, k=0, kprime=2, l=4, cache=cache)
print("  ", r.to_json())

print()
print("the full standard sweep at bound 100:")
reports = run_conjecture_sweep(bound=100, cache=cache)
witnesses = [r for r in reports if r.status == "counterexample"]
consistent = sum(1 for r in reports if r.status == "consistent-up-to-bound")
print(f"  {consistent}/{len(reports)} instances consistent up to the bound")
for r in witnesses:
    print("  WITNESS FOUND:", r.to_json())
if not witnesses:
    print("  no witnesses below the bound — the conjectures survive")

print()
print("nearness of one-value sets: wkl(k,l) tracks wk(l) index by index")
print("when l is odd (deviation at most 1) and coincides exactly when l is even:")
for k, l in [(0, 3), (2, 5)]:
    r = closeness_check(k, l, bound=100, cache=cache)
    d = r.detail
    print(f"  odd  l: wkl({k},{l}) vs wk({l}): max deviation "
          f"{d['max_deviation']} over {d['pairs_compared']} pairs -> {r.status}")
for k, l in [(0, 2), (1, 4)]:
    r = s1_coincidence_check(k, l, bound=100, cache=cache)
    print(f"  even l: wkl({k},{l}) vs wk({l}): exact equality -> {r.status}")

print()
print("side-by-side flavor of the odd-l nearness (first rows, bound 100):")
skl = cache.get(wkl(0, 3), 100).g_set(1).positions[:8]
sl = cache.get(wk(3), 100).g_set(1).positions[:8]
for x, y in zip(skl, sl):
    mark = "=" if x == y else "~"
    print(f"  wkl(0,3): {x}   {mark}   wk(3): {y}")
