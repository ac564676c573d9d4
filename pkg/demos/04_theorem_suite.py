#!/usr/bin/env python3
"""Run the full verification sweep: every closed form against the engine.

Each claim id pairs an engine-extracted g-set with a closed-form (or
engine-to-engine) counterpart and demands exact equality up to the bound.
All of these are proven facts, so anything but "verified" would expose a
bug in the engine or in a formula.
"""

import time
from collections import Counter

from wythoff_variants import TableCache, run_theorem_suite

BOUND = 120

cache = TableCache()
t0 = time.perf_counter()
reports = run_theorem_suite(bound=BOUND, cache=cache)
elapsed = time.perf_counter() - t0

by_subject = Counter(r.subject for r in reports)
print(f"verified {len(reports)} claim instances at bound {BOUND} "
      f"in {elapsed:.2f} s using {len(cache.tables())} tables:")
for subject, count in sorted(by_subject.items()):
    print(f"  {subject:>5}: {count:>2} instance(s)")

print()
print("every report, one line each:")
for r in reports:
    params = ", ".join(f"{k}={v}" for k, v in r.params.items()) or "-"
    print(f"  {r.subject:>5} [{params:>10}]  {r.status}  ({r.elapsed_ms:.1f} ms)")

assert all(r.status == "verified" for r in reports)
print()
print("all claims verified.")
