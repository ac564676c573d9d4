"""The golden-ratio Beatty pair, in exact integer arithmetic.

``lower_wythoff(n)`` is floor(n*phi) with phi = (1+sqrt(5))/2, and
``upper_wythoff(n)`` is floor(n*phi^2) = lower_wythoff(n) + n.  These are the
lower and upper Wythoff sequences (OEIS A000201 / A001950); for n >= 1 they
partition the positive integers.

No floating point is used anywhere: float rounding can flip a floor near an
integer, which silently corrupts every set built on top of these sequences.
Instead floor(n*phi) = (n + isqrt(5*n*n)) // 2, which is exact because
5*n^2 is never a perfect square for n >= 1 (5 is squarefree), so the
truncation in isqrt never lands on the boundary.  Python integers are
arbitrary width, so there is no overflow and no maximum supported index.

All functions here are pure; they can be called concurrently without
restriction.
"""

from __future__ import annotations

import time
from math import isqrt

from .reports import COUNTEREXAMPLE, VERIFIED, Report

__all__ = [
    "isqrt",
    "lower_wythoff",
    "upper_wythoff",
    "beatty_pairs",
    "verify_complementarity",
]


def lower_wythoff(n: int) -> int:
    """floor(n*phi), exactly."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    return (n + isqrt(5 * n * n)) // 2


def upper_wythoff(n: int) -> int:
    """floor(n*phi^2) = floor(n*phi) + n, exactly."""
    return lower_wythoff(n) + n


def beatty_pairs(max_index: int) -> list[tuple[int, int, int]]:
    """Rows (n, floor(n*phi), floor(n*phi^2)) for n = 0..max_index."""
    rows = []
    for n in range(max_index + 1):
        a = lower_wythoff(n)
        rows.append((n, a, a + n))
    return rows


def verify_complementarity(bound: int) -> Report:
    """Check that each integer in [1, bound] lies in exactly one sequence.

    Returns a "verified" report, or a counterexample naming the first
    integer covered zero or two times.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    start = time.perf_counter()
    counts = bytearray(bound + 1)
    n = 1
    while True:
        a = lower_wythoff(n)
        if a > bound:
            break
        counts[a] += 1
        n += 1
    n = 1
    while True:
        b = upper_wythoff(n)
        if b > bound:
            break
        counts[b] += 1
        n += 1
    witness = None
    for value in range(1, bound + 1):
        if counts[value] != 1:
            witness = {"integer": value, "times_covered": counts[value]}
            break
    elapsed = (time.perf_counter() - start) * 1000.0
    return Report(
        subject="lemma1",
        params={},
        bound=bound,
        status=COUNTEREXAMPLE if witness else VERIFIED,
        witness=witness,
        elapsed_ms=elapsed,
    )
