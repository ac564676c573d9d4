"""Shared fixtures and slow independent oracles for the test suite."""

from fractions import Fraction

import pytest

from wythoff_variants import TableCache, grundy_table, mex, moves, wythoff
from wythoff_variants.grundy import check_grundy_axioms


def floor_phi_oracle(n: int) -> int:
    """floor(n * golden_ratio) decided by exact rational bounds.

    Consecutive Fibonacci quotients straddle the golden ratio, so n*phi is
    bracketed by two rationals whose floors eventually agree (n*phi is
    irrational for n >= 1).  Deliberately avoids isqrt and floats: this is
    the independent cross-check for the package's floor formula.
    """
    if n == 0:
        return 0
    fa, fb = 1, 1
    while True:
        fa, fb = fb, fa + fb
        lo = Fraction(n * fb, fa)
        hi = Fraction(n * (fa + fb), fb)
        if lo > hi:
            lo, hi = hi, lo
        if lo.__floor__() == hi.__floor__():
            return lo.__floor__()


def naive_grundy_values(rs, bound: int) -> dict:
    """Reference nim-values straight from the move generator.

    Pure-Python dynamic program over rulesets.moves(); quadratic-ish and
    slow, but independent of the compiled sweep it is used to check.
    """
    vals: dict = {}
    for b in range(bound + 1):
        for a in range(b + 1):
            vals[(a, b)] = mex(vals[q] for q in moves(rs, (a, b)))
    return vals


@pytest.fixture(scope="session")
def cache():
    """One shared in-memory table cache for the whole session."""
    return TableCache()


@pytest.fixture(scope="session", autouse=True)
def warm_jit():
    """Compile the numba kernels once so timed tests measure the sweep only."""
    check_grundy_axioms(grundy_table(wythoff(), 2))
