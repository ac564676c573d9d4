"""Closed-form position sets: zero-value and one-value sets per rule family.

Every generator returns a :class:`~wythoff_variants.grundy.GSet` truncated
to positions whose larger coordinate is at most the bound — the same
truncation convention the engine's g-set extraction uses, so the two sides
compare by plain equality.

The closed forms all build on the golden-ratio Beatty pair (A, B) =
(lower_wythoff(n), upper_wythoff(n)):

* ``formula_p_wythoff``     -- {(A_n, B_n)}: zero-value set of the classical game.
* ``formula_p_wk``          -- {(i,i) : i < k} + the pair set shifted by k:
                               zero-value set of wk(k).
* ``formula_p_wk_recursive``-- the same set, built from the wk form for a
                               smaller parameter by shifting l and topping up
                               the diagonal.
* ``formula_p_wk_prime``    -- alias of ``formula_p_wk`` (the primed family
                               shares its zero-value set).
* ``formula_p_wkl``         -- alias of ``formula_p_wk(l)``: only the larger
                               threshold matters for zero values.
* ``formula_p_tk``          -- {(0,0)} + pairs shifted by 1; independent of k.
* ``formula_s1_w1``         -- {(0,1)} + pairs shifted by 2: one-value set of wk(1).
* ``formula_s1_wk_shift``   -- one-value set of wk(k+2) from a one-value set
                               of wk(k): prepend (0,1), shift the rest by 2.
* ``formula_s1_wk_odd``     -- closed one-value set of wk(k) for odd k.
* ``formula_s1_tk``         -- one-value set of tk(k); independent of k and
                               equal to ``formula_s1_w1``.

Membership tests run in O(1) by inverting the diagonal offset: on the
shifted pair part of each set, b - a = (B_n + c) - (A_n + c) = n, so the
candidate index is n = b - a and it only remains to compare A_n.
"""

from __future__ import annotations

from .beatty import lower_wythoff, upper_wythoff
from .grundy import GSet
from .rulesets import Position, normalize

P_WYTHOFF = "p_wythoff"
P_WK = "p_wk"
P_WK_RECURSION = "p_wk_recursion"
P_WK_PRIME = "p_wk_prime"
P_WKL = "p_wkl"
P_TK = "p_tk"
S1_W1 = "s1_w1"
S1_WK_SHIFT = "s1_wk_shift"
S1_WK_ODD = "s1_wk_odd"
S1_TK = "s1_tk"

FORMULA_IDS = (
    P_WYTHOFF,
    P_WK,
    P_WK_RECURSION,
    P_WK_PRIME,
    P_WKL,
    P_TK,
    S1_W1,
    S1_WK_SHIFT,
    S1_WK_ODD,
    S1_TK,
)


def _shifted_pairs(offset: int, bound: int) -> list[Position]:
    """(A_n + offset, B_n + offset) for n = 0, 1, ... while in bound."""
    out = []
    n = 0
    while True:
        b = upper_wythoff(n) + offset
        if b > bound:
            return out
        out.append((lower_wythoff(n) + offset, b))
        n += 1


def _diagonal_prefix(count: int, bound: int) -> list[Position]:
    """(i, i) for 0 <= i < count, truncated to i <= bound."""
    return [(i, i) for i in range(min(count, bound + 1))]


def formula_p_wythoff(bound: int) -> GSet:
    """Zero-value positions of the classical game up to ``bound``."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return GSet(0, _shifted_pairs(0, bound), bound, "formula")


def formula_p_wk(k: int, bound: int) -> GSet:
    """Zero-value positions of wk(k) up to ``bound``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    positions = sorted(_diagonal_prefix(k, bound) + _shifted_pairs(k, bound))
    return GSet(0, positions, bound, "formula")


def formula_p_wk_recursive(k: int, l: int, bound: int) -> GSet:
    """Zero-value positions of wk(k+l), assembled from those of wk(k).

    Shift the wk(k) set by l and prepend the diagonal run {(i,i) : i < l};
    equals ``formula_p_wk(k + l, bound)``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if l <= 0:
        raise ValueError("the shift l must be positive")
    base = formula_p_wk(k, bound - l).positions if bound >= l else []
    shifted = [(a + l, b + l) for a, b in base]
    positions = sorted(_diagonal_prefix(l, bound) + shifted)
    return GSet(0, positions, bound, "formula")


def formula_p_wk_prime(k: int, bound: int) -> GSet:
    """Zero-value positions of wk_prime(k): identical to those of wk(k)."""
    return formula_p_wk(k, bound)


def formula_p_wkl(k: int, l: int, bound: int) -> GSet:
    """Zero-value positions of wkl(k, l): identical to those of wk(l)."""
    if not 0 <= k <= l:
        raise ValueError("wkl requires 0 <= k <= l")
    return formula_p_wk(l, bound)


def formula_p_tk(bound: int) -> GSet:
    """Zero-value positions of tk(k), any k: {(0,0)} + pairs shifted by 1."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return GSet(0, [(0, 0)] + _shifted_pairs(1, bound), bound, "formula")


def formula_s1_w1(bound: int) -> GSet:
    """One-value positions of wk(1): {(0,1)} + pairs shifted by 2."""
    positions = ([(0, 1)] if bound >= 1 else []) + _shifted_pairs(2, bound)
    return GSet(1, positions, bound, "formula")


def formula_s1_wk_shift(base: GSet) -> GSet:
    """One-value set of wk(k+2) from a one-value set of wk(k).

    The result is bounded by ``base.bound + 2``: a shifted member lands in
    bound exactly when its source lay within the base bound.
    """
    if base.g != 1:
        raise ValueError("shift applies to one-value sets")
    bound = base.bound + 2
    positions = ([(0, 1)] if bound >= 1 else []) + [(a + 2, b + 2) for a, b in base.positions]
    return GSet(1, sorted(positions), bound, "formula")


def formula_s1_wk_odd(k: int, bound: int) -> GSet:
    """One-value positions of wk(k) for odd k = 2l+1, in closed form."""
    if k < 1 or k % 2 == 0:
        raise ValueError("closed one-value form needs odd k >= 1")
    half = (k - 1) // 2
    stairs = [(2 * i, 2 * i + 1) for i in range(half + 1) if 2 * i + 1 <= bound]
    positions = sorted(stairs + _shifted_pairs(k + 1, bound))
    return GSet(1, positions, bound, "formula")


def formula_s1_tk(bound: int) -> GSet:
    """One-value positions of tk(k), any k: same set as ``formula_s1_w1``."""
    return formula_s1_w1(bound)


def membership(formula_id: str, p: Position, k: int | None = None,
               l: int | None = None, base: GSet | None = None) -> bool:
    """O(1) membership in a formula's full (untruncated) set.

    ``base`` is required only for ``s1_wk_shift``, whose content depends on
    the supplied base set (membership is then bounded by the base's bound).
    """
    a, b = normalize(*p)
    n = b - a

    def on_pairs(offset: int) -> bool:
        return a >= offset and lower_wythoff(n) == a - offset

    if formula_id == P_WYTHOFF:
        return on_pairs(0)
    if formula_id in (P_WK, P_WK_PRIME):
        _require(k is not None and k >= 0, "k >= 0 required")
        return (a == b and a < k) or on_pairs(k)
    if formula_id == P_WKL:
        _require(l is not None and k is not None and 0 <= k <= l, "0 <= k <= l required")
        return (a == b and a < l) or on_pairs(l)
    if formula_id == P_WK_RECURSION:
        _require(k is not None and k >= 0 and l is not None and l > 0,
                 "k >= 0 and l > 0 required")
        if a == b and a < l:
            return True
        if a < l:
            return False
        return membership(P_WK, (a - l, b - l), k=k)
    if formula_id == P_TK:
        return (a, b) == (0, 0) or on_pairs(1)
    if formula_id in (S1_W1, S1_TK):
        return (a, b) == (0, 1) or on_pairs(2)
    if formula_id == S1_WK_ODD:
        _require(k is not None and k >= 1 and k % 2 == 1, "odd k >= 1 required")
        if b == a + 1 and a % 2 == 0 and a <= k - 1:
            return True
        return on_pairs(k + 1)
    if formula_id == S1_WK_SHIFT:
        _require(base is not None, "a base set is required")
        if (a, b) == (0, 1):
            return True
        return a >= 2 and (a - 2, b - 2) in set(base.positions)
    raise ValueError(f"unknown formula id: {formula_id!r}")


def _require(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


def formula_set(formula_id: str, bound: int, k: int | None = None,
                l: int | None = None, base: GSet | None = None) -> GSet:
    """Dispatch a formula id to its generator (CLI and verification glue)."""
    if formula_id == P_WYTHOFF:
        return formula_p_wythoff(bound)
    if formula_id == P_WK:
        _require(k is not None, "p_wk needs k")
        return formula_p_wk(k, bound)
    if formula_id == P_WK_RECURSION:
        _require(k is not None and l is not None, "p_wk_recursion needs k and l")
        return formula_p_wk_recursive(k, l, bound)
    if formula_id == P_WK_PRIME:
        _require(k is not None, "p_wk_prime needs k")
        return formula_p_wk_prime(k, bound)
    if formula_id == P_WKL:
        _require(k is not None and l is not None, "p_wkl needs k and l")
        return formula_p_wkl(k, l, bound)
    if formula_id == P_TK:
        return formula_p_tk(bound)
    if formula_id == S1_W1:
        return formula_s1_w1(bound)
    if formula_id == S1_WK_SHIFT:
        _require(base is not None, "s1_wk_shift needs a base set")
        return formula_s1_wk_shift(base)
    if formula_id == S1_WK_ODD:
        _require(k is not None, "s1_wk_odd needs k")
        return formula_s1_wk_odd(k, bound)
    if formula_id == S1_TK:
        return formula_s1_tk(bound)
    raise ValueError(f"unknown formula id: {formula_id!r}")
