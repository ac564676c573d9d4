"""Rule families and move generation for two-pile diagonal-restricted games.

A position is a plain tuple ``(a, b)`` of pile sizes, kept normalized with
``a <= b``; every family is symmetric under pile exchange, so normalization
is sound and halves the state space.  A move either removes tokens from a
single pile (a nim move) or removes the same amount ``s >= 1`` from both
piles (a diagonal move).  The families differ only in which diagonal
amounts are legal from a normalized ``(a, b)``:

* ``wythoff``      -- 1 <= s <= a (the classical game).
* ``wk(k)``        -- 1 <= s <= a - k: both piles must keep at least k.
* ``wk_prime(k)``  -- 1 <= s <= a, except that from (a, a) the results
                      (a-s, a-s) with a-s < k are forbidden (equal piles
                      below k may not be reached diagonally).
* ``wkl(k, l)``    -- k <= l; after the move the smaller pile must be
                      >= k and the larger >= l, so s <= min(a-k, b-l).
* ``tk(k)``        -- 1 <= s <= a-1 (the smaller pile must stay positive)
                      and the integer ratio of the piles may change by at
                      most k: |(b-s)//(a-s) - b//a| <= k.
* ``t_infinity``   -- 1 <= s <= a-1: only the positivity constraint.

``wythoff`` and ``wk(0)`` generate identical moves; both spellings are
accepted.  Likewise ``wkl(k, k)`` matches ``wk(k)`` and ``t_infinity``
matches ``wk(1)``; the test suite checks these identities.

Everything here is a pure function of its inputs and safe to call from any
number of threads.
"""

from __future__ import annotations

from dataclasses import dataclass

WYTHOFF = "wythoff"
WK = "wk"
WK_PRIME = "wk_prime"
WKL = "wkl"
TK = "tk"
T_INFINITY = "t_infinity"

FAMILIES = (WYTHOFF, WK, WK_PRIME, WKL, TK, T_INFINITY)

_NEEDS_K = (WK, WK_PRIME, WKL, TK)

Position = tuple[int, int]


def normalize(a: int, b: int) -> Position:
    """Sort a pile pair into the canonical (smaller, larger) order."""
    if a < 0 or b < 0:
        raise ValueError("pile sizes must be nonnegative")
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class RulesetSpec:
    """One concrete rule family with its integer parameters."""

    family: str
    k: int | None = None
    l: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family: {self.family!r}")
        if self.family in _NEEDS_K:
            if self.k is None or self.k < 0:
                raise ValueError(f"family {self.family!r} needs k >= 0")
        elif self.k is not None:
            raise ValueError(f"family {self.family!r} takes no k")
        if self.family == WKL:
            if self.l is None or self.l < 0:
                raise ValueError("family 'wkl' needs l >= 0")
            if self.k > self.l:
                raise ValueError(f"wkl requires k <= l, got k={self.k}, l={self.l}")
        elif self.l is not None:
            raise ValueError(f"family {self.family!r} takes no l")

    def label(self) -> str:
        if self.family == WKL:
            return f"wkl({self.k},{self.l})"
        if self.k is not None:
            return f"{self.family}({self.k})"
        return self.family


def wythoff() -> RulesetSpec:
    return RulesetSpec(WYTHOFF)


def wk(k: int) -> RulesetSpec:
    return RulesetSpec(WK, k=k)


def wk_prime(k: int) -> RulesetSpec:
    return RulesetSpec(WK_PRIME, k=k)


def wkl(k: int, l: int) -> RulesetSpec:
    return RulesetSpec(WKL, k=k, l=l)


def tk(k: int) -> RulesetSpec:
    return RulesetSpec(TK, k=k)


def t_infinity() -> RulesetSpec:
    return RulesetSpec(T_INFINITY)


@dataclass(frozen=True)
class Move:
    """A single legal move: which pile(s), how many tokens, where it lands.

    kind is "nim-first" (remove from the smaller pile), "nim-second"
    (remove from the larger pile) or "diagonal" (remove ``amount`` from
    both); ``target`` is the normalized resulting position.
    """

    kind: str
    amount: int
    target: Position


def diagonal_amounts(rs: RulesetSpec, p: Position) -> list[int]:
    """Legal diagonal removal amounts from normalized ``p``, ascending."""
    a, b = p
    if a == 0:
        return []
    fam = rs.family
    if fam == WYTHOFF:
        return list(range(1, a + 1))
    if fam == WK:
        return list(range(1, a - rs.k + 1))
    if fam == WK_PRIME:
        top = a - rs.k if a == b else a
        return list(range(1, top + 1))
    if fam == WKL:
        return list(range(1, min(a - rs.k, b - rs.l) + 1))
    if fam == T_INFINITY:
        return list(range(1, a))
    # tk: needs a >= 2 for any diagonal (a - s > 0 with s >= 1), and the
    # floor-ratio of larger over smaller may move by at most k.
    if a < 2:
        return []
    base_ratio = b // a
    return [s for s in range(1, a) if abs((b - s) // (a - s) - base_ratio) <= rs.k]


def diagonal_moves(rs: RulesetSpec, p: Position) -> list[tuple[int, Position]]:
    """Diagonal options only, as (amount, target) pairs ascending in amount."""
    a, b = p
    return [(s, (a - s, b - s)) for s in diagonal_amounts(rs, p)]


def move_list(rs: RulesetSpec, p: Position) -> list[Move]:
    """All legal moves from normalized ``p``, one entry per distinct target.

    Enumeration order is nim-first, nim-second, then diagonal, each by
    ascending amount; when two moves reach the same normalized target the
    earlier one is kept.  From (a, a) the two nim directions are the same
    by symmetry, so only nim-first is emitted.
    """
    a, b = p
    out: list[Move] = []
    seen: set[Position] = set()

    def emit(kind: str, amount: int, target: Position):
        if target not in seen:
            seen.add(target)
            out.append(Move(kind, amount, target))

    for amt in range(1, a + 1):
        emit("nim-first", amt, (a - amt, b))
    if a != b:
        for amt in range(1, b + 1):
            emit("nim-second", amt, normalize(a, b - amt))
    for s in diagonal_amounts(rs, p):
        emit("diagonal", s, (a - s, b - s))
    return out


def moves(rs: RulesetSpec, p: Position) -> set[Position]:
    """The deduplicated set of positions reachable in one legal move."""
    a, b = p
    out: set[Position] = set()
    for ap in range(a):
        out.add((ap, b))
    for bp in range(b):
        out.add((bp, a) if bp < a else (a, bp))
    for s in diagonal_amounts(rs, p):
        out.add((a - s, b - s))
    return out


def is_legal(rs: RulesetSpec, frm: Position, to: Position) -> bool:
    """True iff ``to`` is reachable from ``frm`` in one move under ``rs``."""
    return to in moves(rs, frm)


def illegal_reason(rs: RulesetSpec, frm: Position, to: Position) -> str:
    """Human-readable explanation of why ``frm -> to`` is not a legal move.

    Used by the interactive player to re-prompt; returns an empty string
    for legal moves.  Single-pile removals are legal in every family, so an
    illegal target is either not move-shaped at all or a diagonal removal
    rejected by the family constraint.
    """
    if is_legal(rs, frm, to):
        return ""
    a, b = frm
    c, d = to
    if (c, d) == (a, b):
        return "a move must remove at least one token"
    s = a - c
    if s >= 1 and s == b - d:
        fam = rs.family
        if fam == WK:
            return f"a diagonal move must leave both piles at least {rs.k}"
        if fam == WK_PRIME:
            return f"a diagonal move may not land on equal piles smaller than {rs.k}"
        if fam == WKL:
            return (f"a diagonal move must leave the smaller pile at least {rs.k} "
                    f"and the larger at least {rs.l}")
        if fam == TK:
            return (f"a diagonal move must keep the smaller pile positive and may "
                    f"change the floor ratio of larger over smaller by at most {rs.k}")
        if fam == T_INFINITY:
            return "a diagonal move must keep both piles positive"
    return "a move removes tokens from one pile only, or the same amount from both piles"
