"""Exact Sprague-Grundy tables over a bounded board.

A table holds the nim-value of every normalized position (a, b) with
b <= bound.  No move ever increases a coordinate, so each option of a
stored position is itself stored; the bounded table therefore equals the
unbounded game's values exactly, and a table computed at a larger bound
restricts to the table at any smaller bound.

The sweep visits positions in larger-coordinate-major order (all (a, b)
with b = 0, then b = 1, ...; within a level, a ascending), which puts every
option before the position that uses it: a nim move either keeps the larger
coordinate and shrinks the smaller one, or shrinks the larger coordinate;
a diagonal move shrinks both.  Values are stored in a full (N+1) x (N+1)
array mirrored across the diagonal so the hot loop never has to reorder a
pair; at 4 bytes per entry the mirror is immaterial for any feasible bound.
Values are int32: a nim-value is at most the option count, which is below
2^31 for any bound that fits in memory.

The per-position mex uses one reusable boolean scratch array; marks are
undone via a visited stack instead of clearing the whole array.  The sweep
and the axiom re-checker are JIT-compiled with numba.

A finished table is immutable (the value array is marked read-only) and
may be read from any number of threads; building distinct tables
concurrently is also safe.  The single sweep itself is sequential, as each
value depends on earlier ones.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

import numpy as np
from numba import njit

from .rulesets import (
    TK,
    WK,
    WK_PRIME,
    WKL,
    WYTHOFF,
    Position,
    RulesetSpec,
    normalize,
)

# (bound+1)^2 int32 entries; 10_000 keeps a table around 400 MB.
MAX_BOUND = 10_000

SCHEMA_VERSION = 1

_FAM_WK = 0
_FAM_WK_PRIME = 1
_FAM_WKL = 2
_FAM_TK = 3
_FAM_T_INFINITY = 4


def mex(values) -> int:
    """Smallest nonnegative integer absent from ``values``."""
    present = set(values)
    m = 0
    while m in present:
        m += 1
    return m


def _kernel_args(rs: RulesetSpec) -> tuple[int, int, int]:
    fam = rs.family
    if fam in (WYTHOFF, WK):
        return _FAM_WK, rs.k or 0, 0
    if fam == WK_PRIME:
        return _FAM_WK_PRIME, rs.k, 0
    if fam == WKL:
        return _FAM_WKL, rs.k, rs.l
    if fam == TK:
        return _FAM_TK, rs.k, 0
    return _FAM_T_INFINITY, 0, 0


@njit(cache=True)
def _mark_options(g, a, b, fam, k, l, seen, touched):
    """Mark the nim-values of all options of (a, b); return the mark count."""
    top = 0
    for bp in range(b):  # shrink the larger pile; mirror covers the swap
        v = g[a, bp]
        if not seen[v]:
            seen[v] = True
            touched[top] = v
            top += 1
    for ap in range(a):  # shrink the smaller pile
        v = g[ap, b]
        if not seen[v]:
            seen[v] = True
            touched[top] = v
            top += 1
    if fam == _FAM_TK:
        if a >= 2:
            r0 = b // a
            for s in range(1, a):
                d = (b - s) // (a - s) - r0
                if -k <= d <= k:
                    v = g[a - s, b - s]
                    if not seen[v]:
                        seen[v] = True
                        touched[top] = v
                        top += 1
    else:
        if fam == _FAM_WK:
            smax = a - k
        elif fam == _FAM_WK_PRIME:
            smax = a - k if a == b else a
        elif fam == _FAM_WKL:
            smax = min(a - k, b - l)
        else:  # T_infinity
            smax = a - 1
        for s in range(1, smax + 1):
            v = g[a - s, b - s]
            if not seen[v]:
                seen[v] = True
                touched[top] = v
                top += 1
    return top


@njit(cache=True)
def _sweep(N, fam, k, l):
    g = np.zeros((N + 1, N + 1), np.int32)
    seen = np.zeros(2 * N + 3, np.bool_)
    touched = np.empty(2 * N + 3, np.int32)
    for b in range(N + 1):
        for a in range(b + 1):
            top = _mark_options(g, a, b, fam, k, l, seen, touched)
            m = 0
            while seen[m]:
                m += 1
            g[a, b] = m
            g[b, a] = m
            for i in range(top):
                seen[touched[i]] = False
    return g


@njit(cache=True)
def _axiom_scan(g, fam, k, l):
    """Re-derive each position's option values and check the mex axioms.

    Returns the first offending position encoded as a*(N+1)+b, or -1 if the
    whole table satisfies: no option shares the position's value, and every
    smaller value occurs among the options.
    """
    N = g.shape[0] - 1
    seen = np.zeros(2 * N + 3, np.bool_)
    touched = np.empty(2 * N + 3, np.int32)
    for b in range(N + 1):
        for a in range(b + 1):
            top = _mark_options(g, a, b, fam, k, l, seen, touched)
            v = g[a, b]
            bad = seen[v] or g[b, a] != v
            if not bad:
                for u in range(v):
                    if not seen[u]:
                        bad = True
                        break
            for i in range(top):
                seen[touched[i]] = False
            if bad:
                return a * (N + 1) + b
    return -1


@dataclass
class GSet:
    """All positions sharing one nim-value, sorted lexicographically."""

    g: int
    positions: list[Position]
    bound: int
    source: str  # "engine" or "formula"


class GrundyTable:
    """Nim-values of every normalized position with larger pile <= bound."""

    def __init__(self, ruleset: RulesetSpec, bound: int, values: np.ndarray):
        self.ruleset = ruleset
        self.bound = bound
        self.values = values

    def value(self, a: int, b: int) -> int:
        a, b = normalize(a, b)
        if b > self.bound:
            raise ValueError(f"position ({a},{b}) outside table bound {self.bound}")
        return int(self.values[a, b])

    def g_set(self, g: int) -> GSet:
        mask = np.triu(self.values == g)
        positions = [(int(a), int(b)) for a, b in np.argwhere(mask)]
        return GSet(g=g, positions=positions, bound=self.bound, source="engine")

    def p_positions(self) -> GSet:
        return self.g_set(0)

    def __repr__(self):
        return f"GrundyTable({self.ruleset.label()}, bound={self.bound})"


def grundy_table(rs: RulesetSpec, bound: int) -> GrundyTable:
    """Compute the exact nim-value table for ``rs`` up to ``bound``."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    if bound > MAX_BOUND:
        raise ValueError(
            f"bound {bound} exceeds the supported maximum {MAX_BOUND}; "
            f"a table stores (bound+1)^2 4-byte values and {MAX_BOUND} "
            f"already needs ~400 MB"
        )
    fam, k, l = _kernel_args(rs)
    values = _sweep(bound, fam, k, l)
    values.setflags(write=False)
    return GrundyTable(rs, bound, values)


def check_grundy_axioms(table: GrundyTable) -> Position | None:
    """First position violating the mex axioms, or None if the table is sound.

    Values are screened against the provable range first (0 <= g <= a + b,
    so in particular g <= 2*bound) so the compiled scan never indexes its
    scratch array out of bounds even on a corrupted table.
    """
    values = table.values
    out_of_range = np.argwhere((values < 0) | (values > 2 * table.bound))
    if len(out_of_range):
        a, b = (int(x) for x in out_of_range[0])
        return normalize(a, b)
    fam, k, l = _kernel_args(table.ruleset)
    code = _axiom_scan(values, fam, k, l)
    if code < 0:
        return None
    n1 = table.bound + 1
    return (code // n1, code % n1)


# --- optional on-disk table cache ---
#
# One file per (ruleset, bound): a single JSON header line followed by one
# "a,b,g" line per normalized position in lexicographic order.  The format
# is an optimization only; rewriting a recomputed table must reproduce the
# file byte for byte, which the test suite checks.


def cache_filename(rs: RulesetSpec, bound: int) -> str:
    parts = [rs.family]
    if rs.k is not None:
        parts.append(f"k{rs.k}")
    if rs.l is not None:
        parts.append(f"l{rs.l}")
    parts.append(f"N{bound}")
    return "_".join(parts) + ".gtable"


def table_file_lines(table: GrundyTable):
    """Yield the cache-file lines (without newlines) for ``table``."""
    header = {
        "schema_version": SCHEMA_VERSION,
        "family": table.ruleset.family,
        "k": table.ruleset.k,
        "l": table.ruleset.l,
        "N": table.bound,
    }
    yield json.dumps(header)
    values = table.values
    for a in range(table.bound + 1):
        for b in range(a, table.bound + 1):
            yield f"{a},{b},{values[a, b]}"


def write_table(table: GrundyTable, path) -> None:
    """Write the cache file atomically (write-then-rename)."""
    path = os.fspath(path)
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8", newline="\n") as fh:
        for line in table_file_lines(table):
            fh.write(line)
            fh.write("\n")
    os.replace(tmp, path)


def read_table(path) -> GrundyTable:
    """Load a table written by ``write_table``."""
    with open(path, encoding="utf-8") as fh:
        header = json.loads(fh.readline())
        if header.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported table file schema: {header.get('schema_version')!r}")
        rs = RulesetSpec(header["family"], k=header["k"], l=header["l"])
        bound = header["N"]
        values = np.zeros((bound + 1, bound + 1), np.int32)
        count = 0
        for line in fh:
            a_s, b_s, g_s = line.rstrip("\n").split(",")
            a, b, g = int(a_s), int(b_s), int(g_s)
            if not (0 <= a <= b <= bound) or not (0 <= g <= a + b):
                raise ValueError(f"corrupt table file row: {line!r}")
            values[a, b] = g
            values[b, a] = g
            count += 1
    expected = (bound + 1) * (bound + 2) // 2
    if count != expected:
        raise ValueError(f"table file has {count} rows, expected {expected}")
    values.setflags(write=False)
    return GrundyTable(rs, bound, values)
