import pytest

from wythoff_variants.rulesets import (
    RulesetSpec,
    diagonal_moves,
    illegal_reason,
    is_legal,
    move_list,
    moves,
    normalize,
    t_infinity,
    tk,
    wk,
    wk_prime,
    wkl,
    wythoff,
)


def all_positions(bound):
    return [(a, b) for b in range(bound + 1) for a in range(b + 1)]


# --- spec construction and validation ---


def test_normalize_sorts_and_rejects_negatives():
    assert normalize(7, 3) == (3, 7)
    assert normalize(3, 7) == (3, 7)
    with pytest.raises(ValueError):
        normalize(-1, 2)


def test_ruleset_validation():
    with pytest.raises(ValueError):
        wkl(5, 3)  # needs k <= l
    with pytest.raises(ValueError):
        wk(-1)
    with pytest.raises(ValueError):
        RulesetSpec("wythoff", k=0)  # takes no k
    with pytest.raises(ValueError):
        RulesetSpec("tk")  # needs k
    with pytest.raises(ValueError):
        RulesetSpec("wk", k=1, l=2)  # takes no l
    with pytest.raises(ValueError):
        RulesetSpec("nosuch", k=0)
    assert wkl(3, 3).label() == "wkl(3,3)"
    assert t_infinity().label() == "t_infinity"


# --- diagonal moves, including the (5,10) comparison rows ---


def test_ratio_family_from_5_10():
    expected = {
        0: [(1, (4, 9)), (2, (3, 8))],
        1: [(1, (4, 9)), (2, (3, 8)), (3, (2, 7))],
        2: [(1, (4, 9)), (2, (3, 8)), (3, (2, 7))],
        3: [(1, (4, 9)), (2, (3, 8)), (3, (2, 7))],
        4: [(1, (4, 9)), (2, (3, 8)), (3, (2, 7)), (4, (1, 6))],
    }
    for k, want in expected.items():
        assert diagonal_moves(tk(k), (5, 10)) == want


def test_diagonal_edge_cases():
    assert diagonal_moves(t_infinity(), (1, 1)) == []
    assert diagonal_moves(wk(0), (3, 3)) == [(1, (2, 2)), (2, (1, 1)), (3, (0, 0))]
    assert diagonal_moves(tk(3), (0, 9)) == []
    assert diagonal_moves(tk(3), (1, 9)) == []


def test_wk_diagonal_keeps_piles_at_k():
    targets = [t for _, t in diagonal_moves(wk(3), (6, 9))]
    assert targets == [(5, 8), (4, 7), (3, 6)]


def test_wkl_diagonal_thresholds():
    targets = {t for _, t in diagonal_moves(wkl(3, 5), (6, 9))}
    assert (3, 6) in targets
    assert (2, 5) not in targets


def test_wk_prime_restricts_only_equal_piles():
    # from unequal piles the full diagonal range is allowed
    assert [s for s, _ in diagonal_moves(wk_prime(2), (4, 7))] == [1, 2, 3, 4]
    # from equal piles the landing pair must be at least (k, k)
    assert [t for _, t in diagonal_moves(wk_prime(2), (4, 4))] == [(3, 3), (2, 2)]


def test_is_legal_examples():
    assert is_legal(wkl(3, 5), (6, 9), (3, 6))
    assert not is_legal(wkl(3, 5), (6, 9), (2, 5))
    assert not is_legal(wythoff(), (4, 4), (4, 4))


def test_terminal_has_no_moves():
    for rs in (wythoff(), wk(2), wk_prime(1), wkl(1, 4), tk(0), t_infinity()):
        assert moves(rs, (0, 0)) == set()


# --- move_list and moves agree; targets are normalized and shrinking ---


RULESETS = [wythoff(), wk(0), wk(1), wk(3), wk_prime(0), wk_prime(2),
            wkl(0, 2), wkl(1, 3), tk(0), tk(1), tk(4), t_infinity()]


def test_move_list_matches_move_set():
    for rs in RULESETS:
        for p in all_positions(12):
            listed = move_list(rs, p)
            targets = [m.target for m in listed]
            assert len(targets) == len(set(targets)), (rs, p)
            assert set(targets) == moves(rs, p), (rs, p)
            for m in listed:
                assert m.amount >= 1
                assert m.kind in ("nim-first", "nim-second", "diagonal")


def test_targets_normalized_and_strictly_smaller():
    for rs in RULESETS:
        for p in all_positions(12):
            for q in moves(rs, p):
                assert q[0] <= q[1]
                assert q[0] + q[1] < p[0] + p[1]


def test_diagonal_preserves_difference():
    for rs in RULESETS:
        for p in all_positions(12):
            for s, (c, d) in diagonal_moves(rs, p):
                assert d - c == p[1] - p[0]
                assert p[0] - c == s


def test_nim_move_count():
    for p in all_positions(12):
        a, b = p
        nim = [m for m in move_list(wythoff(), p) if m.kind != "diagonal"]
        # from equal piles each single-pile target exists once, not twice
        assert len(nim) == (a if a == b else a + b)


# --- lattice of rule sets and the two identities ---


def test_moveset_lattice_inclusions():
    for p in all_positions(25):
        mw = moves(wythoff(), p)
        prev_wk = None
        for k in range(4):
            mk = moves(wk(k), p)
            mkp = moves(wk_prime(k), p)
            assert mk <= mkp <= mw
            if prev_wk is not None:
                assert mk <= prev_wk
            prev_wk = mk
        mtinf = moves(t_infinity(), p)
        prev_tk = None
        for k in range(4):
            mt = moves(tk(k), p)
            if prev_tk is not None:
                assert prev_tk <= mt
            prev_tk = mt
        assert prev_tk <= mtinf <= mw


def test_ruleset_identities():
    for p in all_positions(25):
        assert moves(wythoff(), p) == moves(wk(0), p)
        assert moves(t_infinity(), p) == moves(wk(1), p)
        for k in range(4):
            assert moves(wkl(k, k), p) == moves(wk(k), p)


# --- illegal-move explanations used by the interactive player ---


def test_illegal_reason_messages():
    assert illegal_reason(wythoff(), (1, 2), (0, 1)) == ""  # legal
    assert "at least one token" in illegal_reason(wythoff(), (4, 4), (4, 4))
    assert "both piles at least 2" in illegal_reason(wk(2), (3, 5), (0, 2))
    assert "ratio" in illegal_reason(tk(0), (5, 10), (2, 7))
    assert "positive" in illegal_reason(t_infinity(), (3, 5), (0, 2))
    # not a move shape at all: changes both piles by different amounts
    assert "one pile" in illegal_reason(wythoff(), (4, 9), (1, 7))
