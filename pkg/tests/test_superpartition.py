from itertools import product

import pytest
from hypothesis import given, strategies as st

from superjack.superpartition import (
    InvalidMove, Partition, Superpartition, box_set_B, build_Xk, cell_stats, circledast, degree,
    dominance_leq, from_star_circledast, gamma_bar, gamma_r_s_plus1, is_admissible_22,
    is_super_admissible_22, mu_partition, staircase_gamma, star, superpartitions, top_move,
    top_moves,
)

S = Superpartition.parse


@pytest.mark.parametrize("text, want", [
    ("(6,3,2,0;5,3)", (6, 5, 3, 3, 2)),
    ("(;)", ()),
    ("(1,0;)", (1,)),
])
def test_star(text, want):
    assert star(S(text)) == Partition(want)


@pytest.mark.parametrize("text, want", [
    ("(6,3,2,0;5,3)", (7, 5, 4, 3, 3, 1)),
    ("(0;)", (1,)),
    ("(4,3,2,1,0;)", (5, 4, 3, 2, 1)),
])
def test_circledast(text, want):
    assert circledast(S(text)) == Partition(want)


@pytest.mark.parametrize("text, want", [
    ("(6,3,2,0;5,3)", (19, 4)),
    ("(;)", (0, 0)),
    ("(2,1,0;)", (3, 3)),
])
def test_degree(text, want):
    assert degree(S(text)) == want


def test_dominance_examples():
    assert dominance_leq(S("(2,1;)"), S("(2,1;)"))
    assert not dominance_leq(S("(2,0;)"), S("(1,0;1)"))
    # different bidegrees are never comparable
    assert not dominance_leq(S("(0;1)"), S("(1,0;)"))


def test_dominance_same_degree():
    # Omega* = (1,1) <= (2) and Omega^circ = (2,1) <= (3)
    assert dominance_leq(S("(1;1)"), S("(2;)"))
    assert not dominance_leq(S("(2;)"), S("(1;1)"))


@pytest.mark.parametrize("n", range(0, 7))
def test_dominance_partial_order(n):
    for m in range(n + 2):
        sps = superpartitions(n, m)
        for a in sps:
            assert dominance_leq(a, a)
        for a, b in product(sps, repeat=2):
            if a != b and dominance_leq(a, b):
                assert not dominance_leq(b, a)
                for c in sps:
                    if dominance_leq(b, c):
                        assert dominance_leq(a, c)


def test_star_circledast_injective():
    seen = {}
    for n in range(9):
        for m in range(n + 2):
            for sp in superpartitions(n, m):
                key = (star(sp), circledast(sp))
                assert key not in seen
                seen[key] = sp
                assert from_star_circledast(*key) == sp
                assert circledast(sp).size() == star(sp).size() + sp.m


def test_cell_stats():
    c = cell_stats(Partition((2, 1)), Partition((2, 1)), (1, 1))
    assert (c.arm, c.leg) == (1, 1)
    c = cell_stats(Partition((1,)), Partition((1,)), (1, 1))
    assert (c.arm, c.leg, c.coarm, c.coleg) == (0, 0, 0, 0)
    c = cell_stats(Partition((3,)), Partition((3,)), (1, 2))
    assert (c.coarm, c.coleg) == (1, 0)
    with pytest.raises(ValueError):
        cell_stats(Partition((1,)), Partition((1,)), (2, 1))


@pytest.mark.parametrize("text, want", [("(0;)", set()), ("(;1)", {(1, 1)})])
def test_box_set_B(text, want):
    assert box_set_B(S(text)) == want


@pytest.mark.parametrize("lam, parts, want", [
    ((3, 3, 1, 1), 4, True),
    ((3, 2, 1, 0), 4, True),
    ((2, 2, 2), 3, False),
])
def test_admissible(lam, parts, want):
    assert is_admissible_22(Partition(lam), parts) is want


@pytest.mark.parametrize("text, l, want", [
    ("(4,3,2,1,0;)", 5, True),
    ("(4,3,0;2,2)", 5, True),
    ("(;1,1,1)", 3, False),
])
def test_super_admissible(text, l, want):
    assert is_super_admissible_22(S(text), l) is want


def test_special_shapes():
    assert staircase_gamma(2, 4) == S("(2,1;)")
    assert gamma_bar(5, 5) == S("(4,3,2,1,0;)")
    assert gamma_r_s_plus1(2, 3) == S("(2,1;)")
    with pytest.raises(ValueError):
        staircase_gamma(2, 3)
    with pytest.raises(ValueError):
        staircase_gamma(4, 2)


@pytest.mark.parametrize("sector, k, want", [
    ("NS", 2, (3, 3, 1, 1)),
    ("R", 2, (3, 2, 1)),
    ("NS", 1, (1, 1)),
])
def test_mu_partition(sector, k, want):
    assert mu_partition(sector, k) == Partition(want)


def test_top_moves():
    L = S("(4,3,2,1,0;)")
    assert top_move(L, 2).to_spart() == S("(4,3,0;2,2)")
    assert top_moves(L, (4, 2)) == S("(0;4,4,2,2)")
    assert top_moves(L, (1, 3)) == S("(4;3,3,1,1)")
    for bad in [(2, 2), (3, 2)]:
        with pytest.raises(InvalidMove):
            top_moves(L, bad)


def test_build_Xk_listing():
    L = S("(4,3,2,1,0;)")
    assert build_Xk(L, 0) == {L}
    assert build_Xk(L, 1) == {S(x) for x in ("(4,3,2;1,1)", "(4,3,0;2,2)", "(4,1,0;3,3)", "(2,1,0;4,4)")}
    assert build_Xk(L, 2) == {S(x) for x in ("(4;3,3,1,1)", "(2;4,4,1,1)", "(0;4,4,2,2)")}


@pytest.mark.parametrize("l", range(1, 7))
def test_Xk_admissible(l):
    for a in range(l, l + 3):
        g = gamma_bar(a, l)
        for k in range(l // 2 + 1):
            assert all(is_super_admissible_22(x, l) for x in build_Xk(g, k))


@pytest.mark.parametrize("text", ["(1;", "(a;b)", "(1,1;)", "(0;0)", "(1;2,3)"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        S(text)


@given(st.lists(st.integers(0, 6), unique=True, max_size=4),
       st.lists(st.integers(1, 6), max_size=4))
def test_roundtrip_text(a, s):
    sp = Superpartition(tuple(sorted(a, reverse=True)), tuple(sorted(s, reverse=True)))
    assert S(str(sp)) == sp
    assert sp.degree() == (sum(a) + sum(s), len(a))
