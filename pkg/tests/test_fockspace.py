from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superjack.exactfield import FieldElement
from superjack.fockspace import (CftParams, FockVector, ModeMonomial, a, algebra_closure_failures, b,
                                 basis_monomials, cft_params, rho_map, virasoro_G, virasoro_L)
from superjack.superpartition import Superpartition
from superjack.superpoly import SymFunc

u = FieldElement.gen("u")
H = Fraction(1, 2)
S = Superpartition.parse


def vac(sector="NS", lam=None):
    lam = u / 3 if lam is None else lam
    return FockVector.vacuum(sector, lam, u - 1 / u)


def mono(bosons=(), fermions=()):
    return ModeMonomial(tuple(bosons), tuple(Fraction(f) for f in fermions))


def test_boson_commutator():
    v = vac()
    assert a(a(v, -1), 1) == v
    assert a(v, 0) == v.scale(v.lam)
    assert a(v, 2).is_zero()


def test_fermion_zero_mode_squares_to_half():
    v = vac("R")
    assert b(b(v, 0), 0) == v.scale(H)


def test_fermion_anticommutator():
    v = vac("NS")
    assert b(b(v, -H), H) == v
    assert b(b(v, -H), -H).is_zero()
    w = b(v, -Fraction(3, 2))
    assert b(b(w, -H), Fraction(3, 2)) == b(v, -H).scale(-1)


def test_sector_mismatch():
    with pytest.raises(ValueError):
        b(vac("NS"), 0)
    with pytest.raises(ValueError):
        b(vac("R"), H)


@pytest.mark.parametrize("sector, eps", [("NS", H), ("R", Fraction(0))])
def test_L0_on_vacuum(sector, eps):
    v = vac(sector)
    lam, al0 = v.lam, v.alpha0
    assert virasoro_L(0, v) == v.scale((lam * lam - al0 * lam) / 2 + (1 - 2 * eps) / 16)


@pytest.mark.parametrize("sector, ks", [("NS", [H, Fraction(3, 2)]), ("R", [1, 2])])
def test_G_positive_annihilates_vacuum(sector, ks):
    for k in ks:
        assert virasoro_G(k, vac(sector)).is_zero()
    for n in (1, 2, 3):
        assert virasoro_L(n, vac(sector)).is_zero()


def test_params():
    P = cft_params(1, 3)
    assert P.alpha_plus * P.alpha_minus == -1
    assert P.alpha_plus + P.alpha_minus == P.alpha0
    assert P.kappa_plus == 2 / (P.alpha0 * P.alpha_plus)
    assert P.central_charge.evaluate(1) == Fraction(3, 2)
    assert P.central_charge == P.central_charge_t()
    with pytest.raises(ValueError):
        cft_params(0, 3)
    assert cft_params(2, 3).sector == "R" and cft_params(1, 3).sector == "NS"


@pytest.mark.parametrize("r, s", [(1, 3), (2, 2), (2, 3), (3, 1)])
def test_h_rs_identity(r, s):
    P = CftParams(r, s)
    assert P.h_rs_fock() + (1 - 2 * P.eps) / 16 == P.h_rs()


def test_rho_ns_chi13_chain():
    P = CftParams(1, 3)
    k = P.kappa_plus
    f = SymFunc("powersum", {S("(1;)"): k, S("(0;1)"): FieldElement.const(1, "u")})
    v = rho_map(f, "NS", P.alpha_rs(-1, -3), P.alpha0).normalized()
    assert v.terms == {mono(fermions=(Fraction(3, 2),)): 1, mono((1,), (H,)): P.alpha_plus}


def test_rho_generators():
    P = CftParams(2, 3)
    lam = P.alpha_rs(-2, -3)
    v = rho_map(SymFunc("powersum", {S("(0;)"): 1}), "R", lam, P.alpha0)
    # stored with b_0; b_0 = b_0^-/sqrt2 on |lam>, so this is (sqrt2/alpha0) b_0^-
    assert v.terms == {mono(fermions=(0,)): 2 / P.alpha0}
    v = rho_map(SymFunc("powersum", {S("(;1)"): 1}), "NS", lam, P.alpha0)
    assert v.terms == {mono((1,)): 2 / P.alpha0}
    with pytest.raises(ValueError):
        rho_map(SymFunc("monomial", {}), "NS", lam, P.alpha0)


@pytest.mark.parametrize("sector", ["NS", "R"])
def test_algebra_closure_grade2(sector):
    assert algebra_closure_failures(sector, Fraction(2, 7), u - 1 / u, max_grade=2) == []


@pytest.mark.parametrize("sector", ["NS", "R"])
def test_GG_on_vacuum_needs_central_term(sector):
    v = vac(sector)
    k = H if sector == "NS" else Fraction(1)
    lhs = virasoro_G(k, virasoro_G(-k, v)) + virasoro_G(-k, virasoro_G(k, v))
    c = Fraction(3, 2) - 3 * v.alpha0 * v.alpha0
    good = virasoro_L(0, v).scale(2) + v.scale(c * (k * k - Fraction(1, 4)) / 3)
    assert lhs == good
    if sector == "R":
        assert lhs != virasoro_L(0, v).scale(2)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["NS", "R"]), st.integers(0, 3), st.integers(-3, 3))
def test_grade_additivity(sector, grade2, n):
    for m in basis_monomials(sector, Fraction(grade2, 2) if sector == "NS" else grade2):
        v = FockVector(sector, u, u - 1 / u, {m: 1})
        w = virasoro_L(n, v)
        assert w.grades() <= {m.grade - n}
        if sector == "NS":
            w = virasoro_G(n + H, v)
            assert w.grades() <= {m.grade - n - H}


@pytest.mark.parametrize("text", ["(2,1;)", "(1,0;2)", "(3,0;1)", "(;2,1)"])
@pytest.mark.parametrize("sector", ["NS", "R"])
def test_rho_grade(text, sector):
    sp = S(text)
    v = rho_map(SymFunc("powersum", {sp: 1}), sector, u, u - 1 / u)
    n, m = sp.degree()
    shift = H if sector == "NS" else 0
    assert v.grades() == {n + m * shift}
