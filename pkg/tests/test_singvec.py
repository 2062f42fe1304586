from fractions import Fraction

import pytest

from superjack.exactfield import FieldElement
from superjack.fockspace import CftParams, FockVector, rho_map
from superjack.singvec import (D_apply, E_apply, build_chi, expand_in_sjack, pair_operator_levels,
                               verify_chi)
from superjack.sjack import c_norm, jack
from superjack.superpartition import Superpartition
from superjack.superpoly import FinitePoly, monomial_realize

S = Superpartition.parse
u = FieldElement.gen("u")
a = FieldElement.gen("alpha")


def z(i, p=1):
    return FinitePoly.z(2, i, p)


TH12 = FinitePoly.theta(2, 1) * FinitePoly.theta(2, 2)


def p_two_vars(text):
    """P in two variables; alpha-free for the staircases used here."""
    f = jack(text).realize(2)
    assert all(c.is_constant() for c in f.terms.values())
    return f.map_coeffs(lambda c: c.constant_value())


@pytest.mark.parametrize("op", [E_apply, D_apply])
@pytest.mark.parametrize("text", ["(0;)", "(3;)", "(2;)"])
def test_r1_identity(op, text):
    f = monomial_realize(S(text), 1)
    assert op(1, f) == f.map_coeffs(lambda c: FieldElement.const(c, "u"))


@pytest.mark.parametrize("s", [2, 4, 6])
def test_E_on_two_variable_staircase(s):
    h = s // 2
    levels = pair_operator_levels(p_two_vars(f"({h},{h - 1};)"), "E")
    assert set(levels) == {0, 1}
    assert expand_in_sjack(levels[0], 2) == {S(f"({h},{h - 1};)"): 1}
    # coefficient of alpha_+^2 is -P_(;h,h)
    assert expand_in_sjack(levels[1], 2) == {S(f"(;{h},{h})"): -1}


def test_E_division_failure():
    with pytest.raises(ArithmeticError):
        E_apply(2, TH12)


def test_D_concrete_s3():
    f = TH12 * (z(1) - z(2)) * z(1) * z(2)
    got = D_apply(2, f)
    lift = lambda g: g.map_coeffs(lambda c: FieldElement.const(c, "u"))
    want = lift(f) - lift((z(1) + z(2)) * z(1) * z(2)).scale(u * u / 2)
    assert got == want


@pytest.mark.parametrize("s", [3, 5])
def test_D_on_two_variable_staircase(s):
    hi, lo = (s + 1) // 2, (s - 1) // 2
    levels = pair_operator_levels(p_two_vars(f"({hi},{lo};)"), "D")
    assert expand_in_sjack(levels[0], 2) == {S(f"({hi},{lo};)"): 1}
    assert expand_in_sjack(levels[1], 2) == {S(f"(;{hi},{lo})"): -1}


def test_expand_examples():
    assert expand_in_sjack(p_two_vars("(1,0;)"), 2) == {S("(1,0;)"): 1}
    assert expand_in_sjack(monomial_realize(S("(1;)"), 2)) == {S("(1;)"): 1, S("(0;1)"): -1 / (a + 1)}
    got = expand_in_sjack(monomial_realize(S("(1;)"), 2), alpha=Fraction(1))
    assert got == {S("(1;)"): 1, S("(0;1)"): Fraction(-1, 2)}


def test_expand_rejects_asymmetric():
    with pytest.raises(ValueError):
        expand_in_sjack(FinitePoly.theta(2, 1) * z(1))


@pytest.mark.parametrize("kind", ["E", "D"])
@pytest.mark.parametrize("text, N", [("(2,1;)", 2), ("(2,1,0;)", 3), ("(3,2,1;)", 3)])
def test_degree_action(kind, text, N):
    f = monomial_realize(S(text), N)
    levels = pair_operator_levels(f, kind)
    n = sum(S(text).antisym)
    for k, g in levels.items():
        assert g.theta_degrees() == {N - 2 * k}
        assert g.z_degrees() == {n + k if kind == "E" else n}


@pytest.mark.parametrize("r, s, sign", [(1, 3, "+"), (2, 2, "+"), (2, 3, "+"), (1, 2, "+"),
                                        (3, 1, "-"), (2, 1, "-"), (3, 3, "-")])
def test_verify(r, s, sign):
    rep = verify_chi(build_chi(r, s, sign))
    assert rep.passed, rep.checks
    assert (f"L_0 grade {Fraction(r * s, 2)}", True) in rep.checks


@pytest.mark.parametrize("r, s, sign", [(2, 4, "+"), (2, 3, "+"), (3, 3, "+")])
def test_expansion_degree_constraint(r, s, sign):
    rep = build_chi(r, s, sign)
    for om in rep.expansion:
        n, m = om.degree()
        assert m <= r
        assert 2 * n == (r * s - m if rep.sector == "NS" else r * s)


def test_scale_invariance():
    rep = build_chi(2, 3)
    base = [ok for _, ok in verify_chi(rep).checks]
    for c in (u ** 3 - 2, 1 / (u + 5), FieldElement.const(-7, "u")):
        rep.fock = rep.fock.scale(c)
        assert [ok for _, ok in verify_chi(rep).checks] == base


def test_zero_vector_flagged():
    rep = build_chi(1, 3)
    rep.fock = rep.fock.scale(0)
    rep = verify_chi(rep)
    assert ("zero vector", False) in rep.checks
    assert not rep.passed


def test_bad_arguments():
    with pytest.raises(ValueError):
        build_chi(3, 1, "+")
    with pytest.raises(ValueError):
        build_chi(1, 3, "-")
    with pytest.raises(ValueError):
        build_chi(0, 3)


def test_brute_norm_mode_agrees():
    rep = build_chi(2, 2, norm_mode="brute")
    assert rep.fock == build_chi(2, 2).fock


def test_wrong_normalization_breaks_highest_weight():
    # dropping the norm factors entirely must not give a singular vector
    good = build_chi(2, 4)
    lam, al0 = good.fock.lam, good.fock.alpha0
    vec = FockVector("NS", lam, al0, {})
    for om, c in good.expansion.items():
        k = CftParams(2, 4).kappa_plus
        ps = jack(om).powersum().map_coeffs(lambda x: x.subs(k))
        vec = vec + rho_map(ps, "NS", lam, al0).scale(c / c_norm(om, 2).subs(k))
    good.fock = vec.normalized()
    assert not verify_chi(good).passed
