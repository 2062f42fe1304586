from fractions import Fraction

import pytest

from superjack.clustering import (B_apply, RatFun, _ctx, clustering_check, conjecture_b1_verify,
                                  cross_check_Bk, jack_at_minus3, pfaffian,
                                  pfaffian_identity_check, pfaffian_identity_report)
from superjack.exactfield import FieldElement, PoleError
from superjack.superpartition import Partition, Superpartition, mu_partition
from superjack.superpoly import FinitePoly, monomial_realize, vandermonde

S = Superpartition.parse
t = FieldElement.gen("t")


def z(N, i, p=1):
    return FinitePoly.z(N, i, p)


def lift(f, var="t"):
    return f.map_coeffs(lambda c: FieldElement.const(c, var))


@pytest.mark.parametrize("a", [1, 2, 4])
def test_B_l1(a):
    B = B_apply(1, "NS", a)
    assert set(B.terms_by_k) == {0}
    assert B.terms_by_k[0] == monomial_realize(S(f"({a - 1};)"), 1)


def test_B_l2_ns():
    th = FinitePoly.theta(2, 1) * FinitePoly.theta(2, 2)
    got = B_apply(2, "NS", 2).total()
    assert got == lift(th * (z(2, 1) - z(2, 2))) - lift(z(2, 1) * z(2, 2)).scale(t)


@pytest.mark.parametrize("l", range(1, 6))
@pytest.mark.parametrize("sector", ["NS", "R"])
def test_theta_degrees(l, sector):
    assert B_apply(l, sector, l).theta_degrees_ok()


def test_pfaffian_small():
    x = FieldElement.gen("alpha")
    assert pfaffian([[0, x], [-x, 0]]) == x
    m = [[0, 2, 3, 5], [-2, 0, 7, 11], [-3, -7, 0, 13], [-5, -11, -13, 0]]
    assert pfaffian(m) == 2 * 13 - 3 * 11 + 5 * 7
    with pytest.raises(ValueError):
        pfaffian([[0]])


def test_pfaffian_ratfun_2x2():
    z1, z2 = _ctx(2).gens()
    e = RatFun(z1 * z2, z1 - z2)
    assert pfaffian([[RatFun(z1 * 0), e], [-e, RatFun(z1 * 0)]]) == e


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("sector", ["NS", "R"])
def test_pfaffian_identity(n, sector):
    assert pfaffian_identity_check(n, sector)
    assert pfaffian_identity_report(n, sector).sign == 1


def test_pfaffian_n1_by_hand():
    assert jack_at_minus3(Partition((1, 1)), 2) == z(2, 1) * z(2, 2)
    assert jack_at_minus3(Partition((1,)), 2) == z(2, 1) + z(2, 2)


def test_jack_minus3():
    f = jack_at_minus3(mu_partition("NS", 2), 4)
    assert not f.is_zero()
    assert all(isinstance(c, Fraction) for c in f.terms.values())
    with pytest.raises(ValueError):
        jack_at_minus3(Partition((2, 2, 2)), 3)


def test_jack_minus3_pole_reported():
    sp = S("(0;2,1,1)")
    with pytest.raises(ValueError):
        jack_at_minus3(sp, 4)
    with pytest.raises(PoleError):
        jack_at_minus3(sp, 4, check_admissible=False)


def test_clustering_examples():
    assert clustering_check(vandermonde(3))
    assert not clustering_check(z(3, 1) + z(3, 2) + z(3, 3))
    with pytest.raises(ValueError):
        clustering_check(z(2, 1))


@pytest.mark.parametrize("l", [3, 4, 5])
@pytest.mark.parametrize("sector", ["NS", "R"])
def test_B_clusters(l, sector):
    assert clustering_check(B_apply(l, sector, l).total())


@pytest.mark.parametrize("l, a", [(2, 2), (3, 3), (3, 4), (4, 4)])
@pytest.mark.parametrize("sector", ["NS", "R"])
def test_closed_form_route(l, a, sector):
    cross_check_Bk(l, sector, a)


@pytest.mark.parametrize("a, l", [(2, 2), (3, 2), (3, 3), (4, 4)])
def test_conjecture_b1(a, l):
    res = conjecture_b1_verify(a, l)
    assert res.holds and res.asserted


def test_conjecture_b1_a2():
    res = conjecture_b1_verify(2, 2)
    assert {k: set(v) for k, v in res.rhs.items()} == {0: {S("(1,0;)")}, 1: {S("(;1,1)")}}


def test_conjecture_b1_r_sector_reported_only():
    res = conjecture_b1_verify(3, 3, "R")
    assert not res.asserted
    assert res.to_json()["asserted"] is False


def test_bad_sector():
    with pytest.raises(ValueError):
        B_apply(2, "XX", 2)
