"""The B(l;t) operator, pfaffian identities and Jack superpolynomials at alpha = -3.

B(l;t) is E(l; sqrt t) in the NS sector and D(l; sqrt(2t)) in the R sector, so
both are the pair operator of :mod:`superjack.singvec` with coupling t.  Its
action on the staircase m_{Gamma_bar} is compared with sums of P^(-3) over the
sets X_k generated by top moves.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

import flint

from .exactfield import FieldElement, PoleError
from .sjack import jack
from .singvec import pair_operator_levels
from .superpartition import (Partition, Superpartition, build_Xk, gamma_bar, is_admissible_22,
                             is_super_admissible_22, mu_partition)
from .superpoly import FinitePoly, monomial_realize, vandermonde

SECTOR_KIND = {"NS": "E", "R": "D"}


def _sector(sector: str) -> str:
    s = sector.upper()
    if s not in SECTOR_KIND:
        raise ValueError(f"unknown sector {sector!r}")
    return s


# ------------------------------------------------------------------ B(l;t)

@dataclass
class BExpansion:
    """B(l;t) m_{Gamma_bar} = sum_k (-t)^k terms_by_k[k]."""

    l: int
    sector: str
    a: int
    terms_by_k: dict

    def total(self, t=None) -> FinitePoly:
        t = FieldElement.gen("t") if t is None else t
        out = FinitePoly(self.l)
        for k, g in self.terms_by_k.items():
            out = out + g.scale((-t) ** k)
        return out

    def theta_degrees_ok(self) -> bool:
        return all(g.theta_degrees() == {self.l - 2 * k} for k, g in self.terms_by_k.items())


def B_apply(l: int, sector: str, a: int) -> BExpansion:
    sector = _sector(sector)
    if not a >= l >= 1:
        raise ValueError("need a >= l >= 1")
    f = monomial_realize(gamma_bar(a, l), l)
    levels = pair_operator_levels(f, SECTOR_KIND[sector])
    terms = {k: g.scale(-1 if k % 2 else 1) for k, g in levels.items()}
    return BExpansion(l, sector, a, terms)


# --------------------------------------------------------------- pfaffians

class RatFun:
    """Reduced quotient of two fmpq_mpoly elements."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.context().from_dict({(0,) * num.context().nvars(): 1})
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if g != 1:
            num, den = num / g, den / g
        lc = den.leading_coefficient()
        self.num, self.den = num / lc, den / lc

    def __add__(self, other):
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, RatFun):
            return RatFun(self.num * other.num, self.den * other.den)
        return RatFun(self.num * other, self.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        return self.num * other.den == other.num * self.den

    def is_polynomial(self) -> bool:
        return self.den == 1


def pfaffian(M):
    """Pfaffian of an antisymmetric matrix, expanded along the first row."""
    n = len(M)
    if n % 2:
        raise ValueError("pfaffian needs an even dimension")
    if n == 0:
        return 1
    total = None
    for j in range(1, n):
        keep = [i for i in range(1, n) if i != j]
        minor = [[M[p][q] for q in keep] for p in keep]
        term = M[0][j] * pfaffian(minor)
        if j % 2 == 0:
            term = -term
        total = term if total is None else total + term
    return total


def _ctx(N):
    return flint.fmpq_mpoly_ctx.get(("z", N), "lex")


def kernel_matrix(sector: str, idx, N: int):
    """(z_i z_j)/(z_i - z_j) (NS) or (z_i + z_j)/(z_i - z_j) (R) over the index list."""
    sector = _sector(sector)
    z = _ctx(N).gens()
    n = len(idx)
    M = [[None] * n for _ in range(n)]
    zero = RatFun(z[0] * 0)
    for p in range(n):
        M[p][p] = zero
        for q in range(p + 1, n):
            i, j = idx[p], idx[q]
            top = z[i] * z[j] if sector == "NS" else z[i] + z[j]
            M[p][q] = RatFun(top, z[i] - z[j])
            M[q][p] = -M[p][q]
    return M


def to_mpoly(f: FinitePoly):
    if any(m for _, m in f.terms):
        raise ValueError("expected a theta-free polynomial")
    out = {}
    for (e, _), c in f.terms.items():
        c = Fraction(c)
        out[e] = flint.fmpq(c.numerator, c.denominator)
    return _ctx(f.N).from_dict(out)


def from_mpoly(p, N: int) -> FinitePoly:
    return FinitePoly(N, {(tuple(e), 0): Fraction(int(c.p), int(c.q)) for e, c in p.to_dict().items()})


@dataclass
class PfaffianReport:
    n: int
    sector: str
    sign: int  # +1 identity holds, -1 holds up to a global sign, 0 fails

    @property
    def holds(self) -> bool:
        return self.sign == 1


def pfaffian_identity_report(n: int, sector: str) -> PfaffianReport:
    sector = _sector(sector)
    if n < 1:
        raise ValueError("n >= 1")
    N = 2 * n
    pf = pfaffian(kernel_matrix(sector, list(range(N)), N))
    lhs = pf * RatFun(to_mpoly(vandermonde(N)))
    rhs = to_mpoly(jack_at_minus3(mu_partition(sector, n), N))
    if not lhs.is_polynomial():
        return PfaffianReport(n, sector, 0)
    sign = 1 if lhs.num == rhs else -1 if lhs.num == -rhs else 0
    return PfaffianReport(n, sector, sign)


def pfaffian_identity_check(n: int, sector: str) -> bool:
    return pfaffian_identity_report(n, sector).holds


# ------------------------------------------------------------ alpha = -3

def jack_at_minus3(lam, N: int, check_admissible: bool = True) -> FinitePoly:
    """P_lam^(-3) in N variables via the symbolic record; PoleError on a pole."""
    if isinstance(lam, str):
        lam = Superpartition.parse(lam)
    if check_admissible:
        ok = (is_admissible_22(lam.parts, N) if isinstance(lam, Partition)
              else is_super_admissible_22(lam, N))
        if not ok:
            raise ValueError(f"{lam} is not (2,2,{N})-admissible")
    rec = jack(lam)
    try:
        return rec.realize(N, Fraction(-3))
    except PoleError as exc:
        raise PoleError(f"P_{lam} has a pole at alpha=-3 in {N} variables") from exc


def clustering_check(f: FinitePoly, N: int | None = None) -> bool:
    """True when f vanishes identically once any three z variables coincide."""
    N = f.N if N is None else N
    if N < 3:
        raise ValueError("need at least three variables")
    return all(f.identify_variables(list(c)).is_zero() for c in combinations(range(N), 3))


# ----------------------------------------------------------- closed form

def closed_form_component(l: int, sector: str, a: int, k: int) -> FinitePoly:
    """Coefficient of (-t)^k theta_1..theta_{l-2k} in B(l;t) m_{Gamma_bar}, from P^(-3)_{mu[k]}."""
    sector = _sector(sector)
    head = l - 2 * k
    out = FinitePoly.one(l)
    for i in range(head):
        for j in range(i + 1, l):
            out = out * (FinitePoly.z(l, i + 1) - FinitePoly.z(l, j + 1))
    for i in range(l):
        out = out * FinitePoly.z(l, i + 1, a - l)
    if k:
        mu = jack_at_minus3(mu_partition(sector, k), 2 * k)
        shifted = FinitePoly(l, {((0,) * head + e, 0): c for (e, _), c in mu.terms.items()})
        out = out * shifted
    return out


def cross_check_Bk(l: int, sector: str, a: int) -> BExpansion:
    """Direct operator action against the closed form, component by component.

    The direct result must be symmetric, so the theta_1..theta_{l-2k}
    component determines each B_k.  Raises AssertionError on disagreement.
    """
    B = B_apply(l, sector, a)
    for k, g in B.terms_by_k.items():
        if not g.is_symmetric():
            raise AssertionError(f"B_{k} is not symmetric")
        mask = (1 << (l - 2 * k)) - 1
        got = g.theta_component(mask)
        want = closed_form_component(l, sector, a, k)
        want = FinitePoly(l, {(e, mask): c for (e, _), c in want.terms.items()})
        if got != want:
            raise AssertionError(f"closed form disagrees for l={l}, k={k}, {sector}")
    return B


# ---------------------------------------------------------- the conjecture

@dataclass
class B1Result:
    a: int
    l: int
    sector: str
    holds: bool
    rhs: dict = field(default_factory=dict)  # k -> sorted list of superpartitions
    mismatched_k: list = field(default_factory=list)

    @property
    def asserted(self) -> bool:
        return self.sector == "NS"

    def to_json(self):
        return {"a": self.a, "l": self.l, "sector": self.sector, "holds": self.holds,
                "asserted": self.asserted, "mismatched_k": self.mismatched_k,
                "rhs": {str(k): [str(x) for x in v] for k, v in self.rhs.items()}}


def conjecture_b1_verify(a: int, l: int, sector: str = "NS", max_l: int = 6) -> B1Result:
    """B(l,t) m_{Gamma_bar} against sum_k (-t)^k sum_{X_k} P^(-3), in l variables."""
    sector = _sector(sector)
    if l > max_l:
        raise ValueError(f"l > {max_l}")
    B = B_apply(l, sector, a)
    gam = gamma_bar(a, l)
    rhs, bad = {}, []
    for k in range(l // 2 + 1):
        X = sorted(build_Xk(gam, k), key=lambda sp: (sp.circledast().parts, sp.star().parts),
                   reverse=True)
        for sp in X:
            if not is_super_admissible_22(sp, l):
                raise AssertionError(f"{sp} in X_{k} is not (2,2,{l})-admissible")
        rhs[k] = X
        total = FinitePoly(l)
        for sp in X:
            total = total + jack_at_minus3(sp, l)
        if total != B.terms_by_k.get(k, FinitePoly(l)):
            bad.append(k)
    return B1Result(a, l, sector, not bad, rhs, bad)
