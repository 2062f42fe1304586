"""Singular vectors of the N=1 superconformal algebra from Jack superpolynomials.

The vector |chi^+_{r,s}> is the sum over Omega of
<E P_Gamma, Q_Omega> rho(P_Omega) |alpha_{-r,-s}>, with E replaced by D in the
Ramond sector.  Since E and D only act on the theta variables, their action is
organised by the power of the coupling (alpha_+^2 or alpha_+^2/2), each level
having rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .exactfield import FieldElement
from .fockspace import CftParams, FockVector, rho_map, virasoro_G, virasoro_L
from .sjack import c_norm, jack
from .superpartition import Superpartition, gamma_r_s_plus1, staircase_gamma
from .superpoly import FinitePoly, SymFunc, identify_symfunc, monomial_realize

KINDS = ("E", "D")


# ------------------------------------------------------------ E and D operators

def _pair_factor(g: FinitePoly, i: int, j: int, kind: str) -> FinitePoly:
    """(z_i z_j or z_i + z_j)/(z_i - z_j) d_i d_j g, 0-based indices."""
    h = g.theta_derivative((i + 1, j + 1))
    if h.is_zero():
        return h
    N = g.N
    if kind == "E":
        h = h * FinitePoly.z(N, i + 1) * FinitePoly.z(N, j + 1)
    else:
        h = h * (FinitePoly.z(N, i + 1) + FinitePoly.z(N, j + 1))
    return h.divide_linear(i, j)


def pair_operator_levels(f: FinitePoly, kind: str) -> dict[int, FinitePoly]:
    """Apply prod_{i<j} (1 + c K_ij d_i d_j) to ``f``; returns {k: coefficient of c^k}.

    Each division by (z_i - z_j) is exact on staircase inputs; otherwise an
    ArithmeticError propagates.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    levels = {0: f}
    for i, j in combinations(range(f.N), 2):
        new: dict[int, FinitePoly] = {}
        for k, g in levels.items():
            new[k] = new[k] + g if k in new else g
            h = _pair_factor(g, i, j, kind)
            if not h.is_zero():
                new[k + 1] = new[k + 1] + h if k + 1 in new else h
        levels = {k: g for k, g in new.items() if not g.is_zero()}
    _check_levels(f, levels, kind)
    return levels


def _check_levels(f, levels, kind):
    (deg0,) = f.z_degrees() or {0}
    (th0,) = f.theta_degrees() or {0}
    for k, g in levels.items():
        want = deg0 + k if kind == "E" else deg0
        if g.z_degrees() != {want} or g.theta_degrees() != {th0 - 2 * k}:
            raise AssertionError(f"degree bookkeeping failed at level {k}")


def _combine_levels(levels, coupling, N):
    out = FinitePoly(N)
    for k, g in levels.items():
        out = out + g.scale(coupling ** k)
    return out


def _default_coupling():
    u = FieldElement.gen("u")
    return u * u


def E_apply(r: int, f: FinitePoly, alpha_plus_sq=None) -> FinitePoly:
    """E(r; alpha_+) f, with alpha_+^2 = u^2 unless given."""
    if f.N != r:
        raise ValueError("E(r) acts on superpolynomials in r variables")
    c = _default_coupling() if alpha_plus_sq is None else alpha_plus_sq
    return _combine_levels(pair_operator_levels(f, "E"), c, r)


def D_apply(r: int, f: FinitePoly, alpha_plus_sq=None) -> FinitePoly:
    """D(r; alpha_+) f; the coupling is alpha_+^2/2."""
    if f.N != r:
        raise ValueError("D(r) acts on superpolynomials in r variables")
    c = _default_coupling() if alpha_plus_sq is None else alpha_plus_sq
    return _combine_levels(pair_operator_levels(f, "D"), c / 2, r)


# ---------------------------------------------------------- sJack expansion

def _triangular_key(sp: Superpartition):
    return (sp.degree(), sp.circledast().parts, sp.star().parts)


def expand_in_sjack(f: FinitePoly, N: int | None = None, alpha=None) -> dict:
    """Coefficients d with f = sum d_L i_N(P_L); symbolic in alpha unless ``alpha`` is given.

    ``f`` must have rational coefficients.  A nonzero residual raises ValueError.
    """
    N = f.N if N is None else N
    rem = dict(identify_symfunc(f, N).coeffs)
    rem = {k: FieldElement.const(v) for k, v in rem.items()}
    out = {}
    while rem:
        lam = max(rem, key=_triangular_key)
        c = rem.pop(lam)
        out[lam] = c
        for om, u in jack(lam).monomial_coeffs.items():
            if om == lam or om.length() > N:
                continue
            v = rem.get(om, 0) - c * u
            if v:
                rem[om] = v
            else:
                rem.pop(om, None)
    if alpha is not None:
        out = {k: _specialize(v, alpha) for k, v in out.items()}
    return out


def _specialize(x: FieldElement, alpha):
    if isinstance(alpha, FieldElement):
        return x.subs(alpha)
    return x.evaluate(alpha)


# ---------------------------------------------------------------- the report

@dataclass
class SingularVectorReport:
    r: int
    s: int
    sign: str
    sector: str
    gamma: Superpartition
    expansion: dict
    fock: FockVector
    checks: list = field(default_factory=list)
    norm_mode: str = "formula"

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(ok for _, ok in self.checks)

    def relative_coefficient(self, om: Superpartition):
        """expansion[om] / expansion[gamma]."""
        return self.expansion[om] / self.expansion[self.gamma]

    def to_json(self):
        keys = sorted(self.expansion, key=_triangular_key, reverse=True)
        return {
            "r": self.r, "s": self.s, "sign": self.sign, "sector": self.sector,
            "gamma": str(self.gamma),
            "expansion": [{"spart": str(k), "coeff": str(self.expansion[k])} for k in keys],
            "fock": self.fock.to_json(),
            "checks": [{"generator": g, "annihilated": ok} for g, ok in self.checks],
        }


def _setup(r: int, s: int, sign: str):
    if r * s <= 0:
        raise ValueError("need rs > 0")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    P = CftParams(r, s)
    if sign == "+":
        if r > s:
            raise ValueError("sign + needs r <= s")
        N, kappa, coupling, a, b = r, P.kappa_plus, P.alpha_plus ** 2, r, s
    else:
        if r < s:
            raise ValueError("sign - needs r >= s")
        N, kappa, coupling, a, b = s, P.kappa_minus, P.alpha_minus ** 2, s, r
    if P.sector == "NS":
        gamma, kind = staircase_gamma(a, b), "E"
    else:
        gamma, kind = gamma_r_s_plus1(a, b), "D"
        coupling = coupling / 2
    return P, N, kappa, coupling, gamma, kind


def _degree_ok(om: Superpartition, r, s, sector, N):
    n, m = om.degree()
    if m > N:
        return False
    if sector == "NS":
        return 2 * n == r * s - m
    return 2 * n == r * s


def build_chi(r: int, s: int, sign: str = "+", norm_mode: str = "formula") -> SingularVectorReport:
    P, N, kappa, coupling, gamma, kind = _setup(r, s, sign)
    levels = pair_operator_levels(monomial_realize(gamma, N), kind)
    expansion = {}
    for k, g in sorted(levels.items()):
        for om, d in expand_in_sjack(g, N).items():
            if not _degree_ok(om, r, s, P.sector, N):
                raise AssertionError(f"{om} violates the degree constraint")
            c = _norm(om, N, norm_mode)
            expansion[om] = coupling ** k * d.subs(kappa) * c.subs(kappa)
    expansion = {k: v for k, v in expansion.items() if not v.is_zero()}
    lam = P.alpha_rs(-r, -s)
    vec = FockVector(P.sector, lam, P.alpha0, {}, label=(r, s))
    for om, c in expansion.items():
        ps = SymFunc("powersum", {k: v.subs(kappa) for k, v in jack(om).powersum_coeffs.items()})
        vec = vec + rho_map(ps, P.sector, lam, P.alpha0).scale(c)
    return SingularVectorReport(r, s, sign, P.sector, gamma, expansion, vec.normalized(),
                                norm_mode=norm_mode)


def _norm(om, N, mode):
    if mode == "formula":
        return c_norm(om, N, "formula")
    if mode == "brute":
        brute = c_norm(om, N, "brute")
        formula = c_norm(om, N, "formula")
        if brute != formula:
            raise ArithmeticError(f"norm mismatch for {om} in {N} variables: {brute} vs {formula}")
        return brute
    raise ValueError(mode)


# -------------------------------------------------------------- verification

def verify_chi(report: SingularVectorReport) -> SingularVectorReport:
    """Fill ``report.checks`` with annihilation and grade results."""
    v = report.fock
    checks = []
    if v.is_zero():
        checks.append(("zero vector", False))
    eps = v.eps
    gens = [("L_1", lambda w: virasoro_L(1, w)), ("L_2", lambda w: virasoro_L(2, w))]
    if report.sector == "NS":
        gens += [("G_1/2", lambda w: virasoro_G(Fraction(1, 2), w)),
                 ("G_3/2", lambda w: virasoro_G(Fraction(3, 2), w))]
    else:
        gens += [("G_1", lambda w: virasoro_G(1, w))]
    for name, op in gens:
        checks.append((name, op(v).is_zero()))
    grade = Fraction(report.r * report.s, 2)
    P = CftParams(report.r, report.s)
    hw =P.h_lambda(v.lam) + (1 - 2 * eps) / 16
    l0 = virasoro_L(0, v)
    checks.append((f"L_0 grade {grade}", v.grades() <= {grade} and l0 == v.scale(hw + grade)))
    report.checks = checks
    return report
