"""Jack superpolynomials P_Lambda^(alpha).

Two constructions are provided.

* ``gram_schmidt`` orthogonalizes the monomial basis of a whole bidegree in
  power-sum coordinates, where the combinatorial pairing is diagonal.
* ``interval_solve`` handles large bidegrees: for many positive integer values
  of alpha it solves the triangular orthogonality system on the dominance
  interval below Lambda, then reconstructs each coefficient as a rational
  function of alpha.

Both are exact; they are cross-checked against each other in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

import flint

from .exactfield import FieldElement, PoleError, ReconstructionError, rational_interpolate, to_fmpq, to_fraction
from .innerproduct import pairing_rational, powersum_norm, sigma, sp_z, unit_pairing
from .superpartition import (Partition, Superpartition, box_set_B, cell_stats, dominance_leq,
                             gamma_bar, superpartitions)
from .superpoly import (FinitePoly, SymFunc, monomial_realize, transition_m_to_p,
                        transition_p_to_m, vandermonde)

GS_MAX_DIMENSION = 60


def _alpha():
    return FieldElement.gen("alpha")


@dataclass
class JackRecord:
    spart: Superpartition
    monomial_coeffs: dict
    powersum_coeffs: dict
    b: FieldElement
    method: str = "gram_schmidt"
    valid_at: list = field(default_factory=list)

    def monomial(self) -> SymFunc:
        return SymFunc("monomial", self.monomial_coeffs)

    def powersum(self) -> SymFunc:
        return SymFunc("powersum", self.powersum_coeffs)

    def dual(self, basis: str = "monomial") -> SymFunc:
        f = self.monomial() if basis == "monomial" else self.powersum()
        return f.scale(self.b)

    def specialize(self, value, N: int | None = None) -> dict:
        """Monomial coefficients at alpha = value, keeping only parts with length <= N."""
        out = {}
        for om, c in self.monomial_coeffs.items():
            if N is not None and om.length() > N:
                continue
            v = c.evaluate(value)
            if v:
                out[om] = v
        self.valid_at.append(to_fraction(to_fmpq(value)))
        return out

    def realize(self, N: int, alpha=None) -> FinitePoly:
        """i_N(P_Lambda) with symbolic coefficients, or numeric at ``alpha``."""
        coeffs = self.monomial_coeffs if alpha is None else self.specialize(alpha, N)
        out = FinitePoly(N)
        for om, c in coeffs.items():
            if om.length() <= N:
                out = out + monomial_realize(om, N, c)
        return out


# ------------------------------------------------------------------ weights

def _weights(basis, alpha):
    return [powersum_norm(sp, alpha) for sp in basis]


def _mat_row(mat, i, d):
    return [to_fraction(mat[i, j]) for j in range(d)]


# --------------------------------------------------------- Gram-Schmidt route

def order_key(kind: str):
    if kind == "circ_star":
        return lambda sp: (sp.circledast().parts, sp.star().parts)
    if kind == "star_circ":
        return lambda sp: (sp.star().parts, sp.circledast().parts)
    raise ValueError(kind)


@lru_cache(maxsize=None)
def gram_schmidt(n: int, m: int, order: str = "circ_star") -> dict:
    """All Jack superpolynomials of bidegree (n|m) by Gram-Schmidt from the
    bottom of a linear extension of dominance.  Returns {Lambda: JackRecord}."""
    basis, minv = transition_m_to_p(n, m)
    _, mat = transition_p_to_m(n, m)
    d = len(basis)
    idx = {sp: i for i, sp in enumerate(basis)}
    a = _alpha()
    w = _weights(basis, a)
    ordered = sorted(basis, key=order_key(order), reverse=True)
    done = []  # (vector, norm) for processed elements, lowest first
    out = {}
    for lam in reversed(ordered):
        mrow = _mat_row(minv, idx[lam], d)
        vec = [FieldElement.const(x) for x in mrow]
        for pvec, norm, _ in done:
            ip = 0
            for j in range(d):
                if mrow[j] and not pvec[j].is_zero():
                    ip = pvec[j] * w[j] * mrow[j] + ip
            if ip:
                c = ip / norm
                vec = [x - c * y for x, y in zip(vec, pvec)]
        norm = 0
        for j in range(d):
            if not vec[j].is_zero():
                norm = vec[j] * vec[j] * w[j] + norm
        done.append((vec, norm, lam))
        pcoef = {basis[j]: vec[j] for j in range(d) if not vec[j].is_zero()}
        mcoef = {}
        for j in range(d):
            acc = 0
            for i in range(d):
                x = mat[i, j]
                if x != 0 and not vec[i].is_zero():
                    acc = vec[i] * to_fraction(x) + acc
            if acc:
                mcoef[basis[j]] = acc
        for om in mcoef:
            if not dominance_leq(om, lam):
                raise ArithmeticError(f"triangularity fails: {om} in P{lam}")
        if mcoef.get(lam) != 1:
            raise ArithmeticError(f"P{lam} is not monic")
        out[lam] = JackRecord(lam, mcoef, pcoef, b_coeff(lam), "gram_schmidt")
    return out


# ------------------------------------------------------ interpolation route

def lower_interval(lam: Superpartition):
    return [om for om in superpartitions(*lam.degree()) if dominance_leq(om, lam)]


class _IntervalSystem:
    """Orthogonality system for P_Lambda on the interval below Lambda."""

    def __init__(self, lam: Superpartition):
        self.lam = lam
        n, m = lam.degree()
        basis, minv = transition_m_to_p(n, m)
        self.basis = basis
        self.interval = lower_interval(lam)
        rows = [basis.index(om) for om in self.interval]
        d, k = len(basis), len(rows)
        self.A = flint.fmpq_mat(k, d)
        for r, i in enumerate(rows):
            for j in range(d):
                x = minv[i, j]
                if x != 0:
                    self.A[r, j] = x
        self.At = self.A.transpose()
        self.sig = sigma(m)
        self.zs = [sp_z(sp) for sp in basis]
        self.lens = [sp.length() for sp in basis]

    def solve_at(self, x: int):
        """Monomial coefficients (excluding the leading 1) at alpha = x."""
        d = len(self.basis)
        k = len(self.interval)
        aw = flint.fmpq_mat(self.A)
        for j in range(d):
            wj = self.sig * self.zs[j] * flint.fmpq(x) ** self.lens[j]
            for r in range(k):
                if aw[r, j] != 0:
                    aw[r, j] = aw[r, j] * wj
        G = aw * self.At
        if k == 1:
            return []
        lhs = flint.fmpq_mat(k - 1, k - 1)
        rhs = flint.fmpq_mat(k - 1, 1)
        for gi in range(1, k):
            rhs[gi - 1, 0] = -G[0, gi]
            for oi in range(1, k):
                lhs[gi - 1, oi - 1] = G[oi, gi]
        sol = lhs.solve(rhs)
        return [sol[i, 0] for i in range(k - 1)]


def interval_solve(lam: Superpartition, start_bound: int = 3, holdout: int = 2) -> JackRecord:
    sysm = _IntervalSystem(lam)
    k = len(sysm.interval)
    samples = {}
    coeffs = {}
    pending = list(range(k - 1))
    bound = start_bound
    while pending:
        need = 2 * bound + 1 + holdout
        for x in range(1, need + 1):
            if x not in samples:
                samples[x] = sysm.solve_at(x)
        xs = list(range(1, need + 1))
        still = []
        for i in pending:
            try:
                coeffs[i] = rational_interpolate(xs, [samples[x][i] for x in xs], bound,
                                                 "alpha", holdout)
            except ReconstructionError:
                still.append(i)
        pending = still
        bound += 2
        if bound > 80:
            raise ReconstructionError(f"coefficient degrees of P{lam} exceed the search range")
    mcoef = {lam: FieldElement.const(1)}
    for i in range(k - 1):
        if not coeffs[i].is_zero():
            mcoef[sysm.interval[i + 1]] = coeffs[i]
    pcoef = _monomial_to_powersum(mcoef, lam.degree())
    return JackRecord(lam, mcoef, pcoef, b_coeff(lam), "interval_solve")


def _monomial_to_powersum(mcoef: dict, deg) -> dict:
    basis, minv = transition_m_to_p(*deg)
    idx = {sp: i for i, sp in enumerate(basis)}
    out = {}
    for om, c in mcoef.items():
        i = idx[om]
        for j, sp in enumerate(basis):
            x = minv[i, j]
            if x != 0:
                v = c * to_fraction(x)
                out[sp] = out[sp] + v if sp in out else v
    return {k: v for k, v in out.items() if not v.is_zero()}


# ---------------------------------------------------------------- interface

_CACHE: dict = {}


def jack(lam, method: str = "auto") -> JackRecord:
    """P_Lambda^(alpha) with symbolic coefficients."""
    if isinstance(lam, str):
        lam = Superpartition.parse(lam)
    if isinstance(lam, Partition):
        lam = Superpartition((), lam.parts)
    key = (lam, method)
    if key in _CACHE:
        return _CACHE[key]
    n, m = lam.degree()
    if method == "auto":
        method = "gram_schmidt" if len(superpartitions(n, m)) <= GS_MAX_DIMENSION else "interval_solve"
    if method == "gram_schmidt":
        rec = gram_schmidt(n, m)[lam]
    elif method == "interval_solve":
        rec = interval_solve(lam)
    else:
        raise ValueError(f"unknown method {method!r}")
    _CACHE[key] = rec
    _CACHE[(lam, "auto")] = _CACHE.get((lam, "auto"), rec)
    return rec


def convert(f: SymFunc, target: str, alpha=None) -> SymFunc:
    """Conversions to and from the Jack basis (symbolic alpha only)."""
    from .superpoly import basis_convert
    if f.basis == "sjack":
        out = SymFunc(target if target != "sjack" else "monomial", {})
        for lam, c in f.coeffs.items():
            rec = jack(lam)
            g = rec.monomial() if target == "monomial" else rec.powersum()
            out = out + g.scale(c)
        return out if target != "sjack" else f
    if target != "sjack":
        raise ValueError(target)
    mono = basis_convert(f, "monomial")
    rem = dict(mono.coeffs)
    out = {}
    while rem:
        lam = max(rem, key=lambda sp: (sp.degree(), sp.circledast().parts, sp.star().parts))
        c = rem[lam]
        out[lam] = c
        for om, u in jack(lam).monomial_coeffs.items():
            v = rem.get(om, 0) - c * u
            if v:
                rem[om] = v
            else:
                rem.pop(om, None)
    return SymFunc("sjack", out)


# ------------------------------------------------------------ norm formulas

def b_coeff(lam: Superpartition) -> FieldElement:
    """(-1)^{binom(m,2)} alpha^{-m} prod_{s in B} (alpha*at + l + 1)/(alpha*a + lt + alpha)."""
    a = _alpha()
    m = lam.m
    out = FieldElement.const(sigma(m)) / a ** m
    st, ci = lam.star(), lam.circledast()
    for cell in sorted(box_set_B(lam)):
        cs = cell_stats(st, ci, cell)
        out = out * (a * cs.tilde_arm + cs.leg + 1) / (a * cs.arm + cs.tilde_leg + a)
    return out


def c_partition(lam: Partition, N: int, a=None) -> FieldElement:
    a = _alpha() if a is None else a
    out = FieldElement.const(1) if isinstance(a, FieldElement) else Fraction(1)
    for i, j in lam.cells():
        ap, lp = j - 1, i - 1
        out = out * (N + ap * a - lp) / (N + (ap + 1) * a - lp - 1)
    return out


def c_formula(lam: Superpartition, N: int, binomial: bool = True) -> FieldElement:
    """Closed-form c_Lambda(alpha; N).

    With ``binomial`` the factor binom(N, m)^(-1) is included, as in the
    conjectured form.  Without it the result matches the constant-term
    definition (see ``c_norm``).
    """
    a = _alpha()
    m = lam.m
    if m > N:
        raise ValueError("fermionic degree exceeds N")
    out = c_partition(lam.star(), N, a) / a ** m
    if binomial:
        out = out / comb(N, m)
    st = set(lam.star().cells())
    for i, j in lam.circledast().cells():
        if (i, j) not in st:
            out = out * (N + a * (j - 1) - (i - 1))
    return out


def _c_degree_bound(lam: Superpartition) -> int:
    """Numerator/denominator degree bound of c_Lambda in alpha."""
    return lam.star().size() + lam.m + 1


def c_brute_samples(lam: Superpartition, N: int, ks) -> list:
    """<P, Q>_N / <1, 1>_N evaluated by constant terms at alpha = 1/k."""
    rec = jack(lam)
    out = []
    for k in ks:
        a = Fraction(1, k)
        P = rec.realize(N, a)
        val = Fraction(_ct(P, P, N, k)) * rec.b.evaluate(a) / unit_pairing(N, k)
        out.append((k, val))
    return out


def _ct(f, g, N, k):
    from .innerproduct import ct_pairing
    return ct_pairing(f, g, N, k)


def c_norm(lam, N: int, mode: str = "formula", degree_bound: int | None = None) -> FieldElement:
    if isinstance(lam, str):
        lam = Superpartition.parse(lam)
    if mode == "formula":
        return c_formula(lam, N, binomial=False)
    if mode == "conjectured":
        return c_formula(lam, N, binomial=True)
    if mode != "brute":
        raise ValueError(mode)
    if N < lam.length():
        raise ValueError("brute mode needs N >= length")
    D = _c_degree_bound(lam) if degree_bound is None else degree_bound
    samples = c_brute_samples(lam, N, range(1, 2 * D + 3))
    from .exactfield import reconstruct
    return reconstruct(samples, D)


def reduction_check(a: int, l: int) -> bool:
    """P_{Gamma_bar(a,l)} in l variables equals theta_1..theta_l Delta m_{((a-l)^l)}."""
    rec = jack(gamma_bar(a, l))
    got = rec.realize(l)
    if any(not c.is_constant() for c in got.terms.values()):
        return False
    k = a - l
    th = FinitePoly.one(l)
    for i in range(1, l + 1):
        th = th * FinitePoly.theta(l, i)
    zk = FinitePoly.one(l)
    for i in range(1, l + 1):
        zk = zk * FinitePoly.z(l, i, k)
    expected = th * vandermonde(l) * zk
    return got == expected.map_coeffs(FieldElement.const)


def cauchy_check(n: int, m: int) -> bool:
    """sum_L P_L(z) Q_L(y) against the truncated Cauchy kernel, in power sums."""
    from .innerproduct import cauchy_kernel_truncation
    kernel = cauchy_kernel_truncation(n, m)
    basis = superpartitions(n, m)
    total = {}
    for lam in basis:
        rec = jack(lam)
        ps = rec.powersum_coeffs
        for mu, x in ps.items():
            for nu, y in ps.items():
                v = rec.b * x * y
                total[(mu, nu)] = total[(mu, nu)] + v if (mu, nu) in total else v
    for mu in basis:
        for nu in basis:
            want = kernel[mu] if mu == nu else 0
            if total.get((mu, nu), 0) != want:
                return False
    return True
