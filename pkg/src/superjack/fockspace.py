"""Free boson and free fermion Fock modules, and the super-Virasoro generators.

States are normal-ordered monomials
``a_{-n1} ... a_{-nk} b_{-r1} ... b_{-rj} |lam>`` with ``n1 >= ... >= nk > 0``
and ``r1 > ... > rj``.  In the Ramond sector the fermionic zero mode is
represented by ``b_0`` itself: the monomial with a trailing ``0`` stands for
``b_0 |lam>``, which equals ``b_0^- |lam> / sqrt(2)``.  This keeps every
coefficient in Q(u).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .exactfield import FieldElement
from .superpartition import partitions

HALF = Fraction(1, 2)


def _u():
    return FieldElement.gen("u")


# ---------------------------------------------------------------- parameters

@dataclass(frozen=True)
class CftParams:
    """Coulomb-gas data as functions of u, where t = u^2."""

    r: int
    s: int
    u: FieldElement = field(default_factory=_u)

    @property
    def sector(self) -> str:
        return "NS" if (self.r + self.s) % 2 == 0 else "R"

    @property
    def eps(self) -> Fraction:
        return HALF if self.sector == "NS" else Fraction(0)

    @property
    def t(self):
        return self.u * self.u

    @property
    def alpha_plus(self):
        return self.u

    @property
    def alpha_minus(self):
        return -1 / self.u

    @property
    def alpha0(self):
        return self.alpha_plus + self.alpha_minus

    @property
    def kappa_plus(self):
        return 2 / (self.alpha0 * self.alpha_plus)

    @property
    def kappa_minus(self):
        return 2 / (self.alpha0 * self.alpha_minus)

    @property
    def central_charge(self):
        return Fraction(3, 2) - 3 * self.alpha0 * self.alpha0

    def alpha_rs(self, r: int, s: int):
        return Fraction(1 - r, 2) * self.alpha_plus + Fraction(1 - s, 2) * self.alpha_minus

    def h_lambda(self, lam):
        return (lam * lam - self.alpha0 * lam) / 2

    def h_rs(self, r: int | None = None, s: int | None = None):
        """Kac-table dimension, including the 1/32 sector term."""
        r = self.r if r is None else r
        s = self.s if s is None else s
        t = self.t
        out = Fraction(r * r - 1, 8) * t + Fraction(s * s - 1, 8) / t + Fraction(1 - r * s, 4)
        return out + Fraction(1 - (-1) ** (r + s), 32)

    def h_rs_fock(self, r: int | None = None, s: int | None = None):
        """(alpha_rs^2 - alpha0 alpha_rs)/2, the convention without the sector term."""
        r = self.r if r is None else r
        s = self.s if s is None else s
        return self.h_lambda(self.alpha_rs(r, s))

    def central_charge_t(self):
        t = self.t
        return Fraction(15, 2) - 3 * (t + 1 / t)


def cft_params(r: int, s: int) -> CftParams:
    if r * s <= 0:
        raise ValueError("need rs > 0")
    return CftParams(r, s)


# ------------------------------------------------------------------ monomials

@dataclass(frozen=True)
class ModeMonomial:
    """bosons: magnitudes n of a_{-n}, descending; fermions: magnitudes of b_{-r}, strictly descending."""

    bosons: tuple = ()
    fermions: tuple = ()

    @property
    def grade(self) -> Fraction:
        return Fraction(sum(self.bosons)) + sum(self.fermions, Fraction(0))

    def key(self):
        """Canonical display order."""
        return (len(self.fermions), tuple(-f for f in self.fermions), tuple(sorted(self.bosons)))

    def __str__(self):
        parts = [f"b_{{-{_fmt(f)}}}" if f else "b_0" for f in self.fermions]
        parts += [f"a_{{-{n}}}" for n in self.bosons]
        return " ".join(parts) if parts else "1"

    def to_json(self):
        return {"bosons": [-n for n in self.bosons], "fermions": [_fmt(-f) if f else "0" for f in self.fermions]}


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ------------------------------------------------------------------- vectors

class FockVector:
    """Sparse combination of mode monomials on |lam> in a given sector."""

    __slots__ = ("sector", "lam", "alpha0", "terms", "label")

    def __init__(self, sector: str, lam, alpha0, terms=None, label=None):
        if sector not in ("NS", "R"):
            raise ValueError(sector)
        self.sector = sector
        self.lam = lam
        self.alpha0 = alpha0
        self.label = label
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def vacuum(cls, sector, lam, alpha0, label=None):
        return cls(sector, lam, alpha0, {ModeMonomial(): 1}, label)

    def like(self, terms) -> "FockVector":
        return FockVector(self.sector, self.lam, self.alpha0, terms, self.label)

    @property
    def eps(self):
        return HALF if self.sector == "NS" else Fraction(0)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return self.like(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return self.like({k: c * v for k, v in self.terms.items()})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def grades(self) -> set:
        return {k.grade for k in self.terms}

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].key())

    def leading(self):
        return self.sorted_terms()[0] if self.terms else None

    def normalized(self) -> "FockVector":
        lead = self.leading()
        return self if lead is None else self.scale(1 / lead[1])

    def coefficient(self, bosons=(), fermions=()):
        key = ModeMonomial(tuple(sorted(bosons, reverse=True)),
                           tuple(sorted((Fraction(f) for f in fermions), reverse=True)))
        return self.terms.get(key, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({v})*{k}" for k, v in self.sorted_terms())

    def to_json(self):
        return {"sector": self.sector,
                "terms": [dict(k.to_json(), coeff=str(v)) for k, v in self.sorted_terms()]}


def _add(out, key, val):
    if not val:
        return
    v = out.get(key)
    v = val if v is None else v + val
    if v:
        out[key] = v
    else:
        out.pop(key, None)


# ---------------------------------------------------------------- mode action

def _boson(mono: ModeMonomial, n: int, lam):
    """a_n on a monomial: list of (coeff, monomial)."""
    if n < 0:
        return [(1, ModeMonomial(tuple(sorted(mono.bosons + (-n,), reverse=True)), mono.fermions))]
    if n == 0:
        return [(lam, mono)]
    cnt = mono.bosons.count(n)
    if not cnt:
        return []
    b = list(mono.bosons)
    b.remove(n)
    return [(n * cnt, ModeMonomial(tuple(b), mono.fermions))]


def _fermion(mono: ModeMonomial, k: Fraction, sector: str):
    """b_k on a monomial."""
    f = mono.fermions
    if k == 0:
        if sector != "R":
            raise ValueError("b_0 exists only in the Ramond sector")
        nz = [x for x in f if x != 0]
        sign = -1 if len(nz) % 2 else 1
        if f and f[-1] == 0:
            return [(Fraction(sign, 2), ModeMonomial(mono.bosons, f[:-1]))]
        return [(sign, ModeMonomial(mono.bosons, f + (Fraction(0),)))]
    if k > 0:
        if k not in f:
            return []
        p = f.index(k)
        return [(-1 if p % 2 else 1, ModeMonomial(mono.bosons, f[:p] + f[p + 1:]))]
    r = -k
    if r in f:
        return []
    p = sum(1 for x in f if x > r)
    nf = f[:p] + (r,) + f[p:]
    return [(-1 if p % 2 else 1, ModeMonomial(mono.bosons, nf))]


def _check_mode(sector, k):
    k = Fraction(k)
    if sector == "NS" and k.denominator != 2:
        raise ValueError(f"NS fermion modes are half-integers, got {k}")
    if sector == "R" and k.denominator != 1:
        raise ValueError(f"R fermion modes are integers, got {k}")
    return k


def apply_mode(v: FockVector, mode: str, index=0) -> FockVector:
    """Apply ``a_index`` (mode 'a') or ``b_index`` (mode 'b') to ``v``."""
    out = {}
    if mode == "a":
        for mono, c in v.terms.items():
            for d, nm in _boson(mono, int(index), v.lam):
                _add(out, nm, c * d)
    elif mode == "b":
        k = _check_mode(v.sector, index)
        for mono, c in v.terms.items():
            for d, nm in _fermion(mono, k, v.sector):
                _add(out, nm, c * d)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return v.like(out)


def a(v, n):
    return apply_mode(v, "a", n)


def b(v, k):
    return apply_mode(v, "b", k)


def _max_grade(v):
    return max((k.grade for k in v.terms), default=Fraction(0))


def virasoro_L(n: int, v: FockVector) -> FockVector:
    al0 = v.alpha0
    g = _max_grade(v)
    if n == 0:
        out = v.scale(0)
        for mono, c in v.terms.items():
            val = (v.lam * v.lam - al0 * v.lam) / 2 + mono.grade + Fraction(1 - 2 * v.eps, 16)
            _add(out.terms, mono, c * val)
        return out
    out = a(v, n).scale(-al0 * (n + 1) / 2)
    M = int(g) + abs(n) + 2
    for m in range(-M, M + 1):
        p, q = m, n - m
        first, second = (p, q) if p > q else (q, p)
        if first > g:
            continue
        w = a(a(v, first), second)
        if w.terms:
            out = out + w.scale(HALF)
    k = -M + v.eps
    while k <= g:
        w = b(v, k)
        if w.terms:
            w = b(w, n - k)
            if w.terms:
                out = out + w.scale((k + HALF) / 2)
        k += 1
    return out


def virasoro_G(k, v: FockVector) -> FockVector:
    k = _check_mode(v.sector, k)
    al0 = v.alpha0
    g = _max_grade(v)
    out = b(v, k).scale(-al0 * (k + HALF))
    M = int(g) + int(abs(k)) + 2
    for m in range(-M, M + 1):
        if k - m > g:
            continue
        w = b(v, k - m)
        if m > 0 and not w.terms:
            continue
        w = a(w, m)
        if w.terms:
            out = out + w
    return out


# ----------------------------------------------------------------- spanning sets

def fermion_sets(sector: str, grade: Fraction):
    """Strictly decreasing fermion magnitude tuples of total ``grade``."""
    if sector == "NS":
        mags = [Fraction(2 * i + 1, 2) for i in range(int(grade) + 1) if Fraction(2 * i + 1, 2) <= grade]
    else:
        mags = [Fraction(i) for i in range(int(grade) + 1)]
    mags.sort(reverse=True)
    out = []

    def rec(i, left, acc):
        if left == 0:
            out.append(tuple(acc))
        for j in range(i, len(mags)):
            if mags[j] <= left:
                rec(j + 1, left - mags[j], acc + [mags[j]])

    rec(0, grade, [])
    return sorted(set(out))


def basis_monomials(sector: str, grade) -> list[ModeMonomial]:
    grade = Fraction(grade)
    out = []
    step = HALF if sector == "NS" else Fraction(1)
    fg = Fraction(0)
    while fg <= grade:
        bg = grade - fg
        if bg.denominator == 1:
            for fs in fermion_sets(sector, fg):
                for bs in partitions(int(bg)):
                    out.append(ModeMonomial(tuple(bs), fs))
        fg += step
    return sorted(set(out), key=ModeMonomial.key)


# ------------------------------------------------------------------ rho maps

def rho_map(f, sector: str, lam, alpha0, label=None) -> FockVector:
    """Image of a power-sum SymFunc under rho_eps, applied to |lam>."""
    if f.basis != "powersum":
        raise ValueError("rho acts on power-sum expansions")
    out = {}
    shift = HALF if sector == "NS" else Fraction(0)
    for sp, c in f.coeffs.items():
        fermions = tuple(Fraction(x) + shift for x in sp.antisym)
        mono = ModeMonomial(tuple(sorted(sp.sym, reverse=True)), fermions)
        factor = (2 / alpha0) ** sp.length()
        _add(out, mono, c * factor)
    return FockVector(sector, lam, alpha0, out, label)


# ------------------------------------------------------------ algebra check

def spanning_set(sector: str, lam, alpha0, max_grade) -> list[FockVector]:
    out = []
    step = HALF if sector == "NS" else Fraction(1)
    g = Fraction(0)
    while g <= max_grade:
        out += [FockVector(sector, lam, alpha0, {mono: 1}) for mono in basis_monomials(sector, g)]
        g += step
    return out


def algebra_closure_failures(sector: str, lam, alpha0, max_grade=3, modes=2) -> list[str]:
    """Super-Virasoro relations with |m|, |k| <= ``modes`` on a spanning set; returns violations."""
    c = Fraction(3, 2) - 3 * alpha0 * alpha0
    eps = HALF if sector == "NS" else Fraction(0)
    Ls = range(-modes, modes + 1)
    Gs = [k + eps for k in range(-modes, modes) if abs(k + eps) <= modes]
    bad = []
    for v in spanning_set(sector, lam, alpha0, max_grade):
        (mono,) = v.terms
        for m in Ls:
            for n in Ls:
                lhs = virasoro_L(m, virasoro_L(n, v)) - virasoro_L(n, virasoro_L(m, v))
                rhs = virasoro_L(m + n, v).scale(m - n)
                if m == -n:
                    rhs = rhs + v.scale(c * (m ** 3 - m) / 12)
                if lhs != rhs:
                    bad.append(f"[L{m},L{n}] on {mono}")
            for k in Gs:
                lhs = virasoro_L(m, virasoro_G(k, v)) - virasoro_G(k, virasoro_L(m, v))
                if lhs != virasoro_G(m + k, v).scale(Fraction(m, 2) - k):
                    bad.append(f"[L{m},G{k}] on {mono}")
        for k in Gs:
            for l in Gs:
                lhs = virasoro_G(k, virasoro_G(l, v)) + virasoro_G(l, virasoro_G(k, v))
                rhs = virasoro_L(int(k + l), v).scale(2)
                if k == -l:
                    rhs = rhs + v.scale(c * (k * k - Fraction(1, 4)) / 3)
                if lhs != rhs:
                    bad.append(f"{{G{k},G{l}}} on {mono}")
    return bad
