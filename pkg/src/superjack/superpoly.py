"""Superpolynomials in finitely many variables and symmetric superfunctions.

``FinitePoly`` stores a sparse map ``(exponents, theta_mask) -> coefficient``
where bit ``i`` of the mask stands for theta_{i+1}; the Grassmann monomial is
always written with increasing indices.  Coefficients may be ints,
``Fraction``s or :class:`~superjack.exactfield.FieldElement`s.

``SymFunc`` is an element of the projective limit, written in the monomial,
power-sum or Jack basis.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

import flint

from .exactfield import FieldElement, to_fraction
from .superpartition import Superpartition, superpartitions


# ------------------------------------------------------------ grassmann signs

@lru_cache(maxsize=None)
def mask_product_sign(a: int, b: int) -> int:
    """Sign of theta_A theta_B -> theta_{A u B} (0 if they overlap)."""
    if a & b:
        return 0
    inv = 0
    bb = b
    while bb:
        low = bb & -bb
        inv += bin(a & ~((low << 1) - 1)).count("1")
        bb ^= low
    return -1 if inv & 1 else 1


def sign_of_sequence(idx) -> tuple[int, int]:
    """theta_{i1} ... theta_{ik} = sign * theta_mask; sign 0 on repeats."""
    mask, sign = 0, 1
    for i in idx:
        s = mask_product_sign(mask, 1 << i)
        if s == 0:
            return 0, 0
        sign *= s
        mask |= 1 << i
    return sign, mask


def mask_indices(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


@lru_cache(maxsize=None)
def derivative_sign(ops: int, mask: int) -> int:
    """Sign of d_{s1} ... d_{sk} theta_T with S=ops ascending, the rightmost
    derivative acting first.  Zero unless S is contained in T."""
    if ops & ~mask:
        return 0
    sign, cur = 1, mask
    for s in reversed(mask_indices(ops)):
        if bin(cur & ((1 << s) - 1)).count("1") & 1:
            sign = -sign
        cur &= ~(1 << s)
    return sign


def _iszero(c) -> bool:
    return not c


# ------------------------------------------------------------------ FinitePoly

class FinitePoly:
    """Laurent superpolynomial in z_1..z_N, theta_1..theta_N."""

    __slots__ = ("N", "terms")

    def __init__(self, N: int, terms=None):
        self.N = N
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not _iszero(c):
                    self.terms[k] = c

    @classmethod
    def _raw(cls, N, terms):
        obj = cls.__new__(cls)
        obj.N = N
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, N: int, c=1) -> "FinitePoly":
        return cls(N, {((0,) * N, 0): c})

    @classmethod
    def z(cls, N: int, i: int, power: int = 1) -> "FinitePoly":
        e = [0] * N
        e[i - 1] = power
        return cls(N, {(tuple(e), 0): 1})

    @classmethod
    def theta(cls, N: int, i: int) -> "FinitePoly":
        return cls(N, {((0,) * N, 1 << (i - 1)): 1})

    @classmethod
    def monomial(cls, exps, thetas=(), coeff=1) -> "FinitePoly":
        """coeff * theta_{thetas[0]} ... z^exps with 1-based theta indices in the given order."""
        sign, mask = sign_of_sequence([i - 1 for i in thetas])
        return cls(len(exps), {(tuple(exps), mask): coeff * sign} if sign else {})

    # basics
    def copy(self):
        return FinitePoly._raw(self.N, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, FinitePoly):
            return self.N == other.N and (self - other).is_zero()
        if other == 0:
            return self.is_zero()
        return NotImplemented

    __hash__ = None

    def _combine(self, other, sgn):
        if not isinstance(other, FinitePoly):
            other = FinitePoly.one(self.N, other)
        if other.N != self.N:
            raise ValueError("variable counts differ")
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = (c if sgn > 0 else -c) if v is None else (v + c if sgn > 0 else v - c)
            if _iszero(v):
                out.pop(k, None)
            else:
                out[k] = v
        return FinitePoly._raw(self.N, out)

    def __add__(self, other):
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return FinitePoly._raw(self.N, {k: -c for k, c in self.terms.items()})

    def scale(self, c) -> "FinitePoly":
        if _iszero(c):
            return FinitePoly(self.N)
        return FinitePoly._raw(self.N, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, FinitePoly):
            return self.scale(other)
        if other.N != self.N:
            raise ValueError("variable counts differ")
        out = {}
        for (e1, m1), c1 in self.terms.items():
            for (e2, m2), c2 in other.terms.items():
                s = mask_product_sign(m1, m2)
                if not s:
                    continue
                key = (tuple(a + b for a, b in zip(e1, e2)), m1 | m2)
                v = c1 * c2 if s > 0 else -(c1 * c2)
                if key in out:
                    v = out[key] + v
                    if _iszero(v):
                        del out[key]
                        continue
                out[key] = v
        return FinitePoly._raw(self.N, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, e: int):
        out = FinitePoly.one(self.N)
        for _ in range(e):
            out = out * self
        return out

    def map_coeffs(self, fn) -> "FinitePoly":
        return FinitePoly(self.N, {k: fn(c) for k, c in self.terms.items()})

    # structure
    def theta_degrees(self) -> set[int]:
        return {bin(m).count("1") for _, m in self.terms}

    def z_degrees(self) -> set[int]:
        return {sum(e) for e, _ in self.terms}

    def theta_component(self, mask: int) -> "FinitePoly":
        return FinitePoly._raw(self.N, {k: c for k, c in self.terms.items() if k[1] == mask})

    def permute(self, perm) -> "FinitePoly":
        """Relabel variables: index i goes to perm[i] (0-based), for z and theta together."""
        out = {}
        for (e, m), c in self.terms.items():
            ne = [0] * self.N
            for i, x in enumerate(e):
                ne[perm[i]] = x
            sign, nm = sign_of_sequence([perm[i] for i in mask_indices(m)])
            out[(tuple(ne), nm)] = c if sign > 0 else -c
        return FinitePoly._raw(self.N, out)

    def is_symmetric(self) -> bool:
        return all(self.permute(_transposition(self.N, i)) == self for i in range(self.N - 1))

    def extend(self, N: int) -> "FinitePoly":
        if N < self.N:
            raise ValueError("cannot shrink")
        pad = (0,) * (N - self.N)
        return FinitePoly._raw(N, {(e + pad, m): c for (e, m), c in self.terms.items()})

    def set_zero(self, keep: int) -> "FinitePoly":
        """Restrict to the first ``keep`` variables (the others set to zero)."""
        out = {}
        for (e, m), c in self.terms.items():
            if any(e[keep:]) or m >> keep:
                continue
            out[(e[:keep], m)] = c
        return FinitePoly._raw(keep, out)

    def identify_variables(self, idx) -> "FinitePoly":
        """Set z_i = z_{idx[0]} for i in idx (0-based); theta untouched."""
        first = idx[0]
        out = {}
        for (e, m), c in self.terms.items():
            ne = list(e)
            for i in idx[1:]:
                ne[first] += ne[i]
                ne[i] = 0
            key = (tuple(ne), m)
            v = out.get(key)
            v = c if v is None else v + c
            if _iszero(v):
                out.pop(key, None)
            else:
                out[key] = v
        return FinitePoly._raw(self.N, out)

    # theta derivatives
    def theta_derivative(self, ops) -> "FinitePoly":
        """Apply d_{i1} ... d_{ik} (1-based, ascending, rightmost first)."""
        omask = 0
        for i in ops:
            omask |= 1 << (i - 1)
        out = {}
        for (e, m), c in self.terms.items():
            s = derivative_sign(omask, m)
            if s:
                out[(e, m & ~omask)] = c if s > 0 else -c
        return FinitePoly._raw(self.N, out)

    def divide_linear(self, i: int, j: int) -> "FinitePoly":
        """Exact quotient by (z_i - z_j), 0-based indices; ArithmeticError on a remainder."""
        comps = defaultdict(dict)
        for (e, m), c in self.terms.items():
            if min(e) < 0:
                raise ArithmeticError("division needs a polynomial input")
            comps[m][e] = c
        out = {}
        for m, comp in comps.items():
            # synthetic division in z_i, highest degree first
            while True:
                top = max((e[i] for e in comp), default=0)
                if top == 0:
                    break
                for e in [e for e in comp if e[i] == top]:
                    c = comp.pop(e)
                    q = e[:i] + (e[i] - 1,) + e[i + 1:]
                    out[(q, m)] = c
                    r = q[:j] + (q[j] + 1,) + q[j + 1:]
                    v = comp[r] + c if r in comp else c
                    if _iszero(v):
                        comp.pop(r, None)
                    else:
                        comp[r] = v
            if comp:
                raise ArithmeticError(f"not divisible by (z{i + 1} - z{j + 1})")
        return FinitePoly(self.N, out)

    # display
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (e, m), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], tuple(-x for x in kv[0][0]))):
            th = "".join(f"θ{i + 1}" for i in mask_indices(m))
            zs = "".join(f"z{i + 1}" + (f"^{x}" if x != 1 else "") for i, x in enumerate(e) if x)
            mono = (th + zs) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FinitePoly(N={self.N}, {len(self.terms)} terms)"


def _transposition(N, i):
    p = list(range(N))
    p[i], p[i + 1] = p[i + 1], p[i]
    return p


# ------------------------------------------------------------- realizations

def monomial_realize(sp: Superpartition, N: int, coeff=1) -> FinitePoly:
    """m_Lambda in N variables (zero when the length exceeds N)."""
    m = sp.m
    if sp.length() > N:
        return FinitePoly(N)
    sym = list(sp.sym) + [0] * (N - sp.length())
    out = {}
    for fpos in permutations(range(N), m):
        sign, mask = sign_of_sequence(fpos)
        rest = [i for i in range(N) if i not in fpos]
        for arr in set(permutations(sym)):
            e = [0] * N
            for p, a in zip(fpos, sp.antisym):
                e[p] = a
            for p, x in zip(rest, arr):
                e[p] = x
            out[(tuple(e), mask)] = coeff * sign
    return FinitePoly(N, out)


def ptilde(r: int, N: int) -> FinitePoly:
    return FinitePoly(N, {(tuple(r if k == i else 0 for k in range(N)), 1 << i): 1 for i in range(N)})


def psum(s: int, N: int) -> FinitePoly:
    return FinitePoly(N, {(tuple(s if k == i else 0 for k in range(N)), 0): 1 for i in range(N)})


def powersum_realize(sp: Superpartition, N: int) -> FinitePoly:
    out = FinitePoly.one(N)
    for a in sp.antisym:
        out = out * ptilde(a, N)
    for s in sp.sym:
        out = out * psum(s, N)
    return out


def vandermonde(N: int) -> FinitePoly:
    out = FinitePoly.one(N)
    for i in range(N):
        for j in range(i + 1, N):
            out = out * (FinitePoly.z(N, i + 1) - FinitePoly.z(N, j + 1))
    return out


# ---------------------------------------------------------------- adjoint

class Adjoint:
    """f^dagger = f(1/z, d_theta), kept as the list of its terms."""

    def __init__(self, f: FinitePoly):
        self.f = f
        self.N = f.N

    def apply(self, g: FinitePoly) -> FinitePoly:
        out = {}
        for (e1, m1), c1 in self.f.terms.items():
            for (e2, m2), c2 in g.terms.items():
                s = derivative_sign(m1, m2)
                if not s:
                    continue
                key = (tuple(b - a for a, b in zip(e1, e2)), m2 & ~m1)
                v = c1 * c2 if s > 0 else -(c1 * c2)
                v = out[key] + v if key in out else v
                if _iszero(v):
                    out.pop(key, None)
                else:
                    out[key] = v
        return FinitePoly._raw(self.N, out)

    __call__ = apply


def adjoint(f: FinitePoly) -> Adjoint:
    return Adjoint(f)


# ------------------------------------------------------ transition matrices

def _count_assignments(parts: tuple[int, ...], residual: tuple[int, ...]) -> int:
    """Number of maps from the (ordered) parts to bins with the given sums."""

    @lru_cache(maxsize=None)
    def go(k, res):
        if k == len(parts):
            return 1 if not any(res) else 0
        p = parts[k]
        total = 0
        for b, r in enumerate(res):
            if r >= p:
                total += go(k + 1, res[:b] + (r - p,) + res[b + 1:])
        return total

    if sum(parts) != sum(residual):
        return 0
    return go(0, tuple(residual))


def p_in_m_coefficient(lam: Superpartition, om: Superpartition) -> int:
    """Coefficient of m_Omega in p_Lambda: the coefficient of the leading
    monomial theta_1..theta_m z^Omega of m_Omega in the expansion of p_Lambda."""
    if lam.degree() != om.degree():
        return 0
    m = lam.m
    target = om.antisym + om.sym
    total = 0
    for perm in permutations(range(m)):
        sign, _ = sign_of_sequence(perm)
        res = list(target)
        ok = True
        for i, v in enumerate(perm):
            res[v] -= lam.antisym[i]
            if res[v] < 0:
                ok = False
                break
        if not ok:
            continue
        total += sign * _count_assignments(lam.sym, tuple(res))
    return total


@lru_cache(maxsize=None)
def transition_p_to_m(n: int, m: int):
    """(basis, M) with p_{basis[i]} = sum_j M[i, j] m_{basis[j]} as an fmpq_mat."""
    basis = superpartitions(n, m)
    d = len(basis)
    mat = flint.fmpq_mat(d, d)
    for i, lam in enumerate(basis):
        for j, om in enumerate(basis):
            c = p_in_m_coefficient(lam, om)
            if c:
                mat[i, j] = c
    return basis, mat


@lru_cache(maxsize=None)
def transition_m_to_p(n: int, m: int):
    basis, mat = transition_p_to_m(n, m)
    return basis, mat.inv() if len(basis) else mat


# ----------------------------------------------------------------- SymFunc

BASES = ("monomial", "powersum", "sjack")


class SymFunc:
    """Symmetric superfunction as a sparse coefficient map in a named basis."""

    __slots__ = ("basis", "coeffs", "alpha")

    def __init__(self, basis: str, coeffs=None, alpha=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.alpha = alpha
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if not _iszero(v)}

    def bidegrees(self) -> set[tuple[int, int]]:
        return {k.degree() for k in self.coeffs}

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out[k] + v if k in out else v
        return SymFunc(self.basis, out, self.alpha)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return SymFunc(self.basis, {k: c * v for k, v in self.coeffs.items()}, self.alpha)

    __rmul__ = scale

    def __mul__(self, c):
        return self.scale(c)

    def _check(self, other):
        if not isinstance(other, SymFunc) or other.basis != self.basis:
            raise ValueError("basis mismatch")

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and (self - other).is_zero()

    __hash__ = None

    def is_zero(self):
        return not self.coeffs

    def map_coeffs(self, fn):
        return SymFunc(self.basis, {k: fn(v) for k, v in self.coeffs.items()}, self.alpha)

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (kv[0].degree(), _order_key(kv[0])))

    def to_json(self):
        return {"basis": self.basis,
                "terms": [{"spart": str(k), "coeff": str(v)} for k, v in self.sorted_items()]}

    def __str__(self):
        sym = {"monomial": "m", "powersum": "p", "sjack": "P"}[self.basis]
        if not self.coeffs:
            return "0"
        return " + ".join(f"({v})*{sym}{k}" for k, v in self.sorted_items())

    def __repr__(self):
        return f"SymFunc({self.basis}, {len(self.coeffs)} terms)"

    def realize(self, N: int) -> FinitePoly:
        if self.basis == "sjack":
            raise ValueError("convert to the monomial basis first")
        f = monomial_realize if self.basis == "monomial" else powersum_realize
        out = FinitePoly(N)
        for k, c in self.coeffs.items():
            out = out + f(k, N).scale(c)
        return out


def _order_key(sp: Superpartition):
    """Position in the canonical (descending) order of its bidegree."""
    return superpartitions(*sp.degree()).index(sp)


def _lin_combine(coeffs: dict, n: int, m: int, mat, basis):
    idx = {sp: i for i, sp in enumerate(basis)}
    out = {}
    for sp, c in coeffs.items():
        i = idx[sp]
        for j, target in enumerate(basis):
            x = mat[i, j]
            if x != 0:
                v = c * to_fraction(x)
                out[target] = out[target] + v if target in out else v
    return out


def basis_convert(f: SymFunc, target: str, alpha=None) -> SymFunc:
    """Change between the monomial and power-sum bases (the Jack basis is
    handled in :mod:`superjack.sjack`)."""
    if target == f.basis:
        return f
    if "sjack" in (target, f.basis):
        from . import sjack
        return sjack.convert(f, target, alpha)
    by_deg = defaultdict(dict)
    for k, c in f.coeffs.items():
        by_deg[k.degree()][k] = c
    out = {}
    for (n, m), part in by_deg.items():
        if f.basis == "powersum":
            basis, mat = transition_p_to_m(n, m)
        else:
            basis, mat = transition_m_to_p(n, m)
        for k, v in _lin_combine(part, n, m, mat, basis).items():
            out[k] = out[k] + v if k in out else v
    return SymFunc(target, out, f.alpha)


def identify_symfunc(f: FinitePoly, N: int | None = None, basis: str = "monomial") -> SymFunc:
    """Monomial-basis coefficients of a symmetric superpolynomial."""
    if basis != "monomial":
        raise ValueError("identification is done in the monomial basis")
    N = f.N if N is None else N
    coeffs = {}
    for (e, mask), c in f.terms.items():
        k = mask.bit_count() if hasattr(mask, "bit_count") else bin(mask).count("1")
        if any(x < 0 for x in e):
            raise ValueError("negative exponent in a symmetric polynomial")
        if mask != (1 << k) - 1:
            continue
        a = e[:k]
        if any(a[i] <= a[i + 1] for i in range(k - 1)):
            continue
        s = e[k:]
        if any(s[i] < s[i + 1] for i in range(len(s) - 1)):
            continue
        coeffs[Superpartition(a, tuple(x for x in s if x))] = c
    out = SymFunc("monomial", coeffs)
    residual = f - out.realize(f.N)
    if not residual.is_zero():
        raise ValueError("input is not symmetric (nonzero residual)")
    return out
