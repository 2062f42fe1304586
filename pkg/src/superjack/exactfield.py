"""Exact rational functions in a single formal parameter.

A :class:`FieldElement` is a quotient of two univariate polynomials with
rational coefficients, kept in lowest terms with a monic denominator.  The
polynomial arithmetic is delegated to FLINT (``fmpq_poly``).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _Rational

import flint

PARAMETERS = ("alpha", "t", "u")
SYMBOLS = {"alpha": "a", "t": "t", "u": "u"}


class PoleError(ZeroDivisionError):
    """Evaluation of a rational function at one of its poles."""


class ReconstructionError(ArithmeticError):
    """No rational function within the degree bound fits the samples."""


def to_fmpq(x) -> flint.fmpq:
    if isinstance(x, flint.fmpq):
        return x
    if isinstance(x, int):
        return flint.fmpq(x)
    if isinstance(x, _Rational):
        return flint.fmpq(int(x.numerator), int(x.denominator))
    if isinstance(x, flint.fmpz):
        return flint.fmpq(x)
    raise TypeError(f"not an exact rational: {x!r}")


def to_fraction(x) -> Fraction:
    x = to_fmpq(x)
    return Fraction(int(x.p), int(x.q))


def _poly_str(p: flint.fmpq_poly, sym: str) -> str:
    terms = []
    for i, c in reversed(list(enumerate(p.coeffs()))):
        if c == 0:
            continue
        c = to_fraction(c)
        mono = "" if i == 0 else (sym if i == 1 else f"{sym}^{i}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


class FieldElement:
    """An element of Q(x) for x one of ``alpha``, ``t``, ``u``."""

    __slots__ = ("var", "num", "den", "_hash")

    def __init__(self, num=0, den=1, var: str = "alpha", *, _canonical=False):
        if var not in PARAMETERS:
            raise ValueError(f"unknown parameter {var!r}")
        self.var = var
        self._hash = None
        if _canonical:
            self.num, self.den = num, den
            return
        num = num if isinstance(num, flint.fmpq_poly) else flint.fmpq_poly([to_fmpq(num)])
        den = den if isinstance(den, flint.fmpq_poly) else flint.fmpq_poly([to_fmpq(den)])
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if num == 0:
            self.num, self.den = flint.fmpq_poly([]), flint.fmpq_poly([1])
            return
        if den.degree() > 0:
            g = num.gcd(den)
            if g.degree() > 0:
                num, _ = divmod(num, g)
                den, _ = divmod(den, g)
        lc = den.coeffs()[-1]
        if lc != 1:
            num, den = num / lc, den / lc
        self.num, self.den = num, den

    # constructors
    @classmethod
    def gen(cls, var: str = "alpha") -> "FieldElement":
        return cls(flint.fmpq_poly([0, 1]), 1, var)

    @classmethod
    def const(cls, c, var: str = "alpha") -> "FieldElement":
        return cls(c, 1, var)

    @classmethod
    def from_coeffs(cls, num, den=(1,), var: str = "alpha") -> "FieldElement":
        """Build from ascending coefficient lists."""
        return cls(flint.fmpq_poly([to_fmpq(c) for c in num]),
                   flint.fmpq_poly([to_fmpq(c) for c in den]), var)

    # coercion
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.var != self.var:
                if other.is_constant():
                    return FieldElement(other.num, other.den, self.var, _canonical=True)
                if self.is_constant():
                    raise _Swap
                raise ValueError(f"parameter mismatch: {self.var} vs {other.var}")
            return other
        return FieldElement(other, 1, self.var)

    def _binary(self, other, fn):
        try:
            o = self._coerce(other)
        except _Swap:
            return fn(FieldElement(self.num, self.den, other.var, _canonical=True), other)
        except TypeError:
            return NotImplemented
        return fn(self, o)

    # arithmetic
    @staticmethod
    def _add(x, y):
        if x.den == y.den:
            return FieldElement(x.num + y.num, x.den, x.var)
        return FieldElement(x.num * y.den + y.num * x.den, x.den * y.den, x.var)

    @staticmethod
    def _sub(x, y):
        if x.den == y.den:
            return FieldElement(x.num - y.num, x.den, x.var)
        return FieldElement(x.num * y.den - y.num * x.den, x.den * y.den, x.var)

    @staticmethod
    def _mul(x, y):
        return FieldElement(x.num * y.num, x.den * y.den, x.var)

    @staticmethod
    def _div(x, y):
        if y.num == 0:
            raise ZeroDivisionError("division by the zero element")
        return FieldElement(x.num * y.den, x.den * y.num, x.var)

    def __add__(self, other):
        return self._binary(other, FieldElement._add)

    def __radd__(self, other):
        return self._binary(other, lambda x, y: FieldElement._add(y, x))

    def __sub__(self, other):
        return self._binary(other, FieldElement._sub)

    def __rsub__(self, other):
        return self._binary(other, lambda x, y: FieldElement._sub(y, x))

    def __mul__(self, other):
        return self._binary(other, FieldElement._mul)

    def __rmul__(self, other):
        return self._binary(other, lambda x, y: FieldElement._mul(y, x))

    def __truediv__(self, other):
        return self._binary(other, FieldElement._div)

    def __rtruediv__(self, other):
        return self._binary(other, lambda x, y: FieldElement._div(y, x))

    def __neg__(self):
        return FieldElement(-self.num, self.den, self.var, _canonical=True)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if self.num == 0:
                raise ZeroDivisionError("zero to a negative power")
            return FieldElement(self.den ** (-e), self.num ** (-e), self.var)
        return FieldElement(self.num ** e, self.den ** e, self.var, _canonical=True)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.var != self.var and not (self.is_constant() and other.is_constant()):
                return False
            return self.num == other.num and self.den == other.den
        try:
            c = to_fmpq(other)
        except TypeError:
            return NotImplemented
        return self.den == 1 and self.num == c

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(to_fraction(self.constant_value()))
            else:
                self._hash = hash((self.var, tuple(str(c) for c in self.num.coeffs()),
                                   tuple(str(c) for c in self.den.coeffs())))
        return self._hash

    def __bool__(self):
        return self.num != 0

    # queries
    def is_zero(self) -> bool:
        return self.num == 0

    def is_constant(self) -> bool:
        return self.den.degree() <= 0 and self.num.degree() <= 0

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return to_fraction(self.num.coeffs()[0]) if self.num != 0 else Fraction(0)

    def degrees(self) -> tuple[int, int]:
        return max(self.num.degree(), 0), self.den.degree()

    def evaluate(self, value) -> Fraction:
        """Exact value at ``value``; raises :class:`PoleError` at a pole."""
        v = to_fmpq(value)
        d = self.den(v)
        if d == 0:
            raise PoleError(f"{self} has a pole at {self.var}={to_fraction(v)}")
        return to_fraction(self.num(v) / d)

    def subs(self, x: "FieldElement") -> "FieldElement":
        """Compose: substitute ``x`` (an element of any Q(y)) for the parameter."""

        def horner(p):
            acc = FieldElement(0, 1, x.var)
            for c in reversed(p.coeffs()):
                acc = acc * x + FieldElement(c, 1, x.var)
            return acc

        return horner(self.num) / horner(self.den)

    def rename(self, var: str) -> "FieldElement":
        return FieldElement(self.num, self.den, var, _canonical=True)

    def even_in(self) -> bool:
        """True when the function is invariant under x -> -x."""
        return all(c == 0 for i, c in enumerate(self.num.coeffs()) if i % 2) and \
            all(c == 0 for i, c in enumerate(self.den.coeffs()) if i % 2)

    def __str__(self):
        sym = SYMBOLS[self.var]
        n = _poly_str(self.num, sym)
        if self.den == 1:
            return n
        d = _poly_str(self.den, sym)
        if self.num.degree() > 0 and len([c for c in self.num.coeffs() if c != 0]) > 1:
            n = f"({n})"
        if len([c for c in self.den.coeffs() if c != 0]) > 1:
            d = f"({d})"
        return f"{n}/{d}"

    def __repr__(self):
        return f"FieldElement({str(self)!r}, var={self.var!r})"


class _Swap(Exception):
    pass


def alpha() -> FieldElement:
    return FieldElement.gen("alpha")


def rational_interpolate(points, values, degree_bound: int, var: str = "alpha",
                         holdout: int = 1) -> FieldElement:
    """Rational function with numerator and denominator degree at most
    ``degree_bound`` through ``(points[i], values[i])``.

    The first ``2*degree_bound+1`` samples determine the candidate through the
    extended Euclidean algorithm (Pade-type reconstruction); the remaining
    ``holdout`` or more samples must confirm it.
    """
    xs = [to_fmpq(p) for p in points]
    ys = [to_fmpq(v) for v in values]
    if len(set(xs)) != len(xs):
        raise ValueError("sample points must be distinct")
    need = 2 * degree_bound + 1
    if len(xs) < need + holdout:
        raise ValueError(f"need at least {need + holdout} samples, got {len(xs)}")
    fx, fy = xs[:need], ys[:need]
    modulus = flint.fmpq_poly([1])
    for x in fx:
        modulus *= flint.fmpq_poly([-x, 1])
    interp = flint.fmpq_poly.interpolate(fx, fy) if hasattr(flint.fmpq_poly, "interpolate") \
        else _lagrange(fx, fy)
    r0, r1 = modulus, interp
    t0, t1 = flint.fmpq_poly([]), flint.fmpq_poly([1])
    while r1 != 0 and r1.degree() > degree_bound:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        t0, t1 = t1, t0 - q * t1
    if t1.degree() > degree_bound or t1 == 0:
        raise ReconstructionError("no rational function within the degree bound")
    if r1 == 0:
        cand = FieldElement(0, 1, var)
    else:
        for x in fx:
            if t1(x) == 0:
                raise ReconstructionError("candidate has a pole at a sample point")
        cand = FieldElement(r1, t1, var)
    for x, y in zip(xs, ys):
        try:
            if to_fmpq(cand.evaluate(x)) != y:
                raise ReconstructionError("candidate fails a held-out sample")
        except PoleError:
            raise ReconstructionError("candidate has a pole at a sample point") from None
    return cand


def _lagrange(xs, ys) -> flint.fmpq_poly:
    out = flint.fmpq_poly([])
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = flint.fmpq_poly([1])
        denom = flint.fmpq(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis *= flint.fmpq_poly([-xj, 1])
                denom *= xi - xj
        out += basis * (yi / denom)
    return out


def reconstruct(samples, degree_bound: int) -> FieldElement:
    """Rational function of alpha from samples ``(k, value)`` taken at alpha = 1/k."""
    samples = list(samples)
    if len(samples) < 2 * degree_bound + 2:
        raise ValueError("need at least 2*degree_bound+2 samples")
    pts = [flint.fmpq(1, k) for k, _ in samples]
    return rational_interpolate(pts, [v for _, v in samples], degree_bound, "alpha")
