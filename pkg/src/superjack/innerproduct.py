"""Scalar products on symmetric superpolynomials.

``ct_pairing`` is the finite-N torus product at alpha = 1/k, evaluated as a
Laurent constant term.  ``comb_pairing`` is the power-sum pairing for which the
super Cauchy kernel is reproducing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

import flint

from .exactfield import FieldElement, reconstruct, ReconstructionError
from .superpoly import Adjoint, FinitePoly, SymFunc


@lru_cache(maxsize=8)
def _vandermonde_power(N: int, k: int):
    """Delta(z)^{2k} as an fmpz_mpoly in N variables."""
    ctx = flint.fmpz_mpoly_ctx.get(("z", N), "lex")
    z = ctx.gens()
    d = ctx.from_dict({(0,) * N: 1})
    for i in range(N):
        for j in range(i + 1, N):
            d *= z[i] - z[j]
    return d ** (2 * k) if k else ctx.from_dict({(0,) * N: 1})


def kernel_coefficient(N: int, k: int, exps) -> int:
    """Coefficient of z^exps in prod_{i != j} (1 - z_i/z_j)^k.

    Uses prod_{i != j}(1 - z_i/z_j) = (-1)^{N(N-1)/2} Delta^2 prod_i z_i^{-(N-1)}.
    """
    if sum(exps) != 0:
        return 0
    if N == 1 or k == 0:
        return 1 if not any(exps) else 0
    shift = k * (N - 1)
    target = tuple(e + shift for e in exps)
    if min(target) < 0 or max(target) > 2 * shift:
        return 0
    c = int(_vandermonde_power(N, k)[target])
    return -c if (k * (N * (N - 1) // 2)) & 1 else c


def theta_free_contraction(f: FinitePoly, g: FinitePoly) -> FinitePoly:
    """theta-free part of f^dagger g."""
    h = Adjoint(f).apply(g)
    return FinitePoly._raw(h.N, {key: c for key, c in h.terms.items() if key[1] == 0})


def ct_pairing(f: FinitePoly, g: FinitePoly, N: int, k: int):
    """<f, g>_N at alpha = 1/k, an exact rational."""
    if f.N != N or g.N != N:
        raise ValueError("polynomials must live in N variables")
    h = theta_free_contraction(f, g)
    total = 0
    for (e, _), c in h.terms.items():
        kc = kernel_coefficient(N, k, tuple(-x for x in e))
        if kc:
            total += c * kc
    return Fraction(total) if not isinstance(total, FieldElement) else total


@dataclass(frozen=True)
class PairingResult:
    value: FieldElement
    method: str
    samples: tuple = ()


def _as_callable(f):
    return f if callable(f) else (lambda k: f)


def pairing_rational(f, g, N: int, degree_bound: int | None = None, *, ratio_to_unit=False,
                     extra: int = 1) -> PairingResult:
    """<f, g>_N as a rational function of alpha, reconstructed from k = 1, 2, ...

    ``f`` and ``g`` may be callables ``k -> FinitePoly`` when they depend on
    alpha.  With ``ratio_to_unit`` the samples are divided by <1,1>_N.
    """
    fk, gk = _as_callable(f), _as_callable(g)
    if degree_bound is None:
        f1 = fk(1)
        degree_bound = 2 + max((sum(e) for e, _ in f1.terms), default=0)
    count = 2 * degree_bound + 1 + extra
    samples = []
    for k in range(1, count + 1):
        v = Fraction(ct_pairing(fk(k), gk(k), N, k))
        if ratio_to_unit:
            v /= unit_pairing(N, k)
        samples.append((k, v))
    value = reconstruct(samples, degree_bound)
    return PairingResult(value, "reconstructed", tuple(samples))


def unit_pairing(N: int, k: int) -> int:
    """<1, 1>_N at alpha = 1/k (the Dyson constant term)."""
    return kernel_coefficient(N, k, (0,) * N)


def sigma(m: int) -> int:
    return -1 if (m * (m - 1) // 2) % 2 else 1


def powersum_norm(sp, alpha):
    """<p_L, p_L> = sigma(m) alpha^l z_{L^s}."""
    return sigma(sp.m) * sp_z(sp) * alpha ** sp.length()


def sp_z(sp) -> int:
    from .superpartition import Partition
    return Partition(sp.sym).z()


def comb_pairing(f: SymFunc, g: SymFunc, alpha=None):
    if f.basis != "powersum" or g.basis != "powersum":
        raise ValueError("combinatorial pairing needs power-sum inputs")
    a = alpha if alpha is not None else FieldElement.gen("alpha")
    total = 0
    for sp, c in f.coeffs.items():
        d = g.coeffs.get(sp)
        if d is not None:
            total = total + c * d * powersum_norm(sp, a)
    if alpha is None and not isinstance(total, FieldElement):
        total = FieldElement.const(total)
    return total


def dyson(N: int, k: int) -> int:
    """(Nk)!/(k!)^N, used as an independent anchor for the kernel."""
    out = 1
    for i in range(N):
        out *= comb((i + 1) * k, k)
    return out


def cauchy_kernel_truncation(n: int, m: int) -> dict:
    """Bidegree-(n|m) part of exp(alpha^-1 sum_k [p_k(z)p_k(y)/k + pt_{k-1}(z)pt_{k-1}(y)]).

    Returned as {Lambda: coefficient of p_Lambda(z) p_Lambda(y)}; the expansion
    is diagonal.  The fermionic sign comes from reordering the interleaved
    product pt_{a1}(z) pt_{a1}(y) pt_{a2}(z) ... into z-part then y-part.
    """
    from .superpartition import superpartitions
    from .superpoly import sign_of_sequence
    a = FieldElement.gen("alpha")
    out = {}
    for sp in superpartitions(n, m):
        interleaved = [x for i in range(m) for x in (i, m + i)]
        sign, _ = sign_of_sequence(interleaved)
        out[sp] = FieldElement.const(Fraction(sign, sp_z(sp))) / a ** sp.length()
    return out
