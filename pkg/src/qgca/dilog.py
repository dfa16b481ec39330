"""Quantum dilogarithms of higher degree as exact truncated series.

``Psi_{d,z,Q}(x)`` is generated from its difference equation

    Psi(Q^2 x) = (sum_{s=0}^d z_s Q^s x^s) Psi(x),   Psi(0) = 1,

which gives ``a_n (Q^{2n} - 1) = sum_{s=1}^{min(d,n)} z_s Q^s a_{n-s}``.  The
infinite product form is never used here: its x-coefficients are infinite
sums in q.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .coeff import Coeff
from .errors import NonPositiveArgument
from .series import ConeSeries
from .torus import ExchangeData


@dataclass(frozen=True)
class PsiSpec:
    """Degree, frozen coefficients ``(z_1, ..., z_{d-1})`` and base ``q^base``."""

    degree: int
    z: tuple = ()
    base: int = 1

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError("degree must be positive")
        z = tuple(c if isinstance(c, Coeff) else Coeff(c) for c in self.z)
        if len(z) != self.degree - 1:
            raise ValueError(f"degree {self.degree} needs {self.degree - 1} coefficients, got {len(z)}")
        object.__setattr__(self, "z", z)

    @classmethod
    def trivial(cls, degree: int, base: int = 1) -> "PsiSpec":
        """All frozen coefficients equal to 1."""
        return cls(degree, (Coeff(1),) * (degree - 1), base)

    @classmethod
    def from_exchange(cls, ed: ExchangeData, k: int) -> "PsiSpec":
        return cls(ed.d[k], tuple(ed.zcoeff(k, s) for s in range(1, ed.d[k])), ed.qexp(k))

    def full_z(self) -> list:
        return [Coeff(1), *self.z, Coeff(1)]


@dataclass(frozen=True)
class PsiCoefficients:
    spec: PsiSpec
    a: tuple

    @property
    def order(self) -> int:
        return len(self.a) - 1

    def __getitem__(self, n):
        return self.a[n]

    def __len__(self):
        return len(self.a)


def _recursion(zfull: Sequence[Coeff], base: int, N: int) -> list:
    d = len(zfull) - 1
    a = [Coeff(1)]
    for n in range(1, N + 1):
        s_sum = Coeff.sum_products(
            (zfull[s], a[n - s], s * base) for s in range(1, min(d, n) + 1)
        )
        a.append(s_sum / (Coeff.q(2 * n * base) - 1))
    return a


@lru_cache(maxsize=256)
def _cached(spec: PsiSpec, N: int) -> tuple:
    return tuple(_recursion(spec.full_z(), spec.base, N))


def psi_coefficients(spec: PsiSpec, N: int) -> PsiCoefficients:
    """x-expansion ``a_0 .. a_N`` of ``Psi_{d,z,q^base}(x)``."""
    if N < 0:
        raise ValueError("order must be non-negative")
    return PsiCoefficients(spec, _cached(spec, N))


# -- commutative series in one variable x -----------------------------------


def smul(a: Sequence[Coeff], b: Sequence[Coeff], N: int) -> list:
    out = []
    for n in range(N + 1):
        out.append(
            Coeff.sum_products(
                (a[i], b[n - i], 0) for i in range(max(0, n - len(b) + 1), min(n, len(a) - 1) + 1)
            )
        )
    return out


def sinv(a: Sequence[Coeff], N: int) -> list:
    inv0 = a[0].inverse()
    out = [inv0]
    for n in range(1, N + 1):
        s = Coeff.sum_products((a[i], out[n - i], 0) for i in range(1, min(n, len(a) - 1) + 1))
        out.append(-(s * inv0))
    return out


def sscale(a: Sequence[Coeff], c) -> list:
    """Substitute ``x -> c x``."""
    c = Coeff(c)
    out, p = [], Coeff(1)
    for v in a:
        out.append(v * p)
        p = p * c
    return out


def sinflate(a: Sequence[Coeff], k: int, N: int) -> list:
    """Substitute ``x -> x^k``."""
    out = [Coeff(0)] * (N + 1)
    for i, v in enumerate(a):
        if i * k > N:
            break
        out[i * k] = v
    return out


def _pad(a, N):
    a = list(a[: N + 1])
    return a + [Coeff(0)] * (N + 1 - len(a))


# -- application to torus series -------------------------------------------


def psi_inverse_coefficients(spec: PsiSpec, N: int) -> list:
    return sinv(list(psi_coefficients(spec, N).a), N)


def psi_of(spec: PsiSpec, arg: ConeSeries, exponent: int = 1, N: int | None = None) -> ConeSeries:
    """``Psi(arg)**exponent`` for an argument of strictly positive degree.

    Powers of a single element commute, so ``Psi(arg)^{-1}`` is obtained by
    substituting ``arg`` into the x-series ``1/Psi(x)``.
    """
    if exponent not in (1, -1):
        raise ValueError("exponent must be +1 or -1")
    N = arg.order if N is None else min(N, arg.order)
    if not arg.is_positive():
        raise NonPositiveArgument(f"argument with prefactor {arg.gamma} is not of strictly positive degree")
    zero = (0,) * arg.n
    x = arg.with_order(N).shift_to(zero)
    coeffs = psi_coefficients(spec, N).a if exponent == 1 else psi_inverse_coefficients(spec, N)
    result = ConeSeries.scalar(arg.form, coeffs[0], N)
    power = ConeSeries.one(arg.form, N)
    for n in range(1, N + 1):
        power = power * x
        if power.is_zero():
            break
        if not coeffs[n].is_zero():
            result = result + power.scale(coeffs[n])
    return result


# -- identities -------------------------------------------------------------


def _sign(a: int) -> int:
    return (a > 0) - (a < 0)


def psi_shift_check(spec: PsiSpec, a: int, N: int) -> bool:
    """``Psi(Q^{2a} x)`` against the finite product times ``Psi(x)``."""
    coeffs = list(psi_coefficients(spec, N).a)
    b = spec.base
    lhs = [c.q_shift(2 * a * b * n) for n, c in enumerate(coeffs)]
    sg = _sign(a)
    zf = spec.full_z()
    rhs = coeffs
    for m in range(1, abs(a) + 1):
        factor = _pad([zf[s].q_shift(sg * (2 * m - 1) * s * b) for s in range(spec.degree + 1)], N)
        if sg < 0:
            factor = sinv(factor, N)
        rhs = smul(factor, rhs, N)
    return all(x == y for x, y in zip(lhs, rhs))


def z_from_roots(w: Sequence) -> list:
    """Coefficients of ``prod_s (1 - w_s x)`` from the constant term up."""
    poly = [Coeff(1)]
    for ws in w:
        ws = Coeff(ws)
        nxt = poly + [Coeff(0)]
        for i in range(len(poly)):
            nxt[i + 1] = nxt[i + 1] - ws * poly[i]
        poly = nxt
    return poly


def psi_factorization_check(d: int, w: Sequence, N: int) -> bool:
    """Degree-d series with ``sum z_s x^s = prod (1 - w_s x)`` against ``prod Psi_q(-w_s x)``.

    The top coefficient ``z_d = prod(-w_s)`` is taken as computed, so tuples
    with ``prod(-w_s) != 1`` are accepted as well.
    """
    if len(w) != d:
        raise ValueError("need exactly d roots")
    lhs = _recursion(z_from_roots(w), 1, N)
    base = list(psi_coefficients(PsiSpec(1), N).a)
    rhs = [Coeff(1)] + [Coeff(0)] * N
    for ws in w:
        rhs = smul(rhs, sscale(base, -Coeff(ws)), N)
    return all(x == y for x, y in zip(lhs, rhs))


def psi_trivialz_split_check(d: int, N: int) -> bool:
    """``Psi_{d,1,q}(x) = Psi_{q^{d+1}}(-x^{d+1}) Psi_q(-x)^{-1}``."""
    lhs = list(psi_coefficients(PsiSpec.trivial(d), N).a)
    big = list(psi_coefficients(PsiSpec(1, (), d + 1), N // (d + 1)).a)
    first = sinflate(sscale(big, -1), d + 1, N)
    second = sinv(sscale(list(psi_coefficients(PsiSpec(1), N).a), -1), N)
    rhs = smul(first, second, N)
    return all(x == y for x, y in zip(lhs, rhs))


def qdilog_coefficients(N: int) -> list:
    """``L_{2,q}(x) = sum x^n / (n (q^n - q^{-n}))`` for n <= N (index 0 is 0)."""
    out = [Coeff(0)]
    for n in range(1, N + 1):
        out.append((Coeff.q(n) - Coeff.q(-n)).inverse() / n)
    return out


def series_exp(s: Sequence[Coeff], N: int) -> list:
    """``sum_{m<=N} s^m / m!`` for a series with zero constant term."""
    if not s[0].is_zero():
        raise ValueError("exponential needs a zero constant term")
    total = [Coeff(1)] + [Coeff(0)] * N
    power = [Coeff(1)] + [Coeff(0)] * N
    for m in range(1, N + 1):
        power = smul(power, s, N)
        inv = Coeff(1) / factorial(m)
        total = [t + p * inv for t, p in zip(total, power)]
    return total


def qdilog_exp_check(N: int) -> bool:
    """``Psi_q(x) = exp(-L_{2,q}(-x))`` through order N."""
    ell = [-c for c in sscale(qdilog_coefficients(N), -1)]
    lhs = series_exp(ell, N)
    rhs = psi_coefficients(PsiSpec(1), N).a
    return all(x == y for x, y in zip(lhs, rhs))
