"""Independent reference implementations used only by the tests."""
from __future__ import annotations

import numpy as np
import sympy as sp

from qgca.coeff import Coeff
from qgca.torus import ExchangeData

Q = sp.Symbol("q")


def zsym(i, s):
    return sp.Symbol(f"z{i + 1}_{s}")


def coeff_to_sympy(c: Coeff):
    num = 0
    for (qe, zm), v in c.num_terms().items():
        t = sp.Integer(v) * Q**qe
        for (i, s), e in zm:
            t *= zsym(i, s) ** e
        num += t
    den = sum(sp.Integer(v) * Q**e for e, v in c.den_terms().items())
    return num / den


def sympy_equal(a, b) -> bool:
    return sp.simplify(sp.together(a - b)) == 0


# -- noncommutative torus by brute force ----------------------------------------


def torus_product(lam, a: dict, b: dict) -> dict:
    """Products of dicts ``{exponent: Coeff}`` using ``Y^u Y^v = q^{-lam(u,v)} Y^{u+v}``."""
    out: dict = {}
    for u, cu in a.items():
        for v, cv in b.items():
            e = -sum(u[i] * lam[i][j] * v[j] for i in range(len(u)) for j in range(len(v)))
            w = tuple(x + y for x, y in zip(u, v))
            out[w] = out.get(w, Coeff(0)) + (cu * cv).q_shift(e)
    return {k: v for k, v in out.items() if not v.is_zero()}


def lam_matrix(ed: ExchangeData):
    return [[ed.r[i] * ed.d[i] * ed.B[i][j] for j in range(ed.n)] for i in range(ed.n)]


# -- tropical semifield ---------------------------------------------------------


def tropical_mutation_bruteforce(C, Bt, d, k):
    """Principal-coefficient y-mutation computed in the tropical semifield.

    Monomials are exponent vectors; the tropical sum takes componentwise
    minima.  Uses the sign-free form with all frozen coefficients equal to 1:
    ``y'_i = y_i y_k^{d_k [b_ki]_+} (min_s s c_k)^{-b_ki}``.
    """
    n = len(C)
    ck = np.array(C[k])
    trop_sum = np.minimum.reduce([s * ck for s in range(d[k] + 1)])
    out = []
    for i in range(n):
        if i == k:
            out.append(tuple(int(x) for x in -ck))
            continue
        b = Bt[k][i]
        v = np.array(C[i]) + d[k] * max(b, 0) * ck - b * trop_sum
        out.append(tuple(int(x) for x in v))
    return tuple(out)


def standard_matrix_mutation(B, k):
    """Skew-symmetrizable matrix mutation in the ``sgn(b_ik)[b_ik b_kj]_+`` form."""
    n = len(B)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-B[i][j])
            else:
                sg = (B[i][k] > 0) - (B[i][k] < 0)
                row.append(B[i][j] + sg * max(B[i][k] * B[k][j], 0))
        out.append(tuple(row))
    return tuple(out)


# -- ordinary quantum Y-mutation ------------------------------------------------


def fock_goncharov_mutate(vars_, ed: ExchangeData, Bt, k):
    """Ordinary quantum mutation ``Y_i prod_m (1 + q_k^{2m-1} Y_k^{-sgn b})^{-sgn b}``, ``b = b_ki``."""
    yk = vars_[k]
    qk = ed.qexp(k)
    out = []
    for i, yi in enumerate(vars_):
        if i == k:
            out.append(yk.inverse())
            continue
        b = Bt[k][i]
        res = yi
        sg = (b > 0) - (b < 0)
        base = yk.inverse() if sg > 0 else yk
        for m in range(1, abs(b) + 1):
            f = base.scale(Coeff.q(qk * (2 * m - 1))) + 1
            res = res * (f.inverse() if sg > 0 else f)
        out.append(res)
    return out


# -- numeric Psi from the infinite product ---------------------------------------


def psi_product_coefficients(zfull, q, N, M=400):
    """x-coefficients of ``prod_{m<M} (sum_s z_s q^{s(2m+1)} x^s)^{-1}`` in floating point."""
    coeffs = np.zeros(N + 1, dtype=complex)
    coeffs[0] = 1
    for m in range(M):
        f = np.zeros(N + 1, dtype=complex)
        for s, z in enumerate(zfull):
            if s <= N:
                f[s] = z * q ** (s * (2 * m + 1))
        inv = np.zeros(N + 1, dtype=complex)
        inv[0] = 1 / f[0]
        for n in range(1, N + 1):
            inv[n] = -sum(f[j] * inv[n - j] for j in range(1, n + 1)) / f[0]
        coeffs = np.convolve(coeffs, inv)[: N + 1]
    return coeffs


def riemann_li2d(zfull, x, points=1_000_000):
    """Midpoint rule for ``-int_0^1 log P(-x u) du / u``."""
    u = (np.arange(points) + 0.5) / points
    y = -x * u
    p = np.zeros_like(y)
    for c in zfull[::-1]:
        p = p * y + c
    return -np.sum(np.log(p) / u) / points
