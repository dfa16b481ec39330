"""Hot loops of the numeric layer.

Each kernel has a numba version and a vectorized numpy version with the same
signature.  Setting ``QGCA_DISABLE_NUMBA=1`` (or lacking numba) selects numpy.
"""
from __future__ import annotations

import os

import numpy as np


def _env_disabled() -> bool:
    return os.environ.get("QGCA_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")


# -- numpy -------------------------------------------------------------------


def psi_log_numpy(zfull, q, x, M, branch_tol):
    """``(-sum_{m<M} log P(q^{2m+1} x), min |arg P + pi|)`` with ``P = sum z_s y^s``."""
    zfull = np.asarray(zfull, dtype=np.complex128)
    y = x * q ** (2.0 * np.arange(M) + 1.0)
    f = np.zeros(M, dtype=np.complex128)
    for c in zfull[::-1]:
        f = f * y + c
    gap = np.min(np.abs(np.abs(np.angle(f)) - np.pi)) if M else np.inf
    bad = np.any((f.real < 0) & (np.abs(f.imag) <= branch_tol * np.abs(f))) or np.any(f == 0)
    return -np.sum(np.log(f)), bool(bad), float(gap)


def li2_series_numpy(x, terms):
    n = np.arange(1, terms + 1, dtype=np.float64)
    return np.sum(np.asarray(x, dtype=np.complex128) ** n / n**2)


def qdilog_series_numpy(x, q, terms):
    # x^n / (n (q^n - q^-n)) = (q x)^n / (n (q^{2n} - 1)), which stays finite for small q
    n = np.arange(1, terms + 1, dtype=np.float64)
    return np.sum((q * np.asarray(x, dtype=np.complex128)) ** n / (n * (q ** (2 * n) - 1.0)))


# -- numba -------------------------------------------------------------------

try:
    from numba import njit

    @njit(cache=True)
    def psi_log_numba(zfull, q, x, M, branch_tol):
        total = 0j
        bad = False
        gap = np.inf
        qq = q * q
        qm = q + 0j
        for m in range(M):
            y = x * qm
            f = 0j
            for j in range(zfull.shape[0] - 1, -1, -1):
                f = f * y + zfull[j]
            a = np.angle(f)
            g = abs(abs(a) - np.pi)
            if g < gap:
                gap = g
            if f == 0 or (f.real < 0 and abs(f.imag) <= branch_tol * abs(f)):
                bad = True
            total -= np.log(f)
            qm *= qq
        return total, bad, gap

    @njit(cache=True)
    def li2_series_numba(x, terms):
        s = 0j
        p = 1.0 + 0j
        for n in range(1, terms + 1):
            p *= x
            s += p / (n * n)
        return s

    @njit(cache=True)
    def qdilog_series_numba(x, q, terms):
        s = 0j
        p = 1.0 + 0j
        q2n = 1.0
        for n in range(1, terms + 1):
            p *= q * x
            q2n *= q * q
            s += p / (n * (q2n - 1.0))
        return s

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False


def use_numba() -> bool:
    return HAVE_NUMBA and not _env_disabled()


def psi_log_kernel(zfull, q, x, M, branch_tol):
    if use_numba():
        v, bad, gap = psi_log_numba(np.asarray(zfull, dtype=np.complex128), float(q), complex(x), int(M), float(branch_tol))
    else:
        v, bad, gap = psi_log_numpy(zfull, float(q), complex(x), int(M), float(branch_tol))
    return complex(v), bool(bad), float(gap)


def li2_series(x, terms=200):
    if use_numba():
        return complex(li2_series_numba(complex(x), int(terms)))
    return complex(li2_series_numpy(complex(x), int(terms)))


def qdilog_series(x, q, terms=200):
    if use_numba():
        return complex(qdilog_series_numba(complex(x), float(q), int(terms)))
    return complex(qdilog_series_numpy(complex(x), float(q), int(terms)))
