"""Numeric checks of the analytic statements about Psi and its classical limit."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import integrate

from ..errors import BranchAmbiguity, PoleOnPath
from .kernels import li2_series, psi_log_kernel, qdilog_series


@dataclass(frozen=True)
class NumericConfig:
    terms: int = 100_000
    quad_limit: int = 200
    tolerance: float = 1e-3
    identity_tolerance: float = 1e-8
    q_path: tuple = (0.9, 0.99, 0.999)
    series_terms: int = 200
    branch_tol: float = 1e-12

    def __post_init__(self):
        if self.terms < 1:
            raise ValueError("terms must be at least 1")
        if self.tolerance <= 0 or self.identity_tolerance <= 0:
            raise ValueError("tolerances must be positive")
        if not self.q_path or any(not 0 < q < 1 for q in self.q_path):
            raise ValueError("every q on the path must lie in (0, 1)")
        object.__setattr__(self, "q_path", tuple(float(q) for q in self.q_path))


@dataclass
class NumericReport:
    name: str
    passed: bool
    residuals: list = field(default_factory=list)
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "residuals": self.residuals, "detail": self.detail}


def full_z(d: int, zvals=None) -> list:
    zvals = (1.0,) * (d - 1) if zvals is None else tuple(zvals)
    if len(zvals) != d - 1:
        raise ValueError(f"degree {d} needs {d - 1} coefficients")
    return [1.0, *zvals, 1.0]


def numeric_psi_log(d: int, zvals, q: float, x: complex, cfg: NumericConfig = NumericConfig()) -> complex:
    """``-sum_{m<M} log(sum_s z_s q^{s(2m+1)} x^s)`` on the principal branch."""
    if not 0 < q < 1:
        raise ValueError("q must lie in (0, 1)")
    value, bad, _ = psi_log_kernel(full_z(d, zvals), q, x, cfg.terms, cfg.branch_tol)
    if bad:
        raise BranchAmbiguity(f"a product factor meets the negative real axis (d={d}, q={q}, x={x})")
    return value


def _poly(zf, y):
    return sum(c * y**s for s, c in enumerate(zf))


def li2d_numeric(d: int, zvals, x: float, cfg: NumericConfig = NumericConfig()) -> float:
    """``-int_0^{-x} log(sum_s z_s y^s) dy / y`` by adaptive quadrature.

    With ``y = -x u`` the integrand becomes ``log P(-x u) / u`` on ``[0, 1]``,
    whose limit at ``u = 0`` is ``-x z_1``.
    """
    x = float(x)
    if x == 0:
        return 0.0
    zf = full_z(d, zvals)
    roots = np.roots(zf[::-1])
    for rt in roots:
        if abs(rt.imag) < 1e-12 and 0 <= rt.real / -x <= 1:
            raise PoleOnPath(f"sum z_s y^s vanishes at y = {rt.real:.6g} between 0 and {-x}")

    def f(u):
        if u == 0:
            return -x * zf[1]
        return math.log(_poly(zf, -x * u)) / u

    val, _ = integrate.quad(f, 0.0, 1.0, limit=cfg.quad_limit, epsabs=1e-15, epsrel=1e-13)
    return -val


def li2(x: complex, terms: int = 200) -> complex:
    return li2_series(x, terms)


def qdilog(x: complex, q: float, terms: int = 200) -> complex:
    """``sum_n x^n / (n (q^n - q^{-n}))``."""
    return qdilog_series(x, q, terms)


def asymptotics_check(d: int, zvals, x: float, cfg: NumericConfig = NumericConfig()) -> NumericReport:
    """``(1 - q^2) log Psi(x) - Li_{2;d,z}(-x)`` along the q path."""
    name = f"asymptotics d={d} x={x}"
    try:
        target = li2d_numeric(d, zvals, -x, cfg)
        res = []
        for q in cfg.q_path:
            v = (1 - q * q) * numeric_psi_log(d, zvals, q, x, cfg)
            res.append(abs(v - target))
    except (BranchAmbiguity, PoleOnPath) as exc:
        return NumericReport(name, False, [], f"{type(exc).__name__}: {exc}")
    monotone = all(b <= a for a, b in zip(res, res[1:]))
    ok = monotone and res[-1] < cfg.tolerance
    detail = "" if ok else ("residual not decreasing" if not monotone else f"final residual {res[-1]:.3g} >= {cfg.tolerance:g}")
    return NumericReport(name, ok, res, detail)


def _omega(d):
    return cmath.exp(2j * math.pi / (d + 1))


def li2_factorization_residual(d: int, x: complex, terms: int = 200) -> float:
    """``|Li2(x^{d+1})/(d+1) - sum_{s=0}^d Li2(w^s x)|``."""
    w = _omega(d)
    lhs = li2(x ** (d + 1), terms) / (d + 1)
    return abs(lhs - sum(li2(w**s * x, terms) for s in range(d + 1)))


def qdilog_factorization_residual(d: int, x: complex, q: float, terms: int = 200) -> float:
    """``|L_{2,q^{d+1}}(x^{d+1}) - sum_{s=0}^d L_{2,q}(w^s x)|``."""
    w = _omega(d)
    lhs = qdilog(x ** (d + 1), q ** (d + 1), terms)
    return abs(lhs - sum(qdilog(w**s * x, q, terms) for s in range(d + 1)))


def roots_of_unity_checks(d: int, cfg: NumericConfig = NumericConfig(), xs=(0.1, 0.25, 0.3, -0.4), qs=(0.3, 0.6)) -> NumericReport:
    res = [li2_factorization_residual(d, x, cfg.series_terms) for x in xs]
    res += [qdilog_factorization_residual(d, x, q, cfg.series_terms) for x in xs for q in qs]
    worst = max(res)
    return NumericReport(f"roots of unity d={d}", worst < cfg.identity_tolerance, res, f"max residual {worst:.3g}")


def product_factorization_residual(d: int, q: float, x: complex, cfg: NumericConfig = NumericConfig()) -> float:
    """``log Psi_{d,1,q}(x)`` against ``sum_{s=1}^d log Psi_q(-w^s x)``."""
    w = _omega(d)
    lhs = numeric_psi_log(d, None, q, x, cfg)
    rhs = sum(numeric_psi_log(1, (), q, -(w**s) * x, cfg) for s in range(1, d + 1))
    return abs(lhs - rhs)


def split_residual(d: int, q: float, x: complex, cfg: NumericConfig = NumericConfig()) -> float:
    """``log Psi_{d,1,q}(x)`` against ``log Psi_{q^{d+1}}(-x^{d+1}) - log Psi_q(-x)``."""
    lhs = numeric_psi_log(d, None, q, x, cfg)
    rhs = numeric_psi_log(1, (), q ** (d + 1), -(x ** (d + 1)), cfg) - numeric_psi_log(1, (), q, -x, cfg)
    return abs(lhs - rhs)


def factorization_checks(d: int, cfg: NumericConfig = NumericConfig(), samples=((0.5, 0.3), (0.9, 0.1), (0.95, -0.2))) -> NumericReport:
    res = []
    for q, x in samples:
        res.append(product_factorization_residual(d, q, x, cfg))
        res.append(split_residual(d, q, x, cfg))
    worst = max(res)
    return NumericReport(f"product factorizations d={d}", worst < cfg.identity_tolerance, res, f"max residual {worst:.3g}")


def truncation_convergence(d: int, zvals, q: float, x: complex, M: int = 20) -> list:
    """Product-truncation errors at ``M, 2M, 4M`` against a long reference product."""
    ref = numeric_psi_log(d, zvals, q, x, NumericConfig(terms=64 * M))
    return [abs(numeric_psi_log(d, zvals, q, x, NumericConfig(terms=m)) - ref) for m in (M, 2 * M, 4 * M)]


def run_suite(cfg: NumericConfig = NumericConfig(), cases=((1, 0.2), (2, 0.1), (3, 0.05))) -> list:
    out = [asymptotics_check(d, None, x, cfg) for d, x in cases]
    for d in sorted({d for d, _ in cases}):
        out.append(roots_of_unity_checks(d, cfg))
        out.append(factorization_checks(d, cfg))
    return out
