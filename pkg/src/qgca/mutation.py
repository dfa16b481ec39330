"""Quantum Y-seeds and their mutation.

Mutation at ``k`` with sign ``e`` splits into a monomial part (a change of
torus basis) and the adjoint action of ``Psi_k(Y_k^e)^e``.  The product of
the two does not depend on ``e``; the tropical sign is used by default.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coeff import Coeff
from .dilog import PsiSpec, psi_of
from .errors import NonPositiveArgument, SignCoherenceViolated
from .series import DEFAULT_ORDER, ConeSeries
from .torus import ExchangeData, SkewForm, mutate_matrix
from .tropical import TropicalState, tropical_mutate, tropical_sign

__all__ = [
    "QuantumSeed",
    "initial_seed",
    "mutate_matrix",
    "monomial_part",
    "adjoint_action",
    "mutate_seed",
    "epsilon_independence_check",
    "commutation_check",
    "classical_mutate",
]


def _pos(a: int) -> int:
    return a if a > 0 else 0


def _sgn(a: int) -> int:
    return (a > 0) - (a < 0)


@dataclass(frozen=True)
class QuantumSeed:
    """``(B(t), Y(t))`` with the Y-variables expressed in the initial torus."""

    ed: ExchangeData
    Bt: tuple
    vars: tuple
    trop: TropicalState | None

    @property
    def n(self) -> int:
        return self.ed.n

    @property
    def order(self) -> int:
        return min(v.order for v in self.vars)

    def __getitem__(self, i) -> ConeSeries:
        return self.vars[i]


def initial_seed(ed: ExchangeData, N: int = DEFAULT_ORDER) -> QuantumSeed:
    gens = tuple(ConeSeries.generator(ed.form, i, N) for i in range(ed.n))
    return QuantumSeed(ed, ed.B, gens, TropicalState.initial(ed))


def monomial_part(seed: QuantumSeed, k: int, eps: int) -> list:
    """Images of ``Y_i`` under the monomial part of the mutation at ``k``."""
    ed, Bt = seed.ed, seed.Bt
    dk = ed.d[k]
    yk = seed.vars[k]
    out = []
    for i, yi in enumerate(seed.vars):
        if i == k:
            out.append(yk.inverse())
            continue
        p = dk * _pos(eps * Bt[k][i])
        if p == 0:
            out.append(yi)
            continue
        out.append((yi * yk**p).q_shift(ed.qexp(i) * Bt[i][k] * p))
    return out


def _closed_factor(ed: ExchangeData, k: int, eps: int, bki: int, ypow: list, N: int) -> ConeSeries:
    """``prod_m (sum_s z_{k,s} q_k^{-e sgn(b)(2m-1)s} Y_k^{e s})^{-sgn(b)}``."""
    form = ypow[0].form
    result = ConeSeries.one(form, N)
    if bki == 0:
        return result
    sg = _sgn(bki)
    zs = ed.zlist(k)
    qk = ed.qexp(k)
    for m in range(1, abs(bki) + 1):
        poly = ConeSeries.zero(form, N)
        for s, zk in enumerate(zs):
            poly = poly + ypow[s].scale(zk.q_shift(-eps * sg * (2 * m - 1) * s * qk))
        result = result * (poly if sg < 0 else poly.inverse())
    return result


def _eps_powers(yk: ConeSeries, eps: int, d: int, N: int) -> list:
    base = yk if eps > 0 else yk.inverse()
    out = [ConeSeries.one(yk.form, N), base]
    for _ in range(2, d + 1):
        out.append(out[-1] * base)
    return out[: d + 1]


def adjoint_action(seed: QuantumSeed, k: int, eps: int, target, i: int | None = None) -> ConeSeries:
    """``Ad(Psi_k(Y_k^e)^e)`` applied after the monomial part.

    With ``i`` given, ``target`` is the monomial-part image of ``Y_i`` and
    the closed product formula is used.  Otherwise ``target`` is conjugated
    by ``Psi_k(Y_k^e)^{+-e}`` directly, which needs ``Y_k^e`` of positive
    degree.
    """
    ed = seed.ed
    yk = seed.vars[k]
    N = min(seed.order, target.order)
    if i is not None:
        if i == k:
            return target
        ypow = _eps_powers(yk, eps, ed.d[k], N)
        return target * _closed_factor(ed, k, eps, seed.Bt[k][i], ypow, N)
    arg = yk if eps > 0 else yk.inverse()
    if not arg.is_positive():
        raise NonPositiveArgument(f"Y_{k + 1}^{eps:+d} has prefactor {arg.gamma}; cannot conjugate directly")
    spec = PsiSpec.from_exchange(ed, k)
    return psi_of(spec, arg, eps, N) * target * psi_of(spec, arg, -eps, N)


def mutate_seed(seed: QuantumSeed, k: int, eps: int | None = None) -> QuantumSeed:
    """Mutation at ``k``; ``eps`` defaults to the tropical sign of ``c_k``."""
    if eps is None:
        if seed.trop is None:
            raise SignCoherenceViolated("tropical sign unavailable after a non-sign-coherent step", index=k)
        eps = tropical_sign(seed.trop, k)
    if eps not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    ed = seed.ed
    N = seed.order
    yk = seed.vars[k]
    mono = monomial_part(seed, k, eps)
    ypow = _eps_powers(yk, eps, ed.d[k], N)
    new = []
    for i, zi in enumerate(mono):
        if i == k:
            new.append(zi)
        else:
            new.append(zi * _closed_factor(ed, k, eps, seed.Bt[k][i], ypow, N))
    try:
        trop = None if seed.trop is None else tropical_mutate(seed.trop, k)
    except SignCoherenceViolated:
        trop = None
    return QuantumSeed(ed, mutate_matrix(seed.Bt, ed.d, k), tuple(new), trop)


def epsilon_independence_check(seed: QuantumSeed, k: int) -> bool:
    plus = mutate_seed(seed, k, 1)
    minus = mutate_seed(seed, k, -1)
    return all(a.agrees(b) for a, b in zip(plus.vars, minus.vars))


def commutation_check(seed: QuantumSeed) -> bool:
    """``Y_i(t) Y_j(t) = q^{2 r_j d_j b_ji(t)} Y_j(t) Y_i(t)`` for all pairs."""
    ed, Bt = seed.ed, seed.Bt
    for i in range(seed.n):
        for j in range(i + 1, seed.n):
            lhs = seed.vars[i] * seed.vars[j]
            rhs = (seed.vars[j] * seed.vars[i]).q_shift(2 * ed.r[j] * ed.d[j] * Bt[j][i])
            if not lhs.agrees(rhs):
                return False
    return True


def classical_mutate(yvars, ed: ExchangeData, Bt, k: int, eps: int = 1) -> list:
    """Commutative y-mutation ``y_i y_k^{d_k[e b_ki]_+} (sum_s z_s y_k^{e s})^{-b_ki}``.

    ``yvars`` are series over the commutative torus; the frozen coefficients
    are specialised at ``q = 1``.
    """
    form = SkewForm.zero(ed.n)
    yk = yvars[k]
    N = min(v.order for v in yvars)
    yke = yk if eps > 0 else yk.inverse()
    poly = ConeSeries.zero(form, N)
    power = ConeSeries.one(form, N)
    for s in range(ed.d[k] + 1):
        poly = poly + power.scale(Coeff(ed.zcoeff(k, s).eval_q1()))
        power = power * yke
    out = []
    for i, yi in enumerate(yvars):
        if i == k:
            out.append(yk.inverse())
            continue
        b = Bt[k][i]
        out.append(yi * yk ** (ed.d[k] * _pos(eps * b)) * poly ** (-b))
    return out
