"""Rank-2 example with d = (2, 1): period-6 sequence (1,2,1,2,1,2) and its identities.

``B = [[0,-1],[1,0]]``, ``r = (1,2)``, so ``q_1 = q_2 = q^2``, and one symbolic
frozen coefficient ``z = z_{1,1}``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .coeff import Coeff, zvar
from .dilog import PsiSpec, psi_of
from .errors import QGCAError
from .identity import MutationSequence, check_periodicity, tropical_identity_check, universal_identity_check
from .mutation import classical_mutate, commutation_check
from .series import DEFAULT_ORDER, ConeSeries
from .torus import ExchangeData
from .tropical import sequence_data

EXAMPLE = ExchangeData(((0, -1), (1, 0)), (2, 1), (1, 2))
SEQUENCE = (0, 1, 0, 1, 0, 1)
SIGNS = (1, 1, -1, -1, -1, -1)
CVECTORS = ((1, 0), (0, 1), (-1, 0), (-2, -1), (-1, -1), (0, -1))


def example_sequence(order: int = DEFAULT_ORDER) -> MutationSequence:
    return MutationSequence(EXAMPLE, SEQUENCE, None, order)


class _Gens:
    def __init__(self, N):
        F = EXAMPLE.form
        self.Y1 = ConeSeries.generator(F, 0, N)
        self.Y2 = ConeSeries.generator(F, 1, N)
        self.one = ConeSeries.one(F, N)
        self.z = zvar(0, 1)

    def c(self, k, z=0):
        return Coeff.q(k) * self.z**z


def closed_forms(order: int = DEFAULT_ORDER) -> dict:
    """``{t: (Y_1(t), Y_2(t))}`` for t = 2..7 expanded from the factored table.

    ``Y_1(6)`` and ``Y_2(5)`` are entered as the inverses of ``Y_1(5)`` and
    ``Y_2(4)``: the table mutates a single index per step, so the mutated
    variable is always the inverse of its predecessor.
    """
    g = _Gens(order)
    Y1, Y2, one, c = g.Y1, g.Y2, g.one, g.c
    y22 = Y2 * (one + Y1.scale(c(2, 1)) + (Y1 * Y1).scale(c(4)))
    y13 = Y1**-1 * (one + Y2.scale(c(2)) + (Y1 * Y2).scale(c(0, 1)) + (Y1 * Y1 * Y2).scale(c(-2)))
    y23 = Y2**-1 * (one + Y1.scale(c(-2, 1)) + (Y1 * Y1).scale(c(-4))) ** -1
    y14 = Y1 * (one + Y2.scale(c(-2)) + (Y1 * Y2).scale(c(-4, 1)) + (Y1 * Y1 * Y2).scale(c(-6))) ** -1
    bracket4 = (
        one
        + Y2.scale(c(2))
        + Y2.scale(c(6))
        + (Y2 * Y2).scale(c(8))
        + (Y1 * Y2).scale(c(0, 1))
        + (Y1 * Y2 * Y2).scale(c(2, 1))
        + (Y1 * Y1 * Y2 * Y2).scale(c(-4))
    )
    y24 = (Y1**-2 * Y2**-1).q_shift(-4) * bracket4
    y15 = (Y1**-1 * Y2**-1).q_shift(-2) * (one + Y2.scale(c(2)))
    return {
        2: (Y1**-1, y22),
        3: (y13, y23),
        4: (y14, y24),
        5: (y15, y24.inverse()),
        6: (y15.inverse(), Y2**-1),
        7: (Y1, Y2),
    }


def tropical_identity_product(order: int = DEFAULT_ORDER) -> ConeSeries:
    """Six-factor product with monomial arguments written out by hand."""
    g = _Gens(order)
    Y1, Y2 = g.Y1, g.Y2
    psi2 = PsiSpec(2, (g.z,), 2)
    psi1 = PsiSpec(1, (), 2)
    factors = [
        (psi2, Y1, 1),
        (psi1, Y2, 1),
        (psi2, Y1, -1),
        (psi1, (Y1 * Y1 * Y2).q_shift(-4), -1),
        (psi2, (Y1 * Y2).q_shift(-2), -1),
        (psi1, Y2, -1),
    ]
    out = g.one
    for spec, arg, e in factors:
        out = out * psi_of(spec, arg, e, order)
    return out


def universal_identity_product(order: int = DEFAULT_ORDER, forms: dict | None = None) -> ConeSeries:
    g = _Gens(order)
    Y1, Y2 = g.Y1, g.Y2
    forms = closed_forms(order) if forms is None else forms
    psi2 = PsiSpec(2, (g.z,), 2)
    psi1 = PsiSpec(1, (), 2)
    factors = [
        (psi1, Y2, -1),
        (psi2, forms[5][0].inverse(), -1),
        (psi1, forms[4][1].inverse(), -1),
        (psi2, forms[3][0].inverse(), -1),
        (psi1, forms[2][1], 1),
        (psi2, Y1, 1),
    ]
    out = g.one
    for spec, arg, e in factors:
        out = out * psi_of(spec, arg, e, order)
    return out


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


def _residual_text(res) -> str:
    if res is None:
        return "none"
    exp, c = res
    mono = "*".join(f"Y{i + 1}" + (f"^{e}" if e != 1 else "") for i, e in enumerate(exp) if e) or "1"
    return f"{c} * {mono}"


def _tampered(y: ConeSeries) -> ConeSeries:
    body = dict(y.body)
    key = sorted(k for k in body if any(k))[0]
    body[key] = -body[key]
    return ConeSeries(y.form, y.order, y.gamma, body)


def verify_example(order: int = DEFAULT_ORDER, tamper: bool = False) -> list:
    """Every check on the worked example; stops at the first exception."""
    out = []
    try:
        seq = example_sequence(order)
        seeds = seq.seeds()
        if tamper:
            s = seeds[1]
            seeds[1] = type(s)(s.ed, s.Bt, (s.vars[0], _tampered(s.vars[1])), s.trop)
        forms = closed_forms(order)
        for t in range(2, 8):
            for i in range(2):
                res = seeds[t - 1].vars[i].leading_residual(forms[t][i])
                out.append(CheckResult(f"table Y{i + 1}({t})", res is None, _residual_text(res)))
        data = sequence_data(EXAMPLE, SEQUENCE)
        got_e = tuple(e for e, _ in data)
        got_c = tuple(c for _, c in data)
        out.append(CheckResult("tropical signs", got_e == SIGNS, str(got_e)))
        out.append(CheckResult("c-vectors", got_c == CVECTORS, str(got_c)))
        mats_ok = all(s.Bt == tuple(tuple((-1) ** t * x for x in row) for row in EXAMPLE.B) for t, s in enumerate(seeds))
        out.append(CheckResult("B(t) = (-1)^(t+1) B", mats_ok))
        out.append(CheckResult("periodicity Y(7) = Y(1)", check_periodicity(seq, seeds)))
        out.append(CheckResult("commutation", all(commutation_check(s) for s in seeds)))
        classical = [v.eval_q1() for v in seeds[0].vars]
        ok = True
        for t, k in enumerate(SEQUENCE):
            classical = classical_mutate(classical, EXAMPLE, seeds[t].Bt, k, SIGNS[t])
            ok = ok and all(a.agrees(b.eval_q1()) for a, b in zip(classical, seeds[t + 1].vars))
        out.append(CheckResult("q = 1 limit", ok))
        res = tropical_identity_check(seq)
        out.append(CheckResult("tropical identity (engine)", res is None, _residual_text(res)))
        res = tropical_identity_product(order).leading_residual(1)
        out.append(CheckResult("tropical identity (explicit)", res is None, _residual_text(res)))
        res = universal_identity_check(seq, seeds)
        out.append(CheckResult("universal identity (engine)", res is None, _residual_text(res)))
        res = universal_identity_product(order).leading_residual(1)
        out.append(CheckResult("universal identity (explicit)", res is None, _residual_text(res)))
    except QGCAError as exc:
        out.append(CheckResult("internal", False, f"{type(exc).__name__}: {exc}"))
    return out
