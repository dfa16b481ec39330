"""Tropical y-seed dynamics: c-vectors and tropical signs.

With principal coefficients ``y_i(t) = y^{c_i(t)}``.  Tropicalizing the
generalized y-mutation at the tropical sign ``e`` of ``c_k`` makes the sum
``sum_s z_{k,s} y_k^{e s}`` tropically trivial, leaving

    c'_k = -c_k,    c'_i = c_i + d_k [e b_ki]_+ c_k   (i != k).
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import SignCoherenceViolated
from .torus import ExchangeData, mutate_matrix


@dataclass(frozen=True)
class TropicalState:
    """Rows of ``C`` are the c-vectors of ``y_i(t)``; ``Bt`` is the current matrix."""

    C: tuple
    Bt: tuple
    d: tuple

    @classmethod
    def initial(cls, ed: ExchangeData) -> "TropicalState":
        n = ed.n
        C = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        return cls(C, ed.B, ed.d)


def row_sign(row) -> int:
    if any(row) and all(x >= 0 for x in row):
        return 1
    if any(row) and all(x <= 0 for x in row):
        return -1
    raise SignCoherenceViolated(f"c-vector {tuple(row)} is not sign-coherent")


def tropical_sign(state: TropicalState, k: int) -> int:
    try:
        return row_sign(state.C[k])
    except SignCoherenceViolated as exc:
        raise SignCoherenceViolated(str(exc), index=k) from None


def tropical_mutate(state: TropicalState, k: int) -> TropicalState:
    eps = tropical_sign(state, k)
    ck = state.C[k]
    dk = state.d[k]
    rows = []
    for i, ci in enumerate(state.C):
        if i == k:
            rows.append(tuple(-x for x in ck))
        else:
            m = dk * max(eps * state.Bt[k][i], 0)
            rows.append(tuple(x + m * y for x, y in zip(ci, ck)) if m else ci)
    return TropicalState(tuple(rows), mutate_matrix(state.Bt, state.d, k), state.d)


def sequence_data(ed: ExchangeData, ks) -> list:
    """``(eps_t, c_t)`` for the mutated index at every step of ``ks``."""
    state = TropicalState.initial(ed)
    out = []
    for t, k in enumerate(ks):
        try:
            eps = tropical_sign(state, k)
        except SignCoherenceViolated as exc:
            raise SignCoherenceViolated(f"step {t + 1}: {exc}", step=t + 1, index=k) from None
        out.append((eps, state.C[k]))
        state = tropical_mutate(state, k)
    return out
