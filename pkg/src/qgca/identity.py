"""Periodicities of mutation sequences and the dilogarithm identities they imply."""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from .dilog import PsiSpec, psi_of
from .errors import NonPositiveArgument, QGCAError, SignCoherenceViolated
from .mutation import initial_seed, mutate_seed
from .series import DEFAULT_ORDER, ConeSeries
from .torus import ExchangeData
from .tropical import sequence_data


@dataclass(frozen=True)
class MutationSequence:
    """Mutation indices ``ks`` (0-based) with a permutation ``sigma`` of the rank."""

    ed: ExchangeData
    ks: tuple
    sigma: tuple | None = None
    order: int = DEFAULT_ORDER

    def __post_init__(self):
        n = self.ed.n
        ks = tuple(int(k) for k in self.ks)
        for k in ks:
            if not 0 <= k < n:
                raise ValueError(f"mutation index {k + 1} out of range 1..{n}")
        sigma = tuple(range(n)) if self.sigma is None else tuple(int(x) for x in self.sigma)
        if sorted(sigma) != list(range(n)):
            raise ValueError(f"sigma {tuple(x + 1 for x in sigma)} is not a permutation of 1..{n}")
        if self.order < 1:
            raise ValueError("order must be positive")
        object.__setattr__(self, "ks", ks)
        object.__setattr__(self, "sigma", sigma)

    @property
    def length(self) -> int:
        return len(self.ks)

    def seeds(self) -> list:
        """``[seed(1), ..., seed(L+1)]`` along the tropical signs."""
        s = initial_seed(self.ed, self.order)
        out = [s]
        for t, k in enumerate(self.ks):
            try:
                s = mutate_seed(s, k)
            except SignCoherenceViolated as exc:
                raise SignCoherenceViolated(f"step {t + 1}: {exc}", step=t + 1, index=k) from None
            out.append(s)
        return out


def check_periodicity(seq: MutationSequence, seeds: list | None = None) -> bool:
    """``b_{sigma(i) sigma(j)}(L+1) = b_ij`` and ``Y_{sigma(i)}(L+1) = Y_i`` to the truncation order."""
    seeds = seq.seeds() if seeds is None else seeds
    first, last = seeds[0], seeds[-1]
    s = seq.sigma
    n = seq.ed.n
    if any(last.Bt[s[i]][s[j]] != first.Bt[i][j] for i in range(n) for j in range(n)):
        return False
    return all(last.vars[s[i]].agrees(first.vars[i]) for i in range(n))


def _spec(ed, k):
    return PsiSpec.from_exchange(ed, k)


def tropical_product(seq: MutationSequence) -> ConeSeries:
    """``prod_{t=1..L} Psi_{k_t}(Y^{e_t c_t})^{e_t}`` in increasing t."""
    ed, N = seq.ed, seq.order
    data = sequence_data(ed, seq.ks)
    prod = ConeSeries.one(ed.form, N)
    for k, (eps, c) in zip(seq.ks, data):
        arg = ConeSeries.monomial(ed.form, tuple(eps * x for x in c), 1, N)
        prod = prod * psi_of(_spec(ed, k), arg, eps, N)
    return prod


def universal_product(seq: MutationSequence, seeds: list | None = None) -> ConeSeries:
    """``prod_{t=L..1} Psi_{k_t}(Y_{k_t}(t)^{e_t})^{e_t}`` in decreasing t."""
    ed, N = seq.ed, seq.order
    seeds = seq.seeds() if seeds is None else seeds
    data = sequence_data(ed, seq.ks)
    prod = ConeSeries.one(ed.form, N)
    for t in reversed(range(seq.length)):
        k = seq.ks[t]
        eps = data[t][0]
        y = seeds[t].vars[k]
        arg = y if eps > 0 else y.inverse()
        try:
            factor = psi_of(_spec(ed, k), arg, eps, N)
        except NonPositiveArgument as exc:
            raise NonPositiveArgument(f"step {t + 1}: {exc}", step=t + 1) from None
        prod = prod * factor
    return prod


def _residual_repr(res):
    if res is None:
        return None
    exp, c = res
    return {"exponent": list(exp), "coefficient": str(c)}


def tropical_identity_check(seq: MutationSequence):
    """Leading term of the tropical product minus 1, or ``None``."""
    return tropical_product(seq).leading_residual(1)


def universal_identity_check(seq: MutationSequence, seeds: list | None = None):
    return universal_product(seq, seeds).leading_residual(1)


@dataclass
class VerificationReport:
    sequence: list
    sigma: list
    order: int
    sign_coherent: bool = False
    periodic: bool = False
    tropical_residual: dict | None = None
    universal_residual: dict | None = None
    steps: list = field(default_factory=list)
    error: str | None = None
    error_type: str | None = None
    skipped: str | None = None
    timings: dict = field(default_factory=dict)

    @property
    def tropical_holds(self) -> bool:
        return self.error is None and self.skipped is None and self.sign_coherent and self.tropical_residual is None

    @property
    def universal_holds(self) -> bool:
        return self.error is None and self.skipped is None and self.sign_coherent and self.universal_residual is None

    @property
    def ok(self) -> bool:
        return self.periodic and self.tropical_holds and self.universal_holds

    def to_dict(self) -> dict:
        out = asdict(self)
        out.update(
            tropical_identity=self.tropical_holds,
            universal_identity=self.universal_holds,
            ok=self.ok,
        )
        return out


def run_report(seq: MutationSequence, timing: bool = False) -> VerificationReport:
    """Full verification of one sequence; errors are recorded, never raised."""
    rep = VerificationReport(
        sequence=[k + 1 for k in seq.ks], sigma=[s + 1 for s in seq.sigma], order=seq.order
    )
    clock = time.perf_counter
    try:
        t0 = clock()
        data = sequence_data(seq.ed, seq.ks)
        rep.sign_coherent = True
        rep.steps = [
            {"t": t + 1, "k": k + 1, "sign": "+" if e > 0 else "-", "c": list(c)}
            for t, (k, (e, c)) in enumerate(zip(seq.ks, data))
        ]
        seeds = seq.seeds()
        rep.periodic = check_periodicity(seq, seeds)
        for st, s in zip(rep.steps, seeds[1:]):
            st["terms"] = [len(v.body) for v in s.vars]
        t1 = clock()
        if not rep.periodic:
            rep.skipped = "sequence is not periodic; identities not attached"
            return rep
        rep.tropical_residual = _residual_repr(tropical_identity_check(seq))
        t2 = clock()
        rep.universal_residual = _residual_repr(universal_identity_check(seq, seeds))
        t3 = clock()
        if timing:
            rep.timings = {"mutation": t1 - t0, "tropical": t2 - t1, "universal": t3 - t2}
    except QGCAError as exc:
        rep.error, rep.error_type = str(exc), type(exc).__name__
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        rep.error, rep.error_type = str(exc), type(exc).__name__
    return rep
