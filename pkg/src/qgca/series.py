"""Truncated series in the quantum torus supported on a shifted orthant.

A :class:`ConeSeries` with prefactor ``gamma`` and body ``{delta: c}`` stands
for ``sum_delta c * Y^{gamma + delta}`` (normal-ordered monomials), where every
``delta`` has non-negative entries and total degree ``<= order``.  All terms of
relative degree up to ``order`` are exact; higher ones are unknown.
"""
from __future__ import annotations

from typing import Mapping

from .coeff import Coeff
from .errors import MixedAlgebra, NonUnitConstantTerm, NotConeEmbeddable, PrefactorMisaligned
from .torus import ExchangeData, SkewForm, TorusElement

DEFAULT_ORDER = 12


def _deg(a) -> int:
    return sum(a)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _min(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def _as_form(form):
    return form.form if isinstance(form, ExchangeData) else form


def _as_coeff(c):
    return c if isinstance(c, Coeff) else Coeff(c)


class ConeSeries:
    __slots__ = ("form", "order", "gamma", "body")

    def __init__(self, form, order: int, gamma, body: Mapping | None = None):
        form = _as_form(form)
        self.form: SkewForm = form
        self.order = int(order)
        self.gamma = tuple(int(x) for x in gamma)
        clean = {}
        for delta, c in (body or {}).items():
            delta = tuple(int(x) for x in delta)
            if min(delta, default=0) < 0:
                raise NotConeEmbeddable(f"body exponent {delta} leaves the non-negative cone")
            if _deg(delta) > self.order:
                continue
            c = _as_coeff(c)
            if not c.is_zero():
                clean[delta] = c
        self.body = clean

    @classmethod
    def _trusted(cls, form, order, gamma, body):
        obj = cls.__new__(cls)
        obj.form, obj.order, obj.gamma, obj.body = form, order, gamma, body
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def monomial(cls, form, a, coeff=1, order: int = DEFAULT_ORDER) -> "ConeSeries":
        form = _as_form(form)
        return cls(form, order, a, {(0,) * form.n: coeff})

    @classmethod
    def generator(cls, form, i: int, order: int = DEFAULT_ORDER) -> "ConeSeries":
        form = _as_form(form)
        a = [0] * form.n
        a[i] = 1
        return cls.monomial(form, a, 1, order)

    @classmethod
    def one(cls, form, order: int = DEFAULT_ORDER) -> "ConeSeries":
        form = _as_form(form)
        return cls.monomial(form, (0,) * form.n, 1, order)

    @classmethod
    def zero(cls, form, order: int = DEFAULT_ORDER) -> "ConeSeries":
        form = _as_form(form)
        return cls(form, order, (0,) * form.n, {})

    @classmethod
    def scalar(cls, form, c, order: int = DEFAULT_ORDER) -> "ConeSeries":
        return cls.monomial(form, (0,) * _as_form(form).n, c, order)

    @classmethod
    def from_torus(cls, a: TorusElement, order: int = DEFAULT_ORDER) -> "ConeSeries":
        n = a.form.n
        if not a.terms:
            return cls.zero(a.form, order)
        exps = list(a.terms)
        gamma = exps[0]
        for e in exps[1:]:
            gamma = _min(gamma, e)
        body = {_sub(e, gamma): c for e, c in a.terms.items()}
        if all(_deg(d) > order for d in body):
            raise NotConeEmbeddable(
                f"no term of the support survives truncation at order {order} from prefactor {gamma}"
            )
        return cls(a.form, order, gamma if n else (), body)

    # -- views --------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.form.n

    def terms(self) -> dict:
        """Absolute exponents ``gamma + delta`` mapped to coefficients."""
        return {_add(self.gamma, d): c for d, c in self.body.items()}

    def constant_term(self) -> Coeff:
        return self.body.get((0,) * self.n, Coeff(0))

    def is_zero(self) -> bool:
        return not self.body

    def to_torus(self) -> TorusElement:
        return TorusElement(self.form, self.terms())

    def with_order(self, order: int) -> "ConeSeries":
        return ConeSeries(self.form, min(order, self.order), self.gamma, self.body)

    def shift_to(self, gamma) -> "ConeSeries":
        """Re-express with a smaller prefactor (componentwise ``<=``)."""
        gamma = tuple(gamma)
        off = _sub(self.gamma, gamma)
        if min(off, default=0) < 0:
            raise PrefactorMisaligned(f"cannot move prefactor {self.gamma} up to {gamma}")
        if off == (0,) * self.n:
            return self
        body = {_add(d, off): c for d, c in self.body.items() if _deg(d) + _deg(off) <= self.order}
        return ConeSeries._trusted(self.form, self.order, gamma, body)

    # -- ring operations --------------------------------------------------

    def _check(self, other: "ConeSeries"):
        if self.form != other.form:
            raise MixedAlgebra("series over different quantum tori")

    def _lift(self, x) -> "ConeSeries":
        if isinstance(x, ConeSeries):
            self._check(x)
            return x
        if isinstance(x, TorusElement):
            if x.form != self.form:
                raise MixedAlgebra("series and torus element over different quantum tori")
            return ConeSeries.from_torus(x, self.order)
        return ConeSeries.scalar(self.form, x, self.order)

    def __add__(self, other):
        other = self._lift(other)
        if other.is_zero():
            return self.with_order(other.order)
        if self.is_zero():
            return other.with_order(self.order)
        N = min(self.order, other.order)
        # an operand lying more than N degrees above the common prefactor is
        # entirely beyond the exact range and drops out
        g = _min(self.gamma, other.gamma)
        a = self.with_order(N).shift_to(g)
        b = other.with_order(N).shift_to(g)
        body = dict(a.body)
        for d, c in b.body.items():
            if d in body:
                s = body[d] + c
                if s.is_zero():
                    del body[d]
                else:
                    body[d] = s
            else:
                body[d] = c
        return ConeSeries._trusted(self.form, N, g, body)

    __radd__ = __add__

    def __neg__(self):
        return ConeSeries._trusted(self.form, self.order, self.gamma, {d: -c for d, c in self.body.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c) -> "ConeSeries":
        c = _as_coeff(c)
        if c.is_zero():
            return ConeSeries.zero(self.form, self.order)
        return ConeSeries._trusted(self.form, self.order, self.gamma, {d: v * c for d, v in self.body.items()})

    def q_shift(self, k: int) -> "ConeSeries":
        """Multiply by the central scalar ``q**k``."""
        return ConeSeries._trusted(self.form, self.order, self.gamma, {d: v.q_shift(k) for d, v in self.body.items()})

    def __mul__(self, other):
        if not isinstance(other, (ConeSeries, TorusElement)):
            return self.scale(other)
        other = self._lift(other)
        N = min(self.order, other.order)
        form = self.form
        gamma = _add(self.gamma, other.gamma)
        commutative = form.is_commutative
        bterms = sorted(
            ((_deg(d), d, _add(other.gamma, d), c) for d, c in other.body.items()), key=lambda t: t[0]
        )
        acc: dict = {}
        for da_vec, ca in self.body.items():
            da = _deg(da_vec)
            if da > N:
                continue
            row = None if commutative else form.row(_add(self.gamma, da_vec))
            for db, db_vec, babs, cb in bterms:
                if da + db > N:
                    break
                e = 0 if commutative else -sum(x * y for x, y in zip(row, babs))
                acc.setdefault(_add(da_vec, db_vec), []).append((ca, cb, e))
        body = {}
        for k, triples in acc.items():
            c = Coeff.sum_products(triples)
            if not c.is_zero():
                body[k] = c
        return ConeSeries._trusted(form, N, gamma, body)

    def __rmul__(self, other):
        if isinstance(other, TorusElement):
            return self._lift(other) * self
        return self.scale(other)

    def inverse(self) -> "ConeSeries":
        n = self.n
        zero = (0,) * n
        c0 = self.body.get(zero)
        if c0 is None or c0.is_zero():
            raise NonUnitConstantTerm("series has no constant term relative to its prefactor")
        if not c0.is_z_free():
            raise NonUnitConstantTerm(f"constant term {c0} is not invertible")
        form, gamma, N = self.form, self.gamma, self.order
        # S = Y^gamma T  with  t_delta = c_delta q^{lam(gamma, delta)}
        grow = form.row(gamma)
        t = {d: c.q_shift(sum(x * y for x, y in zip(grow, d))) for d, c in self.body.items()}
        t0inv = t[zero].inverse()
        tnz = sorted(((_deg(a), a, form.row(a), c) for a, c in t.items() if a != zero), key=lambda x: x[0])
        u = {zero: t0inv}
        targets = sorted(_cone(n, N), key=_deg)
        for delta in targets:
            if delta == zero:
                continue
            dd = _deg(delta)
            triples = []
            for da, a, arow, ca in tnz:
                if da > dd:
                    break
                rest = _sub(delta, a)
                if min(rest) < 0:
                    continue
                ub = u.get(rest)
                if ub is None:
                    continue
                triples.append((ca, ub, -sum(x * y for x, y in zip(arow, rest))))
            if triples:
                s = Coeff.sum_products(triples)
                if not s.is_zero():
                    u[delta] = -(s * t0inv)
        # S^{-1} = U Y^{-gamma}
        body = {}
        for d, c in u.items():
            body[d] = c.q_shift(sum(x * y for x, y in zip(form.row(d), gamma)))
        return ConeSeries._trusted(form, N, tuple(-x for x in gamma), body)

    def __pow__(self, m: int):
        m = int(m)
        if m < 0:
            return self.inverse() ** (-m)
        result = ConeSeries.one(self.form, self.order)
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, ConeSeries):
            return self * other.inverse()
        return self.scale(_as_coeff(other).inverse())

    # -- comparison -------------------------------------------------------

    def difference_terms(self, other: "ConeSeries") -> dict:
        """Nonzero terms of ``self - other`` over the range where both are exact.

        Keys are absolute exponents.
        """
        other = self._lift(other)
        g = _min(self.gamma, other.gamma)
        bound = min(
            self.order + _deg(_sub(self.gamma, g)),
            other.order + _deg(_sub(other.gamma, g)),
        )
        out = {}
        a = {_sub(_add(self.gamma, d), g): c for d, c in self.body.items()}
        b = {_sub(_add(other.gamma, d), g): c for d, c in other.body.items()}
        for k in set(a) | set(b):
            if _deg(k) > bound:
                continue
            diff = a.get(k, Coeff(0)) - b.get(k, Coeff(0))
            if not diff.is_zero():
                out[_add(g, k)] = diff
        return out

    def agrees(self, other) -> bool:
        return not self.difference_terms(other)

    def __eq__(self, other):
        if not isinstance(other, (ConeSeries, TorusElement, int, Coeff)):
            return NotImplemented
        try:
            return self.agrees(other)
        except MixedAlgebra:
            return False

    __hash__ = None

    def leading_residual(self, other=1):
        """Lexicographically least term of ``self - other`` (or ``None``)."""
        diff = self.difference_terms(other)
        if not diff:
            return None
        k = min(diff)
        return k, diff[k]

    def is_positive(self) -> bool:
        """True when every term has a non-negative, nonzero exponent."""
        if min(self.gamma, default=0) < 0:
            return False
        if _deg(self.gamma) == 0 and (0,) * self.n in self.body:
            return False
        return True

    # -- specialisation -------------------------------------------------

    def eval_q1(self) -> "ConeSeries":
        """Classical image at q = 1 in the commutative torus."""
        body = {d: c.eval_q1() for d, c in self.body.items()}
        return ConeSeries(SkewForm.zero(self.n), self.order, self.gamma, body)

    def __repr__(self):
        return f"ConeSeries(gamma={self.gamma}, order={self.order}, {len(self.body)} terms)"

    def pretty(self, symbol: str = "Y") -> str:
        if not self.body:
            return "0"
        parts = []
        for k, c in sorted(self.terms().items(), key=lambda kv: (_deg(_sub(kv[0], self.gamma)), kv[0])):
            mono = "*".join(
                f"{symbol}{i + 1}" + (f"^{e}" if e != 1 else "") if e >= 0 else f"{symbol}{i + 1}^({e})"
                for i, e in enumerate(k)
                if e
            )
            cs = str(c)
            if " " in cs and not cs.startswith("("):
                cs = f"({cs})"
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts) + f" + O(deg>{self.order})"


_cone_cache: dict = {}


def _cone(n: int, N: int) -> list:
    key = (n, N)
    if key not in _cone_cache:
        out = []

        def rec(prefix, left):
            if len(prefix) == n:
                out.append(tuple(prefix))
                return
            for k in range(left + 1):
                rec(prefix + [k], left - k)

        rec([], N)
        _cone_cache[key] = out
    return _cone_cache[key]


def from_torus(a: TorusElement, N: int = DEFAULT_ORDER) -> ConeSeries:
    return ConeSeries.from_torus(a, N)


def series_mul(a: ConeSeries, b: ConeSeries) -> ConeSeries:
    return a * b


def series_add(a: ConeSeries, b: ConeSeries) -> ConeSeries:
    return a + b


def series_invert(a: ConeSeries) -> ConeSeries:
    return a.inverse()


def series_pow(a: ConeSeries, m: int) -> ConeSeries:
    return a ** m


def series_eval_q1(a: ConeSeries) -> ConeSeries:
    return a.eval_q1()
