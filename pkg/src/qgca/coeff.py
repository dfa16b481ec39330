"""Exact scalars: Laurent polynomials in q with polynomial dependence on the
frozen coefficients z, over z-free polynomial denominators in q.

A :class:`Coeff` is stored as ``q**shift * num / den`` where ``num`` and ``den``
are integer polynomials in a shared ``fmpz_mpoly`` context with generators
``q, z..``.  ``den`` never involves a z generator, has nonzero constant term
and positive leading coefficient.  Both polynomials are kept free of powers
of q (those live in ``shift``), so the representation is canonical once the
fraction is reduced.

Reduction only ever needs a gcd against the univariate ``den``, which keeps
the fraction arithmetic effectively univariate.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from numbers import Integral, Rational
from typing import Iterable, Mapping

from flint import fmpz_mpoly_ctx

from .errors import CoeffZeroDivision, NumericPole, PoleAtOne, UnboundZ, ZDependentInverse

__all__ = [
    "Coeff",
    "ZMonomial",
    "zvar",
    "qpow",
    "coeff_add",
    "coeff_mul",
    "coeff_invert",
    "coeff_eval_q1",
    "coeff_eval_numeric",
]

# A z-monomial is a sorted tuple of ((i, s), exponent) pairs, exponents > 0.
ZMonomial = tuple

_lock = threading.Lock()
_zids: list[tuple[int, int]] = []
_zpos: dict[tuple[int, int], int] = {}
_ctx = fmpz_mpoly_ctx.get(("q",))
_qpow_cache: dict[tuple[int, int], object] = {}


def _zname(zid):
    i, s = zid
    return f"z{i + 1}_{s}"


def _register(zid) -> None:
    global _ctx
    with _lock:
        if zid in _zpos:
            return
        _zpos[zid] = len(_zids)
        _zids.append(zid)
        _ctx = fmpz_mpoly_ctx.get(("q",) + tuple(_zname(z) for z in _zids))


def _lift(p, ctx):
    if p.context() is ctx:
        return p
    return p.project_to_context(ctx)


def _unify(a, b):
    """Bring two polynomials into the larger of their contexts."""
    ca, cb = a.context(), b.context()
    if ca is cb:
        return a, b
    if ca.nvars() >= cb.nvars():
        return a, b.project_to_context(ca)
    return a.project_to_context(cb), b


def _q(ctx, k: int):
    key = (id(ctx), k)
    p = _qpow_cache.get(key)
    if p is None:
        exps = [0] * ctx.nvars()
        exps[0] = k
        p = ctx.from_dict({tuple(exps): 1})
        _qpow_cache[key] = p
    return p


def _const(ctx, c):
    if c == 0:
        return ctx.from_dict({})
    return ctx.from_dict({(0,) * ctx.nvars(): c})


def _qval(p) -> int:
    return int(p.term_content().degrees()[0])


def _z_free(p) -> bool:
    return not any(p.degrees()[1:])


class Coeff:
    """Exact element of Q(q)[z] with a z-free denominator.

    Instances are immutable.  Arithmetic accepts ``int`` and
    :class:`fractions.Fraction` operands as well.
    """

    __slots__ = ("_num", "_den", "_shift", "_reduced", "_hash")

    def __init__(self, value=0):
        if isinstance(value, Coeff):
            self._num, self._den, self._shift = value._num, value._den, value._shift
            self._reduced = value._reduced
        else:
            fr = Fraction(value)
            self._num = _const(_ctx, fr.numerator)
            self._den = _const(_ctx, fr.denominator)
            self._shift = 0
            self._reduced = True
        self._hash = None

    # -- construction ---------------------------------------------------

    @classmethod
    def _raw(cls, num, den, shift, reduced=True):
        obj = cls.__new__(cls)
        obj._num, obj._den, obj._shift = num, den, shift
        obj._reduced = reduced
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, num, den, shift, reduce=True):
        num, den = _unify(num, den)
        ctx = num.context()
        if num.is_zero():
            return cls._raw(num, _const(ctx, 1), 0)
        if den.is_zero():
            raise CoeffZeroDivision("zero denominator")
        v = _qval(num)
        if v:
            num = num / _q(ctx, v)
            shift += v
        v = _qval(den)
        if v:
            den = den / _q(ctx, v)
            shift -= v
        if reduce and not den.is_one():
            g = num.gcd(den)
            if not g.is_one():
                num = num / g
                den = den / g
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return cls._raw(num, den, shift, reduce or den.is_one())

    @classmethod
    def q(cls, k: int = 1) -> "Coeff":
        """The monomial q**k."""
        return cls._raw(_const(_ctx, 1), _const(_ctx, 1), k)

    @classmethod
    def zvar(cls, zid) -> "Coeff":
        zid = (int(zid[0]), int(zid[1]))
        _register(zid)
        ctx = _ctx
        exps = [0] * ctx.nvars()
        exps[1 + _zpos[zid]] = 1
        return cls._raw(ctx.from_dict({tuple(exps): 1}), _const(ctx, 1), 0)

    @classmethod
    def from_terms(cls, num_terms: Mapping, den_terms: Mapping | None = None, reduce=True):
        """Build ``num/den`` from term mappings.

        ``num_terms`` maps ``(q_exponent, zmonomial)`` to integers, ``den_terms``
        maps q exponents to integers (default: the constant 1).  With
        ``reduce=False`` the gcd step is skipped; equality is still exact.
        """
        for _, zm in num_terms:
            for zid, _e in zm:
                _register(zid)
        ctx = _ctx
        n = ctx.nvars()
        lo = min([e for e, _ in num_terms] + [0])
        den_terms = dict(den_terms) if den_terms else {0: 1}
        dlo = min(list(den_terms) + [0])
        nd = {}
        for (e, zm), c in num_terms.items():
            if c == 0:
                continue
            exps = [0] * n
            exps[0] = e - lo
            for zid, k in zm:
                exps[1 + _zpos[zid]] += k
            key = tuple(exps)
            nd[key] = nd.get(key, 0) + c
        dd = {}
        for e, c in den_terms.items():
            if c:
                key = (e - dlo,) + (0,) * (n - 1)
                dd[key] = dd.get(key, 0) + c
        return cls._make(ctx.from_dict(nd), ctx.from_dict(dd), lo - dlo, reduce)

    # -- views ---------------------------------------------------------

    def _zids_of(self):
        ctx = self._num.context()
        return _zids[: ctx.nvars() - 1]

    def num_terms(self) -> dict:
        """Numerator as ``{(q_exponent, zmonomial): int}`` including the q shift."""
        ids = self._zids_of()
        out = {}
        for exps, c in self._num.to_dict().items():
            zm = tuple(sorted((ids[j], int(e)) for j, e in enumerate(exps[1:]) if e))
            out[(int(exps[0]) + self._shift, zm)] = int(c)
        return out

    def den_terms(self) -> dict:
        """Denominator as ``{q_exponent: int}``."""
        return {int(exps[0]): int(c) for exps, c in self._den.to_dict().items()}

    @property
    def shift(self) -> int:
        return self._shift

    def z_ids(self) -> set:
        ids = self._zids_of()
        return {ids[j] for j, e in enumerate(self._num.degrees()[1:]) if e}

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_z_free(self) -> bool:
        return _z_free(self._num)

    def is_polynomial(self) -> bool:
        """True when the denominator is 1 (a Laurent polynomial)."""
        return self._den.is_one()

    def is_one(self) -> bool:
        return self._shift == 0 and self._num.is_one() and self._den.is_one()

    def reduced(self) -> "Coeff":
        if self._reduced:
            return self
        return Coeff._make(self._num, self._den, self._shift, True)

    # -- arithmetic -----------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, Coeff):
            return x
        if isinstance(x, (Integral, Rational)):
            return Coeff(x)
        return NotImplemented

    def q_shift(self, k: int) -> "Coeff":
        """Return ``q**k * self`` (no arithmetic on the polynomials)."""
        if k == 0 or self._num.is_zero():
            return self
        return Coeff._raw(self._num, self._den, self._shift + k, self._reduced)

    def __neg__(self):
        return Coeff._raw(-self._num, self._den, self._shift, self._reduced)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = Coeff._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other._num.is_zero():
            return self
        if self._num.is_zero():
            return other
        return Coeff.dot([(self._num, self._den, self._shift), (other._num, other._den, other._shift)])

    __radd__ = __add__

    def __sub__(self, other):
        other = Coeff._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = Coeff._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = Coeff._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self, other
        an, bn = _unify(a._num, b._num)
        if an.is_zero() or bn.is_zero():
            return Coeff._raw(an.context().from_dict({}), _const(an.context(), 1), 0)
        shift = a._shift + b._shift
        ad, bd = a._den, b._den
        if ad.is_one() and bd.is_one():
            return Coeff._raw(an * bn, _lift(ad, an.context()), shift)
        if not (a._reduced and b._reduced):
            return Coeff._make(an * bn, ad * bd, shift)
        ad, bn = _unify(ad, bn)
        bd, an = _unify(bd, an)
        # cross-cancellation keeps the result reduced
        if not bd.is_one():
            g = an.gcd(bd)
            if not g.is_one():
                an, bd = an / g, bd / g
        if not ad.is_one():
            g = bn.gcd(ad)
            if not g.is_one():
                bn, ad = bn / g, ad / g
        num, den = _unify(an * bn, ad * bd)
        if den.leading_coefficient() < 0:
            num, den = -num, -den
        return Coeff._raw(num, den, shift)

    __rmul__ = __mul__

    def inverse(self) -> "Coeff":
        if self._num.is_zero():
            raise CoeffZeroDivision("inverse of zero")
        if not _z_free(self._num):
            raise ZDependentInverse(f"cannot invert z-dependent coefficient {self}")
        return Coeff._make(self._den, self._num, -self._shift, True)

    def __truediv__(self, other):
        other = Coeff._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = Coeff._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, m: int):
        if not isinstance(m, Integral):
            return NotImplemented
        if m < 0:
            return self.inverse() ** (-m)
        if self._den.is_one():
            return Coeff._raw(self._num ** int(m), self._den, self._shift * m)
        result = Coeff(1)
        base = self
        while m:
            if m & 1:
                result = result * base
            base = base * base
            m >>= 1
        return result

    @staticmethod
    def dot(terms: Iterable) -> "Coeff":
        """Sum of raw ``(num, den, shift)`` triples with a single final reduction."""
        terms = [t for t in terms if not t[0].is_zero()]
        if not terms:
            return Coeff(0)
        ctx = max((t[0].context() for t in terms), key=lambda c: c.nvars())
        lo = min(t[2] for t in terms)
        if all(t[1].is_one() for t in terms):
            acc = ctx.from_dict({})
            for num, _, shift in terms:
                acc = acc + _lift(num, ctx) * _q(ctx, shift - lo) if shift != lo else acc + _lift(num, ctx)
            return Coeff._make(acc, _const(ctx, 1), lo, False)
        # common denominator; identical dens are frequent so compare first
        dens = []
        for _, den, _ in terms:
            den = _lift(den, ctx)
            if not any(den is d or den == d for d in dens):
                dens.append(den)
        lcm = dens[0]
        for d in dens[1:]:
            if d.is_one():
                continue
            g = lcm.gcd(d)
            lcm = lcm * (d / g) if not g.is_one() else lcm * d
        acc = ctx.from_dict({})
        cofactors = []
        for num, den, shift in terms:
            den = _lift(den, ctx)
            for d, cf in cofactors:
                if d is den or d == den:
                    break
            else:
                cf = lcm / den
                cofactors.append((den, cf))
            term = _lift(num, ctx) * cf
            if shift != lo:
                term = term * _q(ctx, shift - lo)
            acc = acc + term
        return Coeff._make(acc, lcm, lo, True)

    @staticmethod
    def sum_products(triples: Iterable) -> "Coeff":
        """``sum q**e * a * b`` over ``(a, b, e)`` triples, reduced once at the end."""
        raw = []
        for a, b, e in triples:
            an, bn = _unify(a._num, b._num)
            if an.is_zero() or bn.is_zero():
                continue
            if a._den.is_one():
                den = b._den
            elif b._den.is_one():
                den = a._den
            else:
                ad, bd = _unify(a._den, b._den)
                den = ad * bd
            raw.append((an * bn, den, a._shift + b._shift + e))
        return Coeff.dot(raw)

    def _raw_triple(self):
        return (self._num, self._den, self._shift)

    # -- comparison -----------------------------------------------------

    def __eq__(self, other):
        other = Coeff._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        an, bn = _unify(self._num, other._num)
        if an.is_zero() or bn.is_zero():
            return an.is_zero() and bn.is_zero()
        ad, bd = _unify(self._den, other._den)
        if ad == bd:
            return self._shift == other._shift and an == bn
        # cross-multiplication, valid for unreduced fractions
        lo = min(self._shift, other._shift)
        lhs = an * _lift(bd, an.context()) * _q(an.context(), self._shift - lo)
        rhs = bn * _lift(ad, bn.context()) * _q(bn.context(), other._shift - lo)
        lhs, rhs = _unify(lhs, rhs)
        return lhs == rhs

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            c = self.reduced()
            self._hash = hash((c._shift, frozenset(c.num_terms().items()), frozenset(c.den_terms().items())))
        return self._hash

    def __bool__(self):
        return not self._num.is_zero()

    # -- evaluation -----------------------------------------------------

    def eval_q1(self) -> "Coeff":
        """Substitute q = 1; raises :class:`PoleAtOne` if the denominator vanishes there."""
        d1 = sum(int(c) for c in self._den.coeffs())
        if d1 == 0:
            raise PoleAtOne(f"denominator of {self} vanishes at q = 1")
        num = self._num.subs({"q": 1})
        return Coeff._make(num, _const(num.context(), d1), 0, True)

    def eval_numeric(self, q: complex, zvals: Mapping | None = None, eps: float = 1e-14) -> complex:
        zvals = zvals or {}
        ids = self._zids_of()
        q = complex(q)
        den = sum(float(c) * q ** int(exps[0]) for exps, c in self._den.to_dict().items())
        if abs(den) <= eps:
            raise NumericPole(f"denominator of {self} is {abs(den):.3g} at q = {q}")
        num = 0j
        for exps, c in self._num.to_dict().items():
            t = complex(int(c)) * q ** int(exps[0])
            for j, e in enumerate(exps[1:]):
                if e:
                    zid = ids[j]
                    if zid not in zvals:
                        raise UnboundZ(f"no value bound for {_zname(zid)}")
                    t *= complex(zvals[zid]) ** int(e)
            num += t
        return num * q ** self._shift / den

    # -- printing -------------------------------------------------------

    def _poly_str(self, terms) -> str:
        parts = []
        for (e, zm), c in sorted(terms.items(), key=lambda kv: (kv[0][1], -kv[0][0])):
            factors = []
            if e == 1:
                factors.append("q")
            elif e:
                factors.append(f"q^{e}" if e > 0 else f"q^({e})")
            for zid, k in zm:
                factors.append(_zname(zid) + (f"^{k}" if k > 1 else ""))
            mono = "*".join(factors)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    def __str__(self):
        if self.is_zero():
            return "0"
        num = self._poly_str(self.num_terms())
        if self._den.is_one():
            return num
        den = self._poly_str({(e, ()): c for e, c in self.den_terms().items()})
        if " " in num or num.startswith("-"):
            num = f"({num})"
        if " " in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"Coeff({self})"


def zvar(i: int, s: int) -> Coeff:
    """The frozen coefficient indeterminate z_{i,s} (``i`` 0-based, ``s`` >= 1)."""
    if s < 1:
        raise ValueError("frozen coefficients are indexed by s >= 1")
    return Coeff.zvar((i, s))


def qpow(k: int = 1) -> Coeff:
    return Coeff.q(k)


def coeff_add(a: Coeff, b: Coeff) -> Coeff:
    return Coeff(a) + b


def coeff_mul(a: Coeff, b: Coeff) -> Coeff:
    return Coeff(a) * b


def coeff_invert(a: Coeff) -> Coeff:
    return Coeff(a).inverse()


def coeff_eval_q1(a: Coeff) -> Coeff:
    return Coeff(a).eval_q1()


def coeff_eval_numeric(a: Coeff, q: complex, zvals: Mapping | None = None, eps: float = 1e-14) -> complex:
    return Coeff(a).eval_numeric(q, zvals, eps)
