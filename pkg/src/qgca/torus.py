"""Exchange data and the quantum torus of normal-ordered monomials.

Conventions (0-based indices throughout the Python API):

* ``lam(a, b) = sum_ij a_i r_i d_i b_ij b_j``
* ``Y^a Y^b = q^{-lam(a, b)} Y^{a+b}``

so that ``Y_i Y_j = q^{2 r_j d_j b_ji} Y_j Y_i``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from .coeff import Coeff, zvar
from .errors import MixedAlgebra, ReciprocityError, SkewSymmetrizabilityError

SYMBOLIC = "symbolic"

Exponent = tuple


def _vec(a) -> tuple:
    return tuple(int(x) for x in a)


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


class SkewForm:
    """Integer skew-symmetric bilinear form on Z^n given by a matrix."""

    __slots__ = ("matrix", "n", "_key")

    def __init__(self, matrix: Sequence[Sequence[int]]):
        self.matrix = tuple(tuple(int(x) for x in row) for row in matrix)
        self.n = len(self.matrix)
        for i in range(self.n):
            for j in range(self.n):
                if self.matrix[i][j] != -self.matrix[j][i]:
                    raise ValueError("skew form matrix must be skew-symmetric")
        self._key = self.matrix

    @classmethod
    def zero(cls, n: int) -> "SkewForm":
        """Form of the commutative (classical, q = 1) torus."""
        return cls([[0] * n for _ in range(n)])

    @property
    def is_commutative(self) -> bool:
        return not any(any(row) for row in self.matrix)

    def row(self, a) -> tuple:
        """The covector ``a^T M`` so that ``lam(a, b) = row(a) . b``."""
        m = self.matrix
        return tuple(sum(a[i] * m[i][j] for i in range(self.n) if a[i]) for j in range(self.n))

    def lam(self, a, b) -> int:
        m = self.matrix
        total = 0
        for i, ai in enumerate(a):
            if ai:
                mi = m[i]
                for j, bj in enumerate(b):
                    if bj:
                        total += ai * mi[j] * bj
        return total

    def __eq__(self, other):
        return isinstance(other, SkewForm) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"SkewForm({list(map(list, self.matrix))})"


def compute_weights(B: Sequence[Sequence[int]], d: Sequence[int]) -> tuple:
    """Smallest positive integers r with ``r_i d_i b_ij = -r_j d_j b_ji``.

    Raises :class:`SkewSymmetrizabilityError` if no such r exists.
    """
    n = len(B)
    t: list[Fraction | None] = [None] * n  # t_i = r_i d_i
    for root in range(n):
        if t[root] is not None:
            continue
        t[root] = Fraction(1)
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                bij, bji = B[i][j], B[j][i]
                if bij == 0 and bji == 0:
                    continue
                if bij == 0 or bji == 0 or (bij > 0) == (bji > 0):
                    raise SkewSymmetrizabilityError(
                        f"b[{i + 1}][{j + 1}] = {bij} and b[{j + 1}][{i + 1}] = {bji}: "
                        "no positive r with r_i d_i b_ij = -r_j d_j b_ji"
                    )
                tj = -t[i] * bij / bji
                if t[j] is None:
                    t[j] = tj
                    stack.append(j)
                elif t[j] != tj:
                    raise SkewSymmetrizabilityError(
                        "B is not skew-symmetrizable: no positive r with r_i d_i b_ij = -r_j d_j b_ji"
                    )
    ratios = [ti / di for ti, di in zip(t, d)]
    scale = lcm(*(x.denominator for x in ratios))
    r = [x * scale for x in ratios]
    g = 0
    for x in r:
        g = _gcd(g, int(x))
    return tuple(int(x) // g for x in r)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _zvalue(v):
    if isinstance(v, str):
        if v.strip().lower() != SYMBOLIC:
            return Fraction(v)
        return SYMBOLIC
    if isinstance(v, Coeff):
        return v
    return Fraction(v)


@dataclass(frozen=True, eq=False)
class ExchangeData:
    """The triple (B, d, r) with frozen coefficients z.

    ``z`` maps 0-based ``(i, s)`` with ``1 <= s <= d_i - 1`` to a number, a
    :class:`Coeff`, or :data:`SYMBOLIC`; missing entries are symbolic.  The
    symbolic indeterminates honour reciprocity: ``z_{i,s}`` and
    ``z_{i,d_i-s}`` are the same symbol.
    """

    B: tuple
    d: tuple
    r: tuple | None = None
    z: Mapping = field(default_factory=dict)

    def __post_init__(self):
        B = tuple(_vec(row) for row in self.B)
        n = len(B)
        if any(len(row) != n for row in B):
            raise ValueError("B must be square")
        d = _vec(self.d)
        if len(d) != n or any(x < 1 for x in d):
            raise ValueError("d must be n positive integers")
        r = compute_weights(B, d) if self.r is None else _vec(self.r)
        if len(r) != n or any(x < 1 for x in r):
            raise ValueError("r must be n positive integers")
        for i in range(n):
            for j in range(n):
                if r[i] * d[i] * B[i][j] != -r[j] * d[j] * B[j][i]:
                    raise SkewSymmetrizabilityError(
                        f"r_i d_i b_ij = -r_j d_j b_ji fails at (i, j) = ({i + 1}, {j + 1}): "
                        f"{r[i] * d[i] * B[i][j]} != {-r[j] * d[j] * B[j][i]}"
                    )
        z = {}
        for (i, s), v in dict(self.z).items():
            i, s = int(i), int(s)
            if not (0 <= i < n and 1 <= s <= d[i] - 1):
                raise ValueError(f"no frozen coefficient z[{i + 1},{s}] for d_{i + 1} = {d[i]}")
            z[(i, s)] = _zvalue(v)
        for (i, s), v in z.items():
            mirror = (i, d[i] - s)
            if mirror in z and z[mirror] != v:
                raise ReciprocityError(
                    f"z[{i + 1},{s}] = {v} but z[{i + 1},{d[i] - s}] = {z[mirror]} (need z_is = z_i,d-s)"
                )
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "z", z)
        object.__setattr__(
            self, "_form", SkewForm([[r[i] * d[i] * B[i][j] for j in range(n)] for i in range(n)])
        )

    @property
    def n(self) -> int:
        return len(self.B)

    @property
    def form(self) -> SkewForm:
        return self._form

    def qexp(self, i: int) -> int:
        """Exponent of q in ``q_i = q^{r_i d_i}``."""
        return self.r[i] * self.d[i]

    def zcoeff(self, i: int, s: int) -> Coeff:
        di = self.d[i]
        if s == 0 or s == di:
            return Coeff(1)
        v = self.z.get((i, s), self.z.get((i, di - s), SYMBOLIC))
        if v is SYMBOLIC or v == SYMBOLIC:
            return zvar(i, min(s, di - s))
        return Coeff(v)

    def zlist(self, i: int) -> list:
        """``[z_{i,0}, ..., z_{i,d_i}]`` with the unit ends."""
        return [self.zcoeff(i, s) for s in range(self.d[i] + 1)]

    def commutation_exponent(self, i: int, j: int) -> int:
        """``Y_i Y_j = q^{e} Y_j Y_i`` with ``e = 2 r_j d_j b_ji``."""
        return 2 * self.r[j] * self.d[j] * self.B[j][i]

    def monomial_product(self, a, b) -> tuple:
        return monomial_product(self.form, a, b)

    def _key(self):
        return (self.B, self.d, self.r, tuple(sorted((k, str(v)) for k, v in self.z.items())))

    def __eq__(self, other):
        return isinstance(other, ExchangeData) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


def monomial_product(form: SkewForm, a, b) -> tuple:
    """``Y^a Y^b = q^e Y^{a+b}``; returns ``(e, a+b)`` with ``e = -lam(a, b)``."""
    a, b = _vec(a), _vec(b)
    return -form.lam(a, b), _add(a, b)


def commutation_exponent(ed: ExchangeData, i: int, j: int) -> int:
    return ed.commutation_exponent(i, j)


class TorusElement:
    """Finite sum of coefficients times normal-ordered monomials ``Y^a``."""

    __slots__ = ("form", "terms")

    def __init__(self, form, terms: Mapping | None = None):
        if isinstance(form, ExchangeData):
            form = form.form
        self.form = form
        clean = {}
        for a, c in (terms or {}).items():
            c = Coeff(c) if not isinstance(c, Coeff) else c
            if not c.is_zero():
                clean[_vec(a)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, form, a, coeff=1) -> "TorusElement":
        return cls(form, {_vec(a): coeff})

    @classmethod
    def generator(cls, form, i: int) -> "TorusElement":
        n = form.n if isinstance(form, SkewForm) else form.n
        a = [0] * n
        a[i] = 1
        return cls.monomial(form, a)

    @classmethod
    def one(cls, form) -> "TorusElement":
        n = form.n
        return cls.monomial(form, (0,) * n)

    def _check(self, other):
        if self.form != other.form:
            raise MixedAlgebra("torus elements over different skew forms")

    def _lift(self, x):
        if isinstance(x, TorusElement):
            self._check(x)
            return x
        return TorusElement(self.form, {(0,) * self.form.n: x})

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out[a] + c if a in out else c
        return TorusElement(self.form, out)

    __radd__ = __add__

    def __neg__(self):
        return TorusElement(self.form, {a: -c for a, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, TorusElement):
            c = Coeff(other) if not isinstance(other, Coeff) else other
            return TorusElement(self.form, {a: v * c for a, v in self.terms.items()})
        self._check(other)
        form = self.form
        acc: dict = {}
        for a, ca in self.terms.items():
            row = form.row(a)
            for b, cb in other.terms.items():
                e = -sum(x * y for x, y in zip(row, b))
                acc.setdefault(_add(a, b), []).append((ca, cb, e))
        return TorusElement(form, {k: Coeff.sum_products(t) for k, t in acc.items()})

    def __rmul__(self, other):
        c = Coeff(other) if not isinstance(other, Coeff) else other
        return TorusElement(self.form, {a: c * v for a, v in self.terms.items()})

    def __pow__(self, m: int):
        if m < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible in the torus")
            (a, c), = self.terms.items()
            neg = tuple(-x for x in a)
            return TorusElement(self.form, {neg: c.inverse()}) ** (-m)
        result = TorusElement.one(self.form)
        for _ in range(m):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, TorusElement):
            return self.form == other.form and self.terms == other.terms
        return self == self._lift(other)

    def __hash__(self):
        return hash((self.form, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "TorusElement(0)"
        parts = [f"({c})*Y^{a}" for a, c in sorted(self.terms.items())]
        return "TorusElement(" + " + ".join(parts) + ")"


def torus_mul(a: TorusElement, b: TorusElement) -> TorusElement:
    return a * b


def _pos(a: int) -> int:
    return a if a > 0 else 0


def mutate_matrix(Bt, d, k: int) -> tuple:
    """Generalized matrix mutation at ``k``.

    ``b'_ij = -b_ij`` if ``k`` in ``(i, j)``, otherwise
    ``b_ij + d_k ([-b_ik]_+ b_kj + b_ik [b_kj]_+)``.
    """
    if isinstance(d, ExchangeData):
        d = d.d
    n = len(Bt)
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} out of range for rank {n}")
    dk = d[k]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-Bt[i][j])
            else:
                row.append(Bt[i][j] + dk * (_pos(-Bt[i][k]) * Bt[k][j] + Bt[i][k] * _pos(Bt[k][j])))
        out.append(tuple(row))
    return tuple(out)
