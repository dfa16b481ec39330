from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import psi_product_coefficients
from qgca.coeff import Coeff, zvar
from qgca.dilog import (
    PsiSpec,
    psi_coefficients,
    psi_factorization_check,
    psi_inverse_coefficients,
    psi_of,
    psi_shift_check,
    psi_trivialz_split_check,
    qdilog_exp_check,
    smul,
)
from qgca.errors import NonPositiveArgument
from qgca.series import ConeSeries

z = zvar(0, 1)


def test_first_coefficients():
    a = psi_coefficients(PsiSpec(1), 3).a
    assert a[0] == 1
    assert a[1] == Coeff.q(1) / (Coeff.q(2) - 1)
    a2 = psi_coefficients(PsiSpec(2, (z,)), 2).a
    assert a2[2] == (Coeff.q(4) - Coeff.q(2) + Coeff.q(2) * z * z) / (Coeff.q(6) - Coeff.q(4) - Coeff.q(2) + 1)


def test_inverse_series():
    spec = PsiSpec(3, (z, z))
    a = list(psi_coefficients(spec, 6).a)
    assert smul(a, psi_inverse_coefficients(spec, 6), 6) == [Coeff(1)] + [Coeff(0)] * 6


@pytest.mark.parametrize(
    "d,zvals,q",
    [(1, (), 0.5), (2, (Fraction(3, 2),), 0.6), (3, (2, 2), 0.4), (2, (-1,), 0.5)],
)
def test_matches_infinite_product(d, zvals, q):
    spec = PsiSpec(d, zvals)
    a = psi_coefficients(spec, 8).a
    ref = psi_product_coefficients([1, *map(float, zvals), 1], q, 8)
    for n in range(9):
        assert a[n].eval_numeric(q) == pytest.approx(ref[n], abs=1e-10)


def test_base_power_matches_substitution():
    # Psi_{q^2}(x) is Psi_q(x) with q -> q^2
    a = psi_coefficients(PsiSpec(2, (z,), 2), 5).a
    ref = psi_product_coefficients([1, 0.7, 1], 0.6**2, 5)
    for n in range(6):
        assert a[n].eval_numeric(0.6, {(0, 1): 0.7}) == pytest.approx(ref[n], abs=1e-10)


@pytest.mark.parametrize("d", [1, 2, 3])
@pytest.mark.parametrize("a", [-3, -2, -1, 1, 2, 3])
def test_shift_law_symbolic(d, a):
    zs = tuple(zvar(0, min(s, d - s)) for s in range(1, d))
    assert psi_shift_check(PsiSpec(d, zs), a, 8)


@given(st.integers(1, 3), st.integers(-3, 3), st.lists(st.fractions(-3, 3, max_denominator=4), min_size=2, max_size=2))
def test_shift_law_rational(d, a, zs):
    zs = tuple(zs[: d - 1])
    if d == 3:
        zs = (zs[0], zs[0])
    assert psi_shift_check(PsiSpec(d, zs, 2), a, 6)


@pytest.mark.parametrize("w", [(1, 2), (1, 1), (-1, -1), (2, -3), (1, -2, 3), (1, 1, 1), (-1, 2, 2)])
def test_factorization(w):
    assert psi_factorization_check(len(w), w, 8)


@pytest.mark.parametrize("d", [2, 3])
def test_split_identity(d):
    assert psi_trivialz_split_check(d, 9)


def test_exp_bridge():
    assert qdilog_exp_check(10)


def test_psi_of_generator_and_nonpositive(example):
    Y1 = ConeSeries.generator(example, 0, 6)
    spec = PsiSpec.from_exchange(example, 0)
    assert spec.degree == 2 and spec.base == 2
    p = psi_of(spec, Y1, 1)
    assert p * psi_of(spec, Y1, -1) == 1
    assert p.body[(2, 0)] == psi_coefficients(spec, 2).a[2]
    with pytest.raises(NonPositiveArgument):
        psi_of(spec, Y1.inverse(), 1)
    with pytest.raises(NonPositiveArgument):
        psi_of(spec, Y1 + 1, 1)


def test_difference_equation(example):
    # Psi(q^{2 base} Y) = (1 + z q^base Y + q^{2 base} Y^2) Psi(Y) for a central-like scalar shift
    Y1 = ConeSeries.generator(example, 0, 8)
    spec = PsiSpec.from_exchange(example, 0)
    lhs = psi_of(spec, Y1.q_shift(4), 1)
    rhs = (1 + Y1.scale(z * Coeff.q(2)) + (Y1 * Y1).scale(Coeff.q(4))) * psi_of(spec, Y1, 1)
    assert lhs == rhs
