import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rank2_exchange
from oracles import lam_matrix, torus_product
from qgca.coeff import Coeff, zvar
from qgca.errors import MixedAlgebra, NonUnitConstantTerm, NotConeEmbeddable, PrefactorMisaligned
from qgca.series import ConeSeries, from_torus, series_add, series_invert, series_mul
from qgca.torus import SkewForm, TorusElement

z = zvar(0, 1)


@st.composite
def series(draw, ed, order=5):
    gamma = draw(st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
    body = {}
    for _ in range(draw(st.integers(1, 4))):
        delta = draw(st.tuples(st.integers(0, 2), st.integers(0, 2)))
        body[delta] = Coeff.q(draw(st.integers(-3, 3))) * draw(st.sampled_from((1, -1, 2))) * (z if draw(st.booleans()) else 1)
    body[(0, 0)] = Coeff.q(draw(st.integers(-2, 2))) * draw(st.sampled_from((1, -1, 3)))
    return ConeSeries(ed.form, order, gamma, body)


def test_generators_twist(example):
    Y1 = ConeSeries.generator(example, 0)
    Y2 = ConeSeries.generator(example, 1)
    assert (Y1 * Y2).body == {(0, 0): Coeff.q(2)}
    assert (Y2 * Y1).body == {(0, 0): Coeff.q(-2)}


def test_inverse_of_polynomial(example):
    Y1 = ConeSeries.generator(example, 0, 10)
    a = 1 + Y1.scale(z * Coeff.q(2)) + (Y1 * Y1).scale(Coeff.q(4))
    assert a * a.inverse() == 1
    assert a.inverse() * a == 1
    assert series_invert(series_invert(a)) == a


def test_from_torus_contract(example):
    F = example.form
    t = TorusElement.monomial(F, (-1, 0)) + TorusElement.monomial(F, (3, 3))
    s = from_torus(t, 7)
    assert s.gamma == (-1, 0) and s.body[(4, 3)] == 1
    with pytest.raises(NotConeEmbeddable):
        ConeSeries(F, 4, (0, 0), {(-1, 0): 1})
    # both terms survive only while the gap fits under the order
    assert from_torus(t, 2).body == {(0, 0): Coeff(1)}


def test_far_operand_drops_out(example):
    a = ConeSeries.monomial(example, (0, 0), 1, 3)
    b = ConeSeries.monomial(example, (5, 0), 1, 3)
    s = series_add(a, b)
    assert s.gamma == (0, 0) and s.body == {(0, 0): Coeff(1)}
    near = series_add(a, ConeSeries.monomial(example, (2, 1), 1, 3))
    assert near.body == {(0, 0): Coeff(1), (2, 1): Coeff(1)}


def test_alignment_with_negative_prefactor(example):
    Y1 = ConeSeries.generator(example, 0)
    s = Y1.inverse() + 1
    assert s.gamma == (-1, 0) and s.body == {(0, 0): Coeff(1), (1, 0): Coeff(1)}


def test_prefactor_cannot_move_up(example):
    with pytest.raises(PrefactorMisaligned):
        ConeSeries.monomial(example, (0, 0), 1, 3).shift_to((1, 0))


def test_non_unit_constant_term(example):
    Y1 = ConeSeries.generator(example, 0)
    with pytest.raises(NonUnitConstantTerm):
        (Y1 + ConeSeries.monomial(example, (1, 1), 1)).shift_to((0, 0)).inverse()
    with pytest.raises(NonUnitConstantTerm):
        ConeSeries.scalar(example, z + 1).inverse()


def test_mixed_algebra(example):
    other = SkewForm([[0, 1], [-1, 0]])
    with pytest.raises(MixedAlgebra):
        ConeSeries.generator(example, 0) * ConeSeries.generator(other, 0)


def test_leading_residual_is_lex_least(example):
    Y1 = ConeSeries.generator(example, 0)
    Y2 = ConeSeries.generator(example, 1)
    s = 1 + Y2.scale(3) + Y1.scale(5)
    assert s.leading_residual(1) == ((0, 1), Coeff(3))
    assert (s - s).leading_residual(0) is None


def test_commutative_classical_image(example):
    Y1 = ConeSeries.generator(example, 0)
    Y2 = ConeSeries.generator(example, 1)
    c = (Y1 * Y2).eval_q1()
    assert c.form.is_commutative and c.body == {(0, 0): Coeff(1)}


@given(st.data())
def test_product_matches_bruteforce(data):
    ed = data.draw(rank2_exchange())
    a, b = data.draw(series(ed)), data.draw(series(ed))
    prod = series_mul(a, b)
    ref = torus_product(lam_matrix(ed), a.terms(), b.terms())
    expect = ConeSeries(ed.form, 5, prod.gamma, {tuple(x - g for x, g in zip(k, prod.gamma)): v for k, v in ref.items()})
    assert prod.agrees(expect)


@given(st.data())
def test_ring_laws(data):
    ed = data.draw(rank2_exchange())
    a, b, c = (data.draw(series(ed, 4)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * a.inverse() == 1
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert a ** 3 == a * a * a
    assert a ** -2 == a.inverse() * a.inverse()


def test_truncation_monotone(example):
    Y1 = ConeSeries.generator(example, 0, 12)
    Y2 = ConeSeries.generator(example, 1, 12)
    s = (1 + Y1 + Y2).inverse()
    assert s.with_order(4) == (1 + Y1.with_order(4) + Y2.with_order(4)).inverse()
