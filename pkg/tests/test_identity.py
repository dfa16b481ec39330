import pytest

from qgca.example import tropical_identity_product, universal_identity_product
from qgca.identity import (
    MutationSequence,
    check_periodicity,
    run_report,
    tropical_identity_check,
    tropical_product,
    universal_identity_check,
)
from qgca.torus import ExchangeData
from qgca.tropical import TropicalState, tropical_mutate

EX_SEQ = (0, 1, 0, 1, 0, 1)
PENTAGON = ExchangeData(((0, -1), (1, 0)), (1, 1), (1, 1))


def test_example_periodicity(example):
    assert check_periodicity(MutationSequence(example, EX_SEQ))
    assert not check_periodicity(MutationSequence(example, EX_SEQ[:5]))
    assert check_periodicity(MutationSequence(example, ()))


@pytest.mark.parametrize("N", [4, 8, 12])
def test_example_identities(example, N):
    seq = MutationSequence(example, EX_SEQ, None, N)
    assert tropical_identity_check(seq) is None
    assert universal_identity_check(seq) is None


def test_hand_written_products_agree_with_engine(example):
    assert tropical_identity_product(8).leading_residual(1) is None
    assert universal_identity_product(8).leading_residual(1) is None
    assert tropical_identity_product(8) == tropical_product(MutationSequence(example, EX_SEQ, None, 8))


def test_dropping_inner_sign_breaks_universal_form(example):
    # Psi(Y_k(t))^{e} instead of Psi(Y_k(t)^{e})^{e} is not even well formed for e = -1
    from qgca.dilog import PsiSpec, psi_of
    from qgca.errors import NonPositiveArgument

    seeds = MutationSequence(example, EX_SEQ, None, 6).seeds()
    with pytest.raises(NonPositiveArgument):
        psi_of(PsiSpec.from_exchange(example, 0), seeds[2].vars[0], -1)


def test_wrong_sign_fails(example):
    from qgca.dilog import PsiSpec, psi_of
    from qgca.series import ConeSeries

    F = example.form
    # flip the exponent of the last factor
    prod = ConeSeries.one(F, 6)
    cs = [(1, (1, 0)), (1, (0, 1)), (-1, (-1, 0)), (-1, (-2, -1)), (-1, (-1, -1)), (1, (0, -1))]
    for k, (e, c) in zip(EX_SEQ, cs):
        arg = ConeSeries.monomial(F, tuple(abs(x) for x in c), 1, 6)
        prod = prod * psi_of(PsiSpec.from_exchange(example, k), arg, e, 6)
    assert prod.leading_residual(1) is not None


def test_pentagon():
    rep = run_report(MutationSequence(PENTAGON, (0, 1, 0, 1, 0), (1, 0), 8))
    assert rep.ok, rep
    assert not check_periodicity(MutationSequence(PENTAGON, (0, 1, 0, 1, 0), None, 8))


def test_g2_type_period_eight():
    ed = ExchangeData(((0, -1), (1, 0)), (3, 1), (1, 3))
    rep = run_report(MutationSequence(ed, (0, 1) * 4, None, 8))
    assert rep.ok
    assert not run_report(MutationSequence(ed, (0, 1) * 3, None, 8)).periodic


def test_rotations_of_example(example):
    seeds = MutationSequence(example, EX_SEQ).seeds()
    for t in range(1, 6):
        ed_t = ExchangeData(seeds[t].Bt, example.d, example.r, example.z)
        ks = EX_SEQ[t:] + EX_SEQ[:t]
        rep = run_report(MutationSequence(ed_t, ks, None, 8))
        assert rep.ok, (t, rep)


def _tropical_period(ed, ks):
    s = TropicalState.initial(ed)
    for k in ks:
        s = tropical_mutate(s, k)
    n = ed.n
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    return s.C == ident


def test_searched_periods_verify():
    found = []
    for B in (((0, -1), (1, 0)), ((0, 1), (-1, 0))):
        for d in ((3, 1), (1, 3), (2, 1), (1, 2), (2, 2)):
            try:
                ed = ExchangeData(B, d)
            except ValueError:
                continue
            for L in range(2, 11):
                ks = tuple(i % 2 for i in range(L))
                if _tropical_period(ed, ks):
                    found.append((ed, ks))
                    break
    assert len(found) >= 6
    for ed, ks in found:
        rep = run_report(MutationSequence(ed, ks, None, 6))
        assert rep.ok, (ed, ks, rep)


def test_involution_sequence(example):
    rep = run_report(MutationSequence(example, (0, 0), None, 8))
    assert rep.periodic and rep.ok


def test_non_periodic_report(example):
    rep = run_report(MutationSequence(example, (0,), None, 6))
    assert not rep.periodic
    assert rep.skipped and not rep.ok
    assert rep.tropical_residual is None and not rep.tropical_holds


def test_empty_sequence(example):
    seq = MutationSequence(example, (), None, 6)
    assert tropical_identity_check(seq) is None
    assert universal_identity_check(seq) is None
    assert run_report(seq).ok


def test_classical_image_of_tropical_product(example):
    prod = tropical_product(MutationSequence(example, EX_SEQ, None, 8))
    assert prod.eval_q1() == 1


def test_report_json_shape(example):
    d = run_report(MutationSequence(example, EX_SEQ, None, 4)).to_dict()
    assert d["ok"] and d["periodic"] and d["steps"][3]["c"] == [-2, -1]
    assert d["steps"][3]["sign"] == "-"


def test_sequence_validation(example):
    with pytest.raises(ValueError):
        MutationSequence(example, (2,))
    with pytest.raises(ValueError):
        MutationSequence(example, (0,), (0, 0))
