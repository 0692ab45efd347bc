import pytest
from hypothesis import given, settings, strategies as st

import semiringlab as sl
from semiringlab.errors import NotQuasiCompletelyRegular, UnknownTheoremId
from semiringlab.classify import CLASS_KEYS, THEOREM_IDS


def test_classify_qsr3(qsr3):
    r = sl.classify(qsr3)
    assert r.holds("quasi-skew-ring")
    assert r.holds("quasi-completely-inverse")
    assert r.holds("strongly-additively-quasi-completely-inverse")
    assert r.holds("completely-archimedean")
    assert not r.holds("generalized-clifford")
    assert not r.holds("b-lattice")
    assert not r.holds("completely-regular")
    assert not r.holds("additively-regular")
    assert "kernel {0}" in r.verdicts["quasi-skew-ring"].evidence


def test_classify_boolean(boolean):
    r = sl.classify(boolean)
    assert r.holds("completely-regular")
    assert r.holds("generalized-clifford")
    assert r.holds("b-lattice")
    assert not r.holds("completely-simple")
    assert not r.holds("skew-ring")


def test_classify_z2(z2):
    r = sl.classify(z2)
    assert r.holds("skew-ring")
    assert r.holds("generalized-clifford")
    assert r.holds("completely-simple")


def test_classify_left_zero(left_zero):
    r = sl.classify(left_zero)
    assert r.holds("completely-regular")
    assert r.holds("quasi-completely-regular")
    assert not r.holds("additively-quasi-inverse")
    assert not r.holds("quasi-completely-inverse")
    assert not r.holds("strongly-additively-quasi-inverse")


def test_classify_min_const(min_const):
    r = sl.classify(min_const)
    assert not r.holds("quasi-completely-regular")
    assert r.holds("additively-regular")


def test_false_verdicts_carry_evidence(qsr3, min_const):
    r = sl.classify(qsr3)
    assert "a" in r.verdicts["additively-regular"].evidence
    r = sl.classify(min_const)
    assert r.verdicts["quasi-completely-regular"].evidence


def test_verify_equivalence_qsr3_qsr3(qsr3):
    report = sl.verify_equivalence(qsr3, "QSR3")
    assert report.agreement
    assert all(holds for _, holds, _ in report.conditions)


def test_verify_equivalence_one_element():
    one = sl.FiniteSemiring(names=("e",), add=((0,),), mul=((0,),))
    for theorem in THEOREM_IDS:
        report = sl.verify_equivalence(one, theorem)
        assert report.agreement
        assert all(holds for _, holds, _ in report.conditions)


def test_verify_equivalence_unknown_id(qsr3):
    with pytest.raises(UnknownTheoremId):
        sl.verify_equivalence(qsr3, "NOPE")


def test_verify_equivalence_disagreement_is_reported_not_raised(min_const):
    # all five theorems must still agree here (all conditions false or all true)
    for theorem in THEOREM_IDS:
        report = sl.verify_equivalence(min_const, theorem)
        assert report.agreement, (theorem, report.verdicts)


def test_verify_ideal_corollary(qsr3, boolean, left_zero):
    for s in (qsr3, boolean):
        report = sl.verify_ideal_corollary(s)
        assert report.agreement
        assert all(holds for _, holds, _ in report.conditions)
    report = sl.verify_ideal_corollary(left_zero)
    assert report.agreement
    assert not any(holds for _, holds, _ in report.conditions)


def test_completely_simple_and_archimedean(z2, boolean, qsr3, min_const):
    assert sl.is_completely_simple(z2)
    assert not sl.is_completely_simple(boolean)
    assert sl.is_completely_archimedean(qsr3)
    with pytest.raises(NotQuasiCompletelyRegular):
        sl.is_completely_archimedean(min_const)


def test_implication_lattice_over_corpus(corpus_small):
    implications = (
        ("skew-ring", "quasi-skew-ring"),
        ("generalized-clifford", "strongly-additively-quasi-completely-inverse"),
        ("strongly-additively-quasi-completely-inverse", "quasi-completely-inverse"),
        ("quasi-completely-inverse", "quasi-completely-regular"),
        ("b-lattice", "completely-regular"),
        ("completely-simple", "completely-regular"),
        ("completely-archimedean", "quasi-completely-regular"),
    )
    for s in corpus_small:
        r = sl.classify(s)  # raises InternalTheoremViolation on closure breaks
        for premise, conclusion in implications:
            if r.holds(premise):
                assert r.holds(conclusion), (premise, conclusion, s)


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_classify_invariant_under_isomorphism(data, corpus_small):
    s = data.draw(st.sampled_from(corpus_small[::5]))
    perm = data.draw(st.permutations(range(s.order)))
    relabeled = s.relabel(perm)
    original = sl.classify(s)
    mapped = sl.classify(relabeled)
    for key in CLASS_KEYS:
        assert original.holds(key) == mapped.holds(key), key


def test_jstar_classes_completely_archimedean_on_qcr_members(corpus_small):
    from semiringlab.classify import _is_quasi_completely_regular
    from semiringlab.elements import is_quasi_completely_regular_semiring

    surveyed = 0
    for s in corpus_small:
        if not is_quasi_completely_regular_semiring(s):
            continue
        surveyed += 1
        for block in sl.green_star_plus(s, "J").blocks():
            assert s.is_closed(block)
            sub = s.restrict(block)
            assert _is_quasi_completely_regular(sub)[0]
            assert sl.green_star_plus(sub, "J").num_blocks == 1
    assert surveyed > 50
