from itertools import product

import pytest

import semiringlab as sl
from semiringlab.errors import BoundExceeded, UnknownClassName
from semiringlab.enumeration import (
    FULL_ENUMERATION_BOUND,
    ImplicationQuery,
    canonical_form,
    canonical_hash,
    count_labeled_semirings,
    enumerate_semirings,
    find_counterexample,
    manifest_line,
    sample_semirings,
    write_corpus,
)

# pre-build brute-force oracle values (all 16x16 / 512x512 table pairs
# scanned directly, no pruning)
ORACLE_LABELED = {1: 1, 2: 36, 3: 1747}
ORACLE_CANONICAL = {1: 1, 2: 20, 3: 316}


def mini_oracle_order2():
    """Re-derive the order-2 counts inside the suite, independently of the
    production enumerator's pruning and pairing."""
    tables = [
        ((a, b), (c, d))
        for a, b, c, d in product(range(2), repeat=4)
    ]
    labeled = 0
    canons = set()
    for add in tables:
        for mul in tables:
            report = sl.validate_semiring("01", add, mul)
            if report.verdict:
                labeled += 1
                canons.add(canonical_form(sl.FiniteSemiring(names=("0", "1"), add=add, mul=mul)))
    return labeled, len(canons)


def test_counts_match_frozen_oracle():
    for n in (1, 2, 3):
        assert count_labeled_semirings(n) == ORACLE_LABELED[n]
        assert len(enumerate_semirings(n)) == ORACLE_CANONICAL[n]


def test_order2_counts_match_in_suite_oracle():
    labeled, canonical = mini_oracle_order2()
    assert labeled == ORACLE_LABELED[2]
    assert canonical == ORACLE_CANONICAL[2]


def test_canonical_form_iso_invariance(qsr3):
    relabeled = qsr3.relabel((1, 2, 0))
    assert canonical_form(relabeled) == canonical_form(qsr3)


def test_canonical_form_separates(z2, boolean):
    assert canonical_form(z2) != canonical_form(boolean)


def test_canonical_form_one_element():
    one = sl.FiniteSemiring(names=("e",), add=((0,),), mul=((0,),))
    assert canonical_form(one) == bytes([1, 0, 0])


def test_canonical_form_bound():
    big = sl.FiniteSemiring(
        names=tuple(f"e{i}" for i in range(9)),
        add=tuple(tuple(0 for _ in range(9)) for _ in range(9)),
        mul=tuple(tuple(0 for _ in range(9)) for _ in range(9)),
    )
    with pytest.raises(BoundExceeded):
        canonical_form(big)


def test_quasi_skew_ring_filter_contains_qsr3(qsr3):
    reps = enumerate_semirings(3, filter_class="quasi-skew-ring")
    assert canonical_form(qsr3) in {canonical_form(s) for s in reps}


def test_enumeration_bound_and_class_errors():
    with pytest.raises(BoundExceeded):
        enumerate_semirings(FULL_ENUMERATION_BOUND + 1)
    with pytest.raises(BoundExceeded):
        sample_semirings(7, 1)
    with pytest.raises(UnknownClassName):
        enumerate_semirings(2, filter_class="not-a-class")


def test_enumeration_deterministic():
    first = [manifest_line(s) for s in enumerate_semirings(3)]
    second = [manifest_line(s) for s in enumerate_semirings(3)]
    assert first == second
    forms = [canonical_form(s) for s in enumerate_semirings(3)]
    assert forms == sorted(forms)


def test_sampling_deterministic_and_valid():
    a = sample_semirings(4, 30, seed=11)
    b = sample_semirings(4, 30, seed=11)
    assert [canonical_form(s) for s in a] == [canonical_form(s) for s in b]
    assert len(a) == 30
    for s in a:
        assert sl.validate(s).verdict


def test_classify_constant_on_iso_classes(corpus_small):
    for s in corpus_small[::23]:
        relabeled = s.relabel(tuple(reversed(range(s.order))))
        assert canonical_form(relabeled) == canonical_form(s)
        assert sl.classify(relabeled).verdicts.keys() == sl.classify(s).verdicts.keys()
        for key, v in sl.classify(s).verdicts.items():
            assert sl.classify(relabeled).verdicts[key].holds == v.holds


def test_counterexample_saqci_implies_qci():
    query = ImplicationQuery(
        premise="strongly-additively-quasi-completely-inverse",
        conclusion="quasi-completely-inverse",
        max_order=3,
    )
    assert find_counterexample(query) is None


def test_counterexample_quasi_skew_ring_not_skew_ring(qsr3):
    query = ImplicationQuery(premise="quasi-skew-ring", conclusion="skew-ring", max_order=3)
    witness = find_counterexample(query)
    assert witness is not None
    report = sl.classify(witness)
    assert report.holds("quasi-skew-ring") and not report.holds("skew-ring")
    # the smallest witnesses appear at order 2; the canonical 3-element example
    # is an order-3 member of the same sweep
    assert witness.order == 2
    sweep = enumerate_semirings(3, filter_class="quasi-skew-ring")
    assert canonical_form(qsr3) in {
        canonical_form(s) for s in sweep if not sl.classify(s).holds("skew-ring")
    }


def test_counterexample_qcr_not_qci():
    query = ImplicationQuery(
        premise="quasi-completely-regular",
        conclusion="quasi-completely-inverse",
        max_order=4,
    )
    witness = find_counterexample(query)
    assert witness is not None and witness.order == 2


def test_counterexample_reflexive_smoke():
    from semiringlab.classify import CLASS_KEYS

    for key in CLASS_KEYS:
        assert find_counterexample(ImplicationQuery(key, key, 2)) is None


def test_counterexample_unknown_class():
    with pytest.raises(UnknownClassName):
        find_counterexample(ImplicationQuery("nope", "skew-ring", 2))


def test_write_corpus_files_reparse_and_revalidate(tmp_path):
    reps = enumerate_semirings(2)
    manifest = write_corpus(reps, tmp_path)
    lines = manifest.strip().splitlines()
    assert len(lines) == len(reps)
    for s, line in zip(reps, lines):
        digest, order, flags = line.split(" ", 2)
        assert digest == canonical_hash(s)
        assert int(order) == 2
        loaded = sl.load_srt(tmp_path / f"{digest}.srt")
        assert sl.validate(loaded).verdict
        assert canonical_form(loaded) == canonical_form(s)


def test_order2_enumeration_is_isomorphism_complete():
    # every valid labeled pair canonicalizes onto an emitted representative
    emitted = {canonical_form(s) for s in enumerate_semirings(2)}
    seen = set()
    tables = [((a, b), (c, d)) for a, b, c, d in product(range(2), repeat=4)]
    for add in tables:
        for mul in tables:
            if sl.validate_semiring("01", add, mul).verdict:
                seen.add(canonical_form(sl.FiniteSemiring(names=("0", "1"), add=add, mul=mul)))
    assert seen == emitted
