"""The multiplicity oracle against the classifier."""

import itertools

import pytest

from tlkostant import (
    Permutation,
    a_value,
    check_lemma_multi,
    enumerate_fc,
    find_distinguisher,
    is_kostant,
    multiplicity_at_one,
    negative_witness,
    special_involution,
    theta_nonzero,
    verify_classification,
    witness_postconditions,
)
from tlkostant.verify import summary_csv_rows, summary_json_dict

S1 = Permutation((2, 1))
SIGMA = Permutation((3, 4, 1, 2))
S2_4 = Permutation((1, 3, 2, 4))


def test_multiplicity_values():
    assert multiplicity_at_one(S1, S1, S1, S1) == 4
    assert multiplicity_at_one(SIGMA, SIGMA, S2_4, S2_4) == 4
    assert multiplicity_at_one(SIGMA, SIGMA, S2_4, SIGMA) == 8
    e = Permutation.identity(4)
    assert multiplicity_at_one(SIGMA, e, e, SIGMA) == 1
    assert multiplicity_at_one(SIGMA, e, e, e) == 0


def test_multiplicity_rank_mismatch():
    with pytest.raises(ValueError):
        multiplicity_at_one(S1, S1, S1, SIGMA)


@pytest.mark.parametrize("n", range(2, 7))
def test_lemma_multi(n):
    for d in enumerate_fc(n, involutions_only=True):
        for x in enumerate_fc(n):
            if theta_nonzero(x, d):
                assert check_lemma_multi(d, x)


def test_lemma_multi_preconditions():
    with pytest.raises(ValueError):
        check_lemma_multi(Permutation((2, 3, 1)), Permutation((2, 1, 3)))
    s1_3, s2_3 = Permutation((2, 1, 3)), Permutation((1, 3, 2))
    with pytest.raises(ValueError):
        check_lemma_multi(s1_3, s2_3)


def test_find_distinguisher_shortcut():
    # (x^-1, d) already separates s2 from sigma relative to sigma
    u, v = find_distinguisher(SIGMA, S2_4, SIGMA)
    assert (u, v) == (S2_4, SIGMA)
    assert (multiplicity_at_one(SIGMA, v, u, S2_4)
            != multiplicity_at_one(SIGMA, v, u, SIGMA))


def test_find_distinguisher_respects_explicit_search():
    u, v = find_distinguisher(
        SIGMA, S2_4, SIGMA, search=[(SIGMA, SIGMA), (S2_4, SIGMA)]
    )
    assert (u, v) in {(SIGMA, SIGMA), (S2_4, SIGMA)}
    assert find_distinguisher(SIGMA, S2_4, SIGMA, search=[]) is None


def test_find_distinguisher_preconditions():
    with pytest.raises(ValueError):
        find_distinguisher(SIGMA, S2_4, S2_4)
    s1_4 = Permutation((2, 1, 3, 4))
    assert not theta_nonzero(s1_4, SIGMA)
    with pytest.raises(ValueError):
        find_distinguisher(SIGMA, s1_4, SIGMA)


def test_canonical_negative_pair_has_no_distinguisher():
    d = Permutation((2, 1, 4, 3))
    x, y = negative_witness(d)
    assert witness_postconditions(d, x, y) == ()
    fc = enumerate_fc(4)
    found = find_distinguisher(
        d, x, y, search=((u, v) for u in fc for v in fc)
    )
    assert found is None


@pytest.mark.parametrize("n", range(2, 8))
def test_witness_postconditions_hold_for_all_negatives(n):
    for d in enumerate_fc(n, involutions_only=True):
        if is_kostant(d).positive:
            continue
        x, y = negative_witness(d)
        assert witness_postconditions(d, x, y) == ()


def test_witness_postconditions_flag_violations():
    d = Permutation((2, 1, 4, 3))
    x, y = negative_witness(d)
    assert "distinct" in witness_postconditions(d, x, x)
    assert "arc_counts" in witness_postconditions(d, d, d)
    bad = witness_postconditions(d, x, SIGMA)
    assert "same_top_arcs" in bad


@pytest.mark.parametrize("n", range(2, 6))
def test_verify_classification_agrees(n):
    summary = verify_classification(n)
    assert summary.ok
    assert summary.discrepancies == ()
    assert len(summary.reports) == len(
        enumerate_fc(n, involutions_only=True)
    )
    for report in summary.reports:
        assert report.agrees
        assert report.scan_complete
        if not report.positive:
            assert report.postconditions_failed == ()
            assert report.failures and not report.witnesses


def test_verify_positive_counts():
    assert [verify_classification(n).positives for n in range(2, 6)] == \
        [2, 3, 5, 8]


def test_verify_rejects_tiny_rank():
    with pytest.raises(ValueError):
        verify_classification(1)


def test_verify_beyond_scan_limit_checks_the_contract_only():
    summary = verify_classification(6, full_scan_limit=5)
    assert summary.ok
    for report in summary.reports:
        if not report.positive:
            assert not report.scan_complete
            assert report.pairs_checked == 0
            assert report.postconditions_failed == ()


def test_worker_count_does_not_change_the_summary():
    one = verify_classification(4, workers=1)
    two = verify_classification(4, workers=2)
    assert summary_json_dict(one) == summary_json_dict(two)
    assert summary_csv_rows(one) == summary_csv_rows(two)


def test_summary_serializations_agree():
    summary = verify_classification(3)
    data = summary_json_dict(summary)
    assert data["ok"] is True
    assert data["n"] == 3
    assert data["involutions"] == len(summary.reports)
    rows = summary_csv_rows(summary)
    assert len(rows) == len(summary.reports) + 1  # header


def test_case_one_shortcut_is_enough_for_unequal_arc_counts():
    # When a(x) != a(y) the pair (x^-1, d) or (y^-1, d) already separates,
    # the point of trying those two first.
    for n in range(2, 6):
        for d in enumerate_fc(n, involutions_only=True):
            if not is_kostant(d).positive:
                continue
            alive = [x for x in enumerate_fc(n) if theta_nonzero(x, d)]
            for x, y in itertools.combinations(alive, 2):
                if a_value(x) == a_value(y):
                    continue
                found = find_distinguisher(
                    d, x, y,
                    search=[(x.inverse(), d), (y.inverse(), d)],
                )
                assert found is not None
