import pytest
from hypothesis import given, settings, strategies as st

import oracle as O
from qrr.laurent import LaurentPoly
from qrr.partitions import (
    FrobeniusSymbol, OscillationSpec, Partition, Sign, b_set, bijection_bq, box_bounds, box_partitions, count_b,
    count_pm, count_q, minimal_partition, minimal_weight, oscillation, oscillation_bruteforce, partition_stats,
    partitions_of, q_set, signed_sum_check, verify_bq_bijection, verify_conjugation_rules, verify_gf_pm,
    verify_inclusion_exclusion, verify_minimal, verify_schur_counts,
)
from qrr.qpoch import q_binomial
from qrr.report import InvalidInstance
from qrr.schur import Flavor, schur

partitions_st = st.lists(st.integers(1, 9), max_size=8).map(lambda xs: Partition.of(*xs))


def test_stats_example():
    w, conj, d, fr, ranks = partition_stats((7, 7, 5, 3, 3, 1, 1, 1))
    assert w == 28
    assert conj == Partition((8, 5, 5, 3, 3, 2, 2))
    assert d == 3
    assert fr == FrobeniusSymbol((6, 5, 2), (7, 3, 2))
    assert ranks == (-1, 2, 0)


def test_stats_empty_and_small():
    w, conj, d, fr, ranks = partition_stats(())
    assert (w, d, fr.size, ranks) == (0, 0, 0, ())
    assert Partition.of(5, 2).ranks == (3, 0)
    assert Partition.of(5, 2).frobenius == FrobeniusSymbol((4, 0), (1, 0))


@given(partitions_st)
@settings(max_examples=150, deadline=None)
def test_frobenius_roundtrip_and_ranks(lam):
    assert lam.frobenius.to_partition() == lam
    assert lam.conjugate.conjugate == lam
    assert lam.frobenius.weight == lam.weight
    assert lam.ranks == O.ranks(lam.parts)
    assert lam.conjugate.parts == O.conjugate(lam.parts)


def test_invalid_partitions():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        FrobeniusSymbol((1, 1), (2, 0))


def test_partition_enumeration():
    assert sum(1 for _ in partitions_of(10)) == 42
    assert sum(1 for _ in partitions_of(10, largest=3, max_len=4)) == O.gauss_by_counting(7, 4).get(10, 0)
    assert len(box_partitions(3, 2)) == len(O.box_partitions(3, 2))


# ------------------------------------------------------------ b and q sets

def test_count_b_is_schur():
    gf2 = LaurentPoly({l: count_b(2, l, 6) for l in range(20)})
    assert gf2 == schur(Flavor.E, 6)
    gf1 = LaurentPoly({l: count_b(1, l, 6) for l in range(20)})
    assert gf1 == schur(Flavor.D, 6)
    for n in range(2, 9):
        assert count_b(2, 0, n) == 1
        assert count_q(2, 0, n) == 1


def test_q_sets_at_six():
    assert set(q_set(2, 6)) == {Partition.of(*p) for p in [(), (1,), (2,), (2, 1), (3, 1), (2, 2), (3, 2), (3, 3)]}
    assert set(q_set(1, 6)) == {Partition.of(*p) for p in [(), (2,), (3,), (3, 1), (3, 3)]}


def test_b_set_against_subset_oracle():
    for i in (1, 2):
        for n in range(1, 12):
            got = sorted(tuple(sorted(p.parts)) for p in b_set(i, n))
            want = sorted(O.gap_two_subsets(n - 2, 3 - i)) if n >= 3 - i else []
            assert got == want


def test_bijection_examples():
    assert bijection_bq(2, (4, 2)) == Partition.of(3, 3)
    assert bijection_bq(2, ()) == Partition()
    assert bijection_bq(2, (3, 3), "backward") == Partition.of(4, 2)
    with pytest.raises(InvalidInstance):
        bijection_bq(2, (4, 3))
    with pytest.raises(InvalidInstance):
        bijection_bq(1, (3, 1))
    with pytest.raises(InvalidInstance):
        bijection_bq(2, (4,), "backward")
    with pytest.raises(InvalidInstance):
        bijection_bq(2, (6,), n=6)


@pytest.mark.parametrize("i", [1, 2])
def test_bijection_lands_in_q_set(i):
    for n in range(1, 11):
        qs = set(q_set(i, n))
        images = [bijection_bq(i, lam, "forward", n) for lam in b_set(i, n)]
        assert len(set(images)) == len(images)
        assert set(images) == qs
        for lam in b_set(i, n):
            assert bijection_bq(i, lam, n=n).weight == lam.weight


def test_bijection_reports():
    for i in (1, 2):
        for n in (1, 2, 5, 9):
            assert verify_bq_bijection(i, n, 30).ok


def test_schur_count_reports():
    assert all(r.ok for r in verify_schur_counts(10))


# ------------------------------------------------------------ oscillation

def test_oscillation_examples():
    for i in (1, 2):
        for s in Sign:
            assert oscillation(Partition(), OscillationSpec(i, s)) == 0
    assert oscillation((5, 2), OscillationSpec(1, Sign.POSITIVE)) == 2
    assert oscillation((7, 7, 5, 3, 3, 1, 1, 1), OscillationSpec(2, Sign.NEGATIVE)) == 2
    assert Sign.parse("+") is Sign.POSITIVE and Sign.parse(-1) is Sign.NEGATIVE


@given(partitions_st, st.sampled_from([1, 2]), st.sampled_from(list(Sign)))
@settings(max_examples=200, deadline=None)
def test_greedy_oscillation_matches_bruteforce(lam, i, sign):
    spec = OscillationSpec(i, sign)
    assert oscillation(lam, spec) == oscillation_bruteforce(lam, spec)


def test_count_pm():
    a, b = 3, 2
    all_l = {}
    for p in O.box_partitions(a, b):
        all_l[sum(p)] = all_l.get(sum(p), 0) + 1
    for l in range(a * b + 1):
        assert count_pm(2, a, b, 0, l, "+") == all_l.get(l, 0)
    assert count_pm(2, 3, 2, 1, 0, "+") == 0
    # p_2(3,2;1;4): box partitions of 4 with a rank >= 2 at an odd position
    want = sum(1 for p in O.box_partitions(3, 2) if sum(p) == 4 and any(r >= 2 for r in O.ranks(p)))
    assert count_pm(2, 3, 2, 1, 4, "+") == want


def test_gf_pm_examples():
    # j = 0 is the plain q-binomial of the box
    for i in (1, 2):
        for n in range(1, 8):
            a, b = box_bounds(n, i)
            gf = LaurentPoly({l: count_pm(i, a, b, 0, l, "+") for l in range(a * b + 1)})
            assert gf == q_binomial(a + b, b)
    assert verify_gf_pm(2, 6, 1).ok


def test_gf_pm_and_inclusion_exclusion_small():
    for i in (1, 2):
        for n in range(1, 8):
            for j in range(-2, 3):
                assert verify_gf_pm(i, n, j).ok
            assert verify_inclusion_exclusion(i, n).ok


# ------------------------------------------------------------ minimal partitions

def test_minimal_examples():
    lam = minimal_partition(1, 2, "+")
    assert lam == Partition.of(5, 2) and lam.weight == 7 == minimal_weight(1, 2, "+")
    assert minimal_partition(1, 0, "+") == Partition() == minimal_partition(2, 0, "-")


def test_minimal_weights_and_oscillation():
    for i in (1, 2, 3, 4):
        for j in range(1, 7):
            for s in Sign:
                lam = minimal_partition(i, j, s)
                assert lam.weight == minimal_weight(i, j, s)
                assert lam.durfee == j
                if i <= 2:
                    assert oscillation(lam, OscillationSpec(i, s)) == j


def test_minimality_by_search_small():
    for i in (1, 2):
        for j in (1, 2, 3):
            for s in Sign:
                assert verify_minimal(i, j, s).ok


def test_minimal_lighter_search_is_exhaustive():
    # nothing lighter than (5,2) reaches positive oscillation 2 for i = 1
    spec = OscillationSpec(1, Sign.POSITIVE)
    for w in range(7):
        for lam in partitions_of(w):
            assert oscillation(lam, spec) < 2


def test_conjugation_rules_small():
    assert all(r.ok for r in verify_conjugation_rules(3))


def test_signed_sum():
    r = signed_sum_check(2, 0, 0)
    assert r.ok
    r = signed_sum_check(1, 0, 1)
    assert r.ok
    for i in (1, 2):
        for n in range(4):
            for k in (0, 1):
                assert signed_sum_check(i, n, k).ok
    assert signed_sum_check(3, 0, 0).status == "invalid"
