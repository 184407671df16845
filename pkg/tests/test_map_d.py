"""The partial type-D map, missing-vector census, and type-D identities."""

import pytest

from worpitzky.exactnum import ONE_PLUS_Q, QPolynomial
from worpitzky.map_d import (
    erratum_report_d,
    fiber_enumerate_d,
    fiber_report_d,
    fiber_size_d,
    missing_case1_closed,
    missing_case2a_closed,
    missing_cases2b3_closed,
    missing_census,
    missing_total_closed,
    missing_weight_closed,
    printed_case_weights_q,
    printed_lhs_d_q,
    psi,
    psi_fibers,
    verify_balance_d_q,
    verify_worpitzky_d_q1,
)
from worpitzky.signed_perm import SignedPermutation
from worpitzky.sigma_vectors import neg2_vec


def test_psi_flip_example():
    outcome = psi((-2, 0, 0), 2)
    assert outcome.is_associated
    assert outcome.sigma == SignedPermutation((-2, 3, -1))
    assert outcome.flipped
    assert str(outcome) == "-2,3,-1 (flipped)"


def test_psi_missing_examples():
    assert psi((2, 0, -1), 2).missing_case == "case2b"
    assert psi((-1, 1), 1).missing_case == "case1"
    assert psi((-1, 0), 1).missing_case == "case2a"
    assert psi((0, -1, -2), 2).missing_case == "case3"


def test_psi_unflipped_association():
    outcome = psi((-1, -1), 1)
    assert outcome.sigma == SignedPermutation((-2, -1))
    assert not outcome.flipped


def test_psi_needs_length_two():
    with pytest.raises(ValueError):
        psi((1,), 1)


def test_fiber_worked_example_a():
    sigma = SignedPermutation.parse("2,-3,1,4,-5")
    assert fiber_size_d(sigma, 4) == 6
    assert fiber_enumerate_d(sigma, 4) == [
        (2, 1, -2, 2, -3),
        (2, 1, -2, 2, -4),
        (2, 1, -2, 3, -4),
        (3, 1, -2, 3, -4),
        (3, 1, -3, 3, -4),
        (3, 2, -3, 3, -4),
    ]


def test_fiber_worked_example_b():
    sigma = SignedPermutation.parse("-1,2,-3")
    assert set(fiber_enumerate_d(sigma, 2)) == {
        (0, 0, -1),
        (0, 0, -2),
        (0, 1, -2),
        (-1, 1, -2),
    }


def test_fiber_all_negative_pair():
    sigma = SignedPermutation((-2, -1))
    assert fiber_enumerate_d(sigma, 1) == [(-1, -1)]
    assert fiber_size_d(sigma, 1) == 1


def test_fiber_rejects_odd_sign_count():
    with pytest.raises(ValueError):
        fiber_enumerate_d(SignedPermutation((-1, 2)), 1)


@pytest.mark.parametrize("m", [0, 1, 2])
def test_fibers_match_forward_oracle(m):
    n = 3
    fibers, missing = psi_fibers(n, m)
    total = sum(len(vs) for vs in fibers.values())
    total += sum(len(vs) for vs in missing.values())
    assert total == (2 * m + 1) ** n
    for sigma, vectors in fibers.items():
        decoded = fiber_enumerate_d(sigma, m)
        assert set(decoded) == set(vectors)
        assert len(decoded) == fiber_size_d(sigma, m)


def test_fiber_report_passes():
    report = fiber_report_d(SignedPermutation.parse("-1,2,-3"), 2)
    assert report.passed
    assert report.expected_size == report.oracle_size == 4


def test_missing_vectors_have_at_most_one_zero():
    for m in (1, 2):
        _, missing = psi_fibers(3, m)
        for vectors in missing.values():
            assert all(v.count(0) <= 1 for v in vectors)


def test_neg2_preserved_on_associated_pairs():
    fibers, _ = psi_fibers(3, 2)
    for sigma, vectors in fibers.items():
        for v in vectors:
            assert neg2_vec(v) == sigma.neg2()


def test_census_n2_m1():
    census = missing_census(2, 1)
    assert census.counts == {"case1": 2, "case2a": 1, "case2b": 1, "case3": 0}
    assert census.total_count == 4
    assert census.total_weight == QPolynomial([2, 2])
    assert census.passed


def test_census_n3_m1():
    census = missing_census(3, 1)
    assert census.counts["case1"] == 4
    assert census.counts["case2a"] == 3
    assert census.counts["case2b"] + census.counts["case3"] == 5
    assert census.total_count == 12
    assert census.total_weight == QPolynomial([3, 6, 3])
    assert census.passed


def test_census_closed_forms_n3_m1():
    assert missing_case1_closed(3, 1) == 4
    assert missing_case2a_closed(3, 1) == 3
    assert missing_cases2b3_closed(3, 1) == 5
    assert missing_total_closed(3, 1) == 12
    assert missing_weight_closed(3, 1) == QPolynomial([3, 6, 3])


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_census_matches_closed_forms(n, m):
    assert missing_census(n, m).passed


def test_census_m0_all_zero():
    census = missing_census(3, 0)
    assert census.total_count == 0
    assert census.total_weight == 0


def test_census_parallel_matches_serial():
    assert missing_census(3, 2, jobs=2).to_json_dict() == missing_census(3, 2).to_json_dict()


def test_census_json_schema():
    d = missing_census(2, 1).to_json_dict()
    assert d["n"] == 2 and d["m"] == 1
    assert d["cases"]["case1"] == {"count": 2, "weight": [2]}
    assert d["cases"]["case2a"] == {"count": 1, "weight": [0, 1]}
    assert d["closed_forms"] == {
        "A": 1,
        "B": 1,
        "case1": 2,
        "total": 4,
        "total_weight": [2, 2],
    }
    assert d["pass"] is True


def test_printed_case_weights_n2_m1():
    case1, case2a, cases2b3 = printed_case_weights_q(2, 1)
    assert case1 == ONE_PLUS_Q
    assert case2a == 1
    assert cases2b3 == QPolynomial([0, 1])
    assert case1 + case2a + cases2b3 == missing_census(2, 1).total_weight


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("m", [1, 2])
def test_printed_case_weights_sum_matches_census(n, m):
    census = missing_census(n, m)
    case1, case2a, cases2b3 = printed_case_weights_q(n, m)
    assert case1 + case2a + cases2b3 == census.total_weight
    # q=1 specialization recovers the three closed-form counts
    assert case1.at_q1() == missing_case1_closed(n, m)
    assert case2a.at_q1() == missing_case2a_closed(n, m)
    assert cases2b3.at_q1() == missing_cases2b3_closed(n, m)


def test_printed_case_weights_differ_per_case():
    # only the sum matches: the printed case1 value deviates from the
    # direct per-case weighting (and so does case2a)
    census = missing_census(2, 1)
    case1, case2a, _ = printed_case_weights_q(2, 1)
    assert case1 != census.weights["case1"]
    assert case2a != census.weights["case2a"]


def test_worpitzky_d_q1_spot_values():
    report = verify_worpitzky_d_q1(2, 1)
    assert report.passed and report.lhs == 5 and report.rhs == 5
    report = verify_worpitzky_d_q1(3, 1)
    assert report.passed and report.lhs == 15
    report = verify_worpitzky_d_q1(4, 0)
    assert report.passed and report.lhs == 1


def test_balance_spot_values():
    report = verify_balance_d_q(2, 1)
    assert report.passed
    assert report.lhs == QPolynomial([6, 3])
    assert report.extras["associated"] == QPolynomial([4, 1])
    assert report.extras["missing"] == QPolynomial([2, 2])

    report = verify_balance_d_q(3, 1)
    assert report.passed
    assert report.lhs == QPolynomial([11, 12, 4])
    assert report.extras["associated"] == QPolynomial([8, 6, 1])
    assert report.extras["missing"] == QPolynomial([3, 6, 3])


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("m", [1, 2])
def test_balance_q1_specializes_to_worpitzky_d(n, m):
    balance = verify_balance_d_q(n, m)
    q1 = verify_worpitzky_d_q1(n, m)
    assert balance.lhs.at_q1() - balance.extras["missing"].at_q1() == q1.rhs
    assert q1.lhs + balance.extras["missing"].at_q1() == (2 * m + 1) ** n


def test_printed_lhs_deviates():
    printed = printed_lhs_d_q(2, 1)
    assert printed == ONE_PLUS_Q  # 3(1+q) - 2(1+q)
    assert printed.at_q1() == 2
    assert verify_balance_d_q(2, 1).extras["associated"].at_q1() == 5
    assert printed_lhs_d_q(3, 0) == 0


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("m", [0, 1, 2])
def test_erratum_confirmed(n, m):
    report = erratum_report_d(n, m)
    assert report.passed  # discrepancy confirmed, q=1 left side still correct
    assert report.lhs != report.rhs
    assert report.extras["correct_q1_lhs"] == report.extras["rhs_at_q1"]


def test_erratum_report_values():
    report = erratum_report_d(2, 1)
    assert report.extras["printed_at_q1"] == 2
    assert report.extras["rhs_at_q1"] == 5
