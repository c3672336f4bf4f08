import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chowpow.combinatorics import m_partitions, q_binomial
from chowpow.plethysm import (
    VANISHING_BARS,
    BudgetExceeded,
    bar_vanishes,
    closed_form_c,
    closed_form_pleth_Lr2,
    foulkes_delta_case,
    jacobi_trudi_terms,
    monomial_coefficient,
    monomial_table_bruteforce,
    pleth_difference_Lr2,
    plethysm,
    plethysm_bruteforce,
)

from oracles import plethysm_powersum


def test_monomial_coefficient_examples():
    assert monomial_coefficient((2, 2), 2, 2) == 2
    for d in range(1, 5):
        for n in range(1, 5):
            assert monomial_coefficient((d * n,), d, n) == 1
    assert monomial_coefficient((), 0, 3) == 1


def test_monomial_coefficient_matches_expansion():
    for d in range(1, 4):
        for n in range(1, 4):
            table = monomial_table_bruteforce(d, n, 3)
            for nu, count in table.items():
                assert monomial_coefficient(nu, d, n) == count


def test_c_two_row_is_box_count():
    for d in range(1, 6):
        for n in range(1, 6):
            for k in range(0, d * n // 2 + 1):
                assert monomial_coefficient((d * n - k, k), d, n) == q_binomial(n, d)[k]


@pytest.mark.parametrize("third", [0, 1, 2])
def test_closed_form_c_matches_dp(third):
    for d in range(1, 6):
        for n in range(1, 6):
            for k in range(third, d * n):
                L = d * n - k - third
                if L < k:
                    break
                assert closed_form_c((L, k, third), d, n) == monomial_coefficient((L, k, third), d, n)


def test_closed_form_c_edge_cases():
    assert closed_form_c((12, 0, 0), 3, 4) == 1
    assert closed_form_c((2, 1, 1), 2, 2) == monomial_coefficient((2, 1, 1), 2, 2)


def test_jacobi_trudi_terms_drop_negative_indices():
    terms = jacobi_trudi_terms((1, 1))
    assert terms == [(1, (1, 1)), (-1, (2, 0))]
    assert all(min(nu) >= 0 for _, nu in jacobi_trudi_terms((3, 1, 1)))


def test_plethysm_examples():
    assert plethysm((34, 6, 2), 7, 6) == 8
    assert plethysm((47, 7, 2), 8, 7) == 11
    assert plethysm((2, 2, 2), 3, 2) == 1
    assert plethysm((2, 2, 2), 2, 3) == 0
    for n in range(1, 8):
        assert plethysm((n,), 1, n) == 1


def test_plethysm_table_last_row():
    # the value is 19, not 11; see the power sum oracle test below
    assert plethysm((14, 14, 13, 13), 9, 6) == 19
    assert plethysm((14, 14, 13, 13), 6, 9) == 0


@pytest.mark.slow
def test_plethysm_table_last_row_powersum_oracle():
    assert plethysm_powersum((14, 14, 13, 13), 9, 6) == 19
    assert plethysm_powersum((14, 14, 13, 13), 6, 9) == 0


def test_powersum_oracle_small():
    for d in range(1, 4):
        for n in range(1, 4):
            for lam in m_partitions(d * n, 3):
                assert plethysm_powersum(lam, d, n, 3) == plethysm(lam, d, n)


def test_plethysm_wrong_size_is_zero():
    assert plethysm((5, 1), 2, 2) == 0


def test_plethysm_too_many_rows():
    with pytest.raises(ValueError):
        plethysm((1, 1, 1, 1, 1, 1), 2, 3)
    # the brute force route still handles it
    assert plethysm_bruteforce((1, 1, 1, 1, 1, 1), 2, 3) == 0


def test_bruteforce_examples():
    assert plethysm_bruteforce((2, 2), 2, 2) == 1
    assert plethysm_bruteforce((4,), 2, 2) == 1
    assert plethysm_bruteforce((3, 1), 2, 2) == 0


def test_bruteforce_budget():
    with pytest.raises(BudgetExceeded):
        plethysm_bruteforce((20, 10, 5), 7, 5, budget=1000)


def test_routes_agree_four_rows():
    for d in range(2, 5):
        for n in range(2, 5):
            for lam in m_partitions(d * n, 4):
                assert plethysm(lam, d, n) == plethysm_bruteforce(lam, d, n, nvars=4), (lam, d, n)


def test_routes_agree_three_rows_up_to_five():
    for d in range(2, 6):
        for n in range(2, 6):
            if d == n == 5:
                continue  # the brute force expansion is large here
            for lam in m_partitions(d * n, 3):
                assert plethysm(lam, d, n) == plethysm_bruteforce(lam, d, n, nvars=3, budget=5_000_000)


def test_closed_form_pleth_examples():
    assert closed_form_pleth_Lr2(34, 6, 6, 6 + 1) == plethysm((34, 6, 2), 6, 7)
    assert closed_form_pleth_Lr2(34, 6, 7, 6) == 8
    assert closed_form_pleth_Lr2(47, 7, 8, 7) == 11


def test_closed_form_pleth_matches_dp():
    for d in range(2, 7):
        for n in range(2, 7):
            for r in range(2, d * n):
                L = d * n - r - 2
                if L < r:
                    break
                assert closed_form_pleth_Lr2(L, r, d, n) == plethysm((L, r, 2), d, n), (L, r, d, n)


def test_difference_examples():
    assert pleth_difference_Lr2(10, 4, 4, 4) == 0
    assert pleth_difference_Lr2(35, 35, 9, 8) == 0
    for n in range(2, 8):
        assert pleth_difference_Lr2(n * n - 2, n, n + 1, n) == 1


def test_difference_matches_dp():
    for d in range(2, 7):
        for n in range(2, 7):
            for r in range(2, d * n):
                L = d * n - r - 2
                if L < r:
                    break
                lam = (L, r, 2)
                assert pleth_difference_Lr2(L, r, d, n) == plethysm(lam, d, n) - plethysm(lam, n, d)


def test_foulkes_delta_examples():
    assert foulkes_delta_case(5, 3).case == "zero"
    assert foulkes_delta_case(6, 6).case == "one"
    key = foulkes_delta_case(8, 35)
    assert key.case == "exception" and key.value == 0
    assert key.to_json() == {"case": "exception", "value": "0"}
    assert foulkes_delta_case(8, 34).case == "positive"


def test_foulkes_delta_matches_plethysm():
    for n in range(2, 7):
        for r in range(2, (n * n + n - 2) // 2 + 1):
            lam = (n * n + n - 2 - r, r, 2)
            direct = plethysm(lam, n + 1, n) - plethysm(lam, n, n + 1)
            assert foulkes_delta_case(n, r).value == direct


def test_foulkes_delta_zero_just_above_n():
    # p_1 - p_0 of a nonempty box is 0
    for n in range(3, 10):
        assert foulkes_delta_case(n, n + 1).value == 0


def test_hermite_reciprocity():
    for d in range(1, 7):
        for n in range(1, 7):
            for lam in m_partitions(d * n, 2):
                assert plethysm(lam, d, n) == plethysm(lam, n, d)


def test_foulkes_inequality_desk_range():
    for d in range(3, 6):
        for n in range(2, d):
            for lam in m_partitions(d * n, 3):
                assert plethysm(lam, n, d) <= plethysm(lam, d, n)


def test_bar_vanishes_examples():
    assert bar_vanishes((6 * 4 - 2, 1, 1), 6)
    assert bar_vanishes((6 * 4 - 6, 3, 3), 6)
    assert not bar_vanishes((6 * 4 - 12, 6, 6), 6)
    with pytest.raises(ValueError):
        bar_vanishes((5,), 5)
    assert len(VANISHING_BARS[7]) == 18


def test_bar_vanishes_implies_zero_n6():
    for d in range(1, 11):
        for lam in m_partitions(6 * d, 3):
            if bar_vanishes(lam, 6):
                assert plethysm(lam, d, 6) == 0


def test_bar_vanishes_implies_zero_n7():
    for d in range(1, 7):
        for lam in m_partitions(7 * d, 4):
            if bar_vanishes(lam, 7):
                assert plethysm(lam, d, 7) == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_padding_and_nonnegativity(d, n, data):
    lams = list(m_partitions(d * n, 4))
    lam = data.draw(st.sampled_from(lams))
    value = plethysm(lam, d, n)
    assert value >= 0
    assert plethysm(tuple(lam) + (0, 0), d, n) == value
