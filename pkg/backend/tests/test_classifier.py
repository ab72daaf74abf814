import pytest
from conftest import valid_tuples
from hypothesis import given
from hypothesis import strategies as st

from backend.app.services.algebra.gta_core import validate_parameters
from backend.app.services.pii.classifier import Verdict, classify, power_and_coefficient, two_adic_split
from backend.app.services.pii.oracle import oracle_has_pair


def test_two_adic_helpers():
    assert two_adic_split(48) == (4, 3)
    assert two_adic_split(7) == (0, 7)
    assert power_and_coefficient(12, 4) == (2, 3)
    assert power_and_coefficient(26, 4) == (1, 5)
    assert power_and_coefficient(16, 4) == (None, 0)
    with pytest.raises(ValueError):
        two_adic_split(0)


def test_tuple_without_pair_at_48():
    report = classify(validate_parameters(48, 34, 4, 26, 4))
    assert report.powers == (1, 2, 1, 2)
    assert report.det_mu == 12
    assert report.tau == 2
    assert not report.has_pair
    assert report.reason is Verdict.TAU_EXCEEDS_BOUND


def test_tuple_with_pair_at_48():
    report = classify(validate_parameters(48, 34, 28, 26, 4))
    assert report.det_mu == 2
    assert report.tau == 1
    assert report.has_pair
    assert oracle_has_pair(validate_parameters(48, 34, 28, 26, 4))


def test_bound_uses_the_b1_power():
    # 8c = 4 mod 16 after elimination, so no pair; comparing with min(a-powers) says otherwise
    params = validate_parameters(16, 2, 4, 1, 6)
    report = classify(params)
    assert not report.has_pair
    assert report.stated_has_pair
    assert not oracle_has_pair(params)


def test_odd_order_short_circuits():
    report = classify(validate_parameters(9, 3, 3, 1, 8))
    assert report.has_pair and report.reason is Verdict.ODD_ORDER


@pytest.mark.parametrize("order", range(8, 65, 4))
def test_family_one_two_one_minus_two(order):
    params = validate_parameters(order, 1, 2, 1, -2)
    report = classify(params)
    assert not report.has_pair
    assert not oracle_has_pair(params)


def test_classifier_matches_oracle_up_to_12():
    for params in valid_tuples(12):
        assert classify(params).has_pair == oracle_has_pair(params), params


def test_swap_is_recorded():
    # a1 = 2 has a larger 2-power than a2 = 1
    report = classify(validate_parameters(8, 2, 1, 6, 1))
    assert report.swapped


def test_zero_coefficient_mod_the_two_part():
    # b1 = 2 vanishes mod 2
    params = validate_parameters(6, 1, 1, 2, 4)
    report = classify(params)
    assert report.reason is Verdict.ZERO_COEFFICIENT
    assert report.b1_power is None
    assert report.has_pair and oracle_has_pair(params)


def test_power_sum_reaching_n():
    params = validate_parameters(12, 2, 2, 2, 10)
    report = classify(params)
    assert report.reason is Verdict.POWER_SUM_AT_LEAST_N
    assert report.a1_power + report.b2_power >= report.n
    assert report.has_pair and oracle_has_pair(params)


def test_equal_a_powers():
    params = validate_parameters(4, 1, 1, 1, 3)
    report = classify(params)
    assert report.reason is Verdict.EQUAL_A_POWERS
    assert report.has_pair and oracle_has_pair(params)


def test_vanishing_determinant_means_no_pair():
    params = validate_parameters(12, 1, 2, 1, 10)
    report = classify(params)
    assert report.reason is Verdict.DETERMINANT_VANISHES
    assert report.det_mu == 0
    assert not report.has_pair and not report.stated_has_pair
    assert not oracle_has_pair(params)


TUPLES_UP_TO_16 = list(valid_tuples(16))


@given(st.sampled_from(TUPLES_UP_TO_16))
def test_existence_of_a_pair_does_not_depend_on_the_order_of_x_and_y(params):
    swapped = params.swapped()
    assert classify(params).has_pair == classify(swapped).has_pair
    assert oracle_has_pair(params) == oracle_has_pair(swapped)
    assert classify(params).has_pair == oracle_has_pair(params)
