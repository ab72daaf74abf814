import numpy as np
import pytest
from conftest import valid_tuples

from backend.app.services.pii.oracle import (
    PiiCertificate,
    first_modular,
    modular_mask,
    odd_part_solution,
    oracle_has_modular_pair,
    oracle_has_pair,
    oracle_pairs,
    satisfies_equations,
    solution_mask,
)


def test_certificates_of_order_6(order_6):
    certificates = oracle_pairs(order_6)
    assert [(cert.c, cert.d) for cert in certificates] == [(0, 1), (3, 4)]
    assert all(cert.modular for cert in certificates)
    assert first_modular(certificates) == PiiCertificate(c=0, d=1, modular=True)
    assert oracle_has_modular_pair(order_6)


def test_no_pair_at_8(pair_free_8):
    assert oracle_pairs(pair_free_8) == []
    assert not oracle_has_pair(pair_free_8)
    assert first_modular([]) is None


def test_mask_agrees_with_the_scalar_check(order_6):
    mask = solution_mask(order_6)
    for c in range(6):
        for d in range(6):
            assert bool(mask[c, d]) == satisfies_equations(order_6, c, d)


def test_modular_mask():
    mask = modular_mask(4)
    assert mask.shape == (4, 4)
    assert int(mask.sum()) == int(np.sum([(c * d) % 4 == 0 for c in range(4) for d in range(4)]))


def test_odd_part_solution_needs_odd_order(order_6):
    with pytest.raises(ValueError):
        odd_part_solution(order_6)


def test_odd_part_solution_solves_every_odd_tuple():
    for params in valid_tuples(9, min_n=3):
        if params.order % 2 == 0:
            continue
        cert = odd_part_solution(params)
        assert satisfies_equations(params, cert.c, cert.d), params


@pytest.mark.slow
def test_odd_orders_always_have_pairs_up_to_21():
    for params in valid_tuples(21, min_n=3):
        if params.order % 2:
            cert = odd_part_solution(params)
            assert satisfies_equations(params, cert.c, cert.d)
            assert oracle_has_pair(params)
