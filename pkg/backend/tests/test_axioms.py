import pytest
from conftest import valid_tuples

from backend.app.services.algebra.axioms import (
    check_squared_antipode,
    pbw_words,
    run_axiom_suite,
    select_monomials,
    select_pairs,
    select_words,
    squared_antipode_exponent,
)
from backend.app.services.algebra.gta_core import Monomial, validate_parameters


def failures(checks):
    return [(check.name, check.witness) for check in checks if not check.passed]


@pytest.mark.parametrize("args", [(2, 1, 1, 1, 1), (4, 2, 2, 1, 1), (6, 1, 1, 1, 5), (8, 1, 2, 1, 6)])
def test_axiom_suite_passes_exhaustively(args):
    assert failures(run_axiom_suite(validate_parameters(*args))) == []


def test_sampled_scope_is_seeded(pair_free_8):
    first = select_monomials(pair_free_8, "sampled", seed=3, sample_size=10)
    assert first == select_monomials(pair_free_8, "sampled", seed=3, sample_size=10)
    assert len(first) == 10
    assert select_pairs(pair_free_8, "sampled", 3, 10) == select_pairs(pair_free_8, "sampled", 3, 10)
    assert failures(run_axiom_suite(pair_free_8, scope="sampled", seed=3, sample_size=10)) == []


def test_unknown_scope_is_rejected(sweedler_like):
    with pytest.raises(ValueError):
        run_axiom_suite(sweedler_like, scope="everything")


def test_squared_antipode_exponent(pair_free_8):
    # x y g: a1 b1 + a2 b2 = 1 + 12
    assert squared_antipode_exponent(pair_free_8, Monomial(1, 1, 1)) == 5
    assert check_squared_antipode(pair_free_8, pair_free_8.basis).passed


@pytest.mark.slow
def test_axiom_suite_on_every_tuple_up_to_8():
    for params in valid_tuples(8):
        assert failures(run_axiom_suite(params)) == [], params


def test_exhaustive_scope_grows_linearly_in_the_dimension(pair_free_8):
    # Nx = 8, Ny = 2, dim H = 128
    words = select_words(pair_free_8, "exhaustive", seed=0, sample_size=0)
    assert words == pbw_words(pair_free_8)
    assert len(words) == 16 and all(m.l == 0 for m in words)
    pairs = select_pairs(pair_free_8, "exhaustive", 0, 0)
    assert len(pairs) == 3 * 3 + 3 * 16 + 128


def test_exhaustive_suite_checks_the_antipode_against_products(sweedler_like):
    checks = {check.name: check for check in run_axiom_suite(sweedler_like)}
    assert checks["antipode_anti_multiplicative"].passed
    assert checks["antipode"].checked == len(pbw_words(sweedler_like))
