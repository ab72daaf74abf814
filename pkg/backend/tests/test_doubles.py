import pytest
from conftest import valid_tuples

from backend.app.exceptions import InvalidInput, ParameterMismatch
from backend.app.services.algebra.doubles import (
    EPSILON,
    ONE,
    DoubleElement,
    DoubleKind,
    check_associativity,
    check_multiplicative,
    check_unit,
    double_basis,
    ensure_double_size,
    generating_keys,
    pii_isomorphism_check,
    pii_map,
    pii_map_inverse,
    triangular_isomorphism_search,
)
from backend.app.services.algebra.dual import FunctionalIndex
from backend.app.services.algebra.gta_core import Monomial, validate_parameters
from backend.app.services.pii.oracle import oracle_has_pair, oracle_pairs

G = Monomial(0, 0, 1)
X = Monomial(1, 0, 0)


def test_basis_size(sweedler_like):
    assert len(double_basis(sweedler_like)) == 64


@pytest.mark.parametrize("kind", list(DoubleKind))
def test_group_like_times_x_collapses_to_h(sweedler_like, kind):
    left = DoubleElement.basis_element(sweedler_like, kind, (EPSILON, G))
    right = DoubleElement.basis_element(sweedler_like, kind, (EPSILON, X))
    expected = DoubleElement.basis_element(sweedler_like, kind, (EPSILON, Monomial(1, 0, 1)), sweedler_like.q(sweedler_like.b1))
    assert left * right == expected


@pytest.mark.parametrize("kind", list(DoubleKind))
def test_unit_and_associativity(sweedler_like, kind):
    assert check_unit(sweedler_like, kind).passed
    check = check_associativity(sweedler_like, kind, triples=200, seed=0)
    assert check.passed, check.witness
    assert check.checked == 200


def test_kinds_do_not_mix(sweedler_like):
    drinfeld = DoubleElement.unit(sweedler_like, DoubleKind.DRINFELD)
    anti = DoubleElement.unit(sweedler_like, DoubleKind.ANTI_DRINFELD)
    with pytest.raises(ParameterMismatch):
        drinfeld * anti


def test_out_of_range_key(sweedler_like):
    with pytest.raises(ValueError):
        DoubleElement.basis_element(sweedler_like, DoubleKind.DRINFELD, (FunctionalIndex(0, 2, 0), ONE))


def test_isomorphism_for_the_first_certificate(sweedler_like):
    cert = oracle_pairs(sweedler_like)[0]
    assert (cert.c, cert.d) == (0, 1)
    report = pii_isomorphism_check(sweedler_like, cert.c, cert.d)
    assert [check.name for check in report.checks if not check.passed] == []
    assert report.passed


def test_map_preserves_the_unit_and_inverts(sweedler_like):
    unit = DoubleElement.unit(sweedler_like, DoubleKind.ANTI_DRINFELD)
    assert pii_map(unit, 0, 1) == DoubleElement.unit(sweedler_like, DoubleKind.DRINFELD)
    for key in double_basis(sweedler_like):
        u = DoubleElement.basis_element(sweedler_like, DoubleKind.ANTI_DRINFELD, key)
        assert pii_map_inverse(pii_map(u, 1, 0), 1, 0) == u


def test_non_pair_is_not_multiplicative(sweedler_like):
    keys = generating_keys(sweedler_like)
    check = check_multiplicative(sweedler_like, 0, 0, [(u, v) for u in keys for v in keys])
    assert not check.passed
    assert check.witness.startswith("f(uv) != f(u)f(v)")


def test_triangular_survivors_are_exactly_the_pairs(sweedler_like):
    expected = [(cert.c, cert.d) for cert in oracle_pairs(sweedler_like)]
    assert triangular_isomorphism_search(sweedler_like) == expected


def test_size_gate(pair_free_8):
    # dim H = 128, and 5^3 < 128 <= 6^3
    with pytest.raises(InvalidInput, match="raise --max-n to at least 6"):
        ensure_double_size(pair_free_8, 4)
    ensure_double_size(pair_free_8, 6)
    ensure_double_size(pair_free_8, 8)


def test_size_gate_follows_the_dimension_not_the_order():
    params = validate_parameters(8, 2, 2, 2, 2)
    assert (params.nx, params.ny, params.dimension) == (2, 2, 32)
    ensure_double_size(params, 4)


def test_group_like_on_the_left_only_shifts_the_group_part(sweedler_like):
    g = DoubleElement.basis_element(sweedler_like, DoubleKind.DRINFELD, (EPSILON, G))
    for phi, h in double_basis(sweedler_like):
        if h != ONE:
            continue
        product = g * DoubleElement.basis_element(sweedler_like, DoubleKind.DRINFELD, (phi, ONE))
        assert product == DoubleElement.basis_element(sweedler_like, DoubleKind.DRINFELD, (phi, G))


def test_multiplicativity_is_checked_on_generators_times_basis(sweedler_like):
    report = pii_isomorphism_check(sweedler_like, 0, 1)
    check = next(check for check in report.checks if check.name == "multiplicative")
    assert check.passed
    assert check.checked == len(generating_keys(sweedler_like)) * len(double_basis(sweedler_like))


def test_wrong_candidate_fails_the_full_check(sweedler_like):
    assert not pii_isomorphism_check(sweedler_like, 0, 0).passed


@pytest.mark.slow
def test_isomorphism_for_every_certified_tuple_up_to_4():
    for params in valid_tuples(4):
        certificates = oracle_pairs(params)
        if not certificates:
            continue
        cert = certificates[0]
        report = pii_isomorphism_check(params, cert.c, cert.d)
        assert report.passed, (params, [check.witness for check in report.checks if not check.passed])
        for kind in DoubleKind:
            assert check_associativity(params, kind, triples=200, seed=0).passed, (params, kind)


@pytest.mark.slow
def test_no_triangular_isomorphism_without_a_pair(pair_free_8):
    assert triangular_isomorphism_search(pair_free_8) == []


@pytest.mark.slow
def test_no_triangular_isomorphism_for_any_pair_free_tuple_at_8():
    pair_free = [params for params in valid_tuples(8, min_n=8) if not oracle_has_pair(params)]
    assert len(pair_free) == 64
    for params in pair_free:
        assert triangular_isomorphism_search(params) == [], params
