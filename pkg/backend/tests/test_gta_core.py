import pytest
from conftest import valid_tuples
from hypothesis import given, settings
from hypothesis import strategies as st

from backend.app.exceptions import NotAParameterTuple, ParameterMismatch
from backend.app.services.algebra.gta_core import (
    AlgebraElement,
    Monomial,
    TensorElement,
    antipode,
    antipode_inverse,
    coproduct,
    counit,
    generator,
    group_like,
    iterated_coproduct,
    monomial_antipode,
    multiply,
    multiply_legs,
    unit,
    validate_parameters,
)

SMALL_TUPLES = [(2, 1, 1, 1, 1), (4, 1, 1, 1, 3), (6, 1, 1, 1, 5), (8, 1, 2, 1, 6), (4, 2, 2, 1, 1), (9, 3, 3, 1, 8)]


def test_validate_reduces_and_derives_nilpotency():
    params = validate_parameters(8, 1, 2, 1, -2)
    assert params.as_tuple() == (8, 1, 2, 1, 6)
    assert (params.nx, params.ny) == (8, 2)
    assert params.dimension == 128
    assert len(params.basis) == 128


@pytest.mark.parametrize(
    "args, condition",
    [
        ((1, 1, 1, 1, 1), "N >= 2"),
        ((4, 2, 2, 2, 2), "a1*b1 != 0 mod N"),
        ((4, 1, 2, 1, 2), "a2*b2 != 0 mod N"),
        ((5, 1, 1, 1, 1), "a1*b2 + a2*b1 == 0 mod N"),
    ],
)
def test_validate_names_the_violated_condition(args, condition):
    with pytest.raises(NotAParameterTuple) as info:
        validate_parameters(*args)
    assert info.value.condition == condition


def test_tuples_sharing_relation_constants_at_48():
    first = validate_parameters(48, 34, 4, 26, 4)
    second = validate_parameters(48, 34, 28, 26, 4)
    for params in (first, second):
        assert (params.nx, params.ny) == (12, 3)
        assert (params.b1, params.b2) == (26, 4)
        assert params.braiding[0][1] == 40


def test_basis_order_and_index(sweedler_like):
    basis = sweedler_like.basis
    assert basis[0] == Monomial(0, 0, 0)
    assert list(basis) == sorted(basis)
    assert all(sweedler_like.index(m) == k for k, m in enumerate(basis))


def test_dual_and_swap_are_involutions(pair_free_8):
    assert pair_free_8.dual().as_tuple() == (8, 1, 6, 1, 2)
    assert pair_free_8.dual().dual() == pair_free_8
    assert pair_free_8.swapped().swapped() == pair_free_8


@pytest.mark.parametrize("args", SMALL_TUPLES)
def test_defining_relations(args):
    params = validate_parameters(*args)
    g, x, y = (generator(params, name) for name in ("g", "x", "y"))
    assert multiply(g, x) == multiply(x, g).scale(params.q(params.b1))
    assert multiply(g, y) == multiply(y, g).scale(params.q(params.b2))
    assert multiply(x, y) == multiply(y, x).scale(params.q(params.a1 * params.b2))
    assert group_like(params, params.order) == unit(params)

    power = unit(params)
    for _ in range(params.nx):
        power = multiply(power, x)
    assert power.is_zero()


def test_monomial_range_is_checked(sweedler_like):
    with pytest.raises(ValueError):
        AlgebraElement.monomial(sweedler_like, sweedler_like.nx, 0, 0)
    # the group-like exponent is read mod N
    assert AlgebraElement.monomial(sweedler_like, 0, 0, 3) == group_like(sweedler_like, 1)


def test_elements_of_different_algebras_do_not_mix(sweedler_like, order_6):
    with pytest.raises(ParameterMismatch):
        unit(sweedler_like) + unit(order_6)
    with pytest.raises(ParameterMismatch):
        multiply(unit(sweedler_like), unit(order_6))


@pytest.mark.parametrize("args", SMALL_TUPLES)
def test_generator_coproducts_and_antipodes(args):
    params = validate_parameters(*args)
    one = unit(params)
    x = generator(params, "x")
    y = generator(params, "y")
    assert coproduct(x) == TensorElement.pure(one, x) + TensorElement.pure(x, group_like(params, params.a1))
    assert coproduct(y) == TensorElement.pure(one, y) + TensorElement.pure(y, group_like(params, params.a2))
    assert antipode(x) == AlgebraElement.monomial(params, 1, 0, -params.a1, coeff=-1)
    assert antipode_inverse(x) == multiply(group_like(params, -params.a1), x).scale(-1)
    assert counit(x).is_zero() and counit(group_like(params, 3)).is_one()


@pytest.mark.parametrize("args", SMALL_TUPLES)
def test_inverse_antipode_inverts(args):
    params = validate_parameters(*args)
    for m in params.basis:
        u = AlgebraElement.from_monomial(params, m)
        assert antipode_inverse(antipode(u)) == u
        assert antipode(antipode_inverse(u)) == u


def test_iterated_coproduct_has_arity_three(order_6):
    legs = iterated_coproduct(generator(order_6, "x"), 3)
    assert legs.arity == 3
    assert len(legs.terms) == 3


@st.composite
def monomial_triples(draw):
    params = validate_parameters(*draw(st.sampled_from(SMALL_TUPLES)))
    picks = [draw(st.sampled_from(params.basis)) for _ in range(3)]
    return params, picks


@settings(max_examples=60, deadline=None)
@given(monomial_triples())
def test_multiplication_is_associative(case):
    params, (a, b, c) = case
    u, v, w = (AlgebraElement.from_monomial(params, m) for m in (a, b, c))
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))


def test_exchange_exponent_reads_either_way_on_valid_tuples():
    # q^(a1 b2) = q^(-a2 b1) follows from the mixed condition alone
    for params in valid_tuples(12):
        assert (params.a1 * params.b2) % params.order == (-params.a2 * params.b1) % params.order, params


def test_tensor_products_of_skew_primitive_legs(pair_free_8):
    params = pair_free_8
    one, g, x = unit(params), generator(params, "g"), generator(params, "x")
    twist = group_like(params, params.a1)
    x_twisted = multiply(x, twist)
    assert TensorElement.pure(one, x) * TensorElement.pure(x, twist) == TensorElement.pure(x, x_twisted)
    # g^a1 x = q^(a1 b1) x g^a1 on the second leg
    assert TensorElement.pure(x, twist) * TensorElement.pure(one, x) == TensorElement.pure(x, x_twisted).scale(
        params.q(params.a1 * params.b1)
    )
    assert coproduct(g) * coproduct(x) == coproduct(multiply(g, x))
    x_top = AlgebraElement.monomial(params, params.nx - 1, 0, 0)
    assert (TensorElement.pure(x_top, one) * TensorElement.pure(x, one)).is_zero()
    with pytest.raises(ParameterMismatch):
        TensorElement.pure(one, x) * TensorElement.pure(one, x, g)


@pytest.mark.parametrize("args", SMALL_TUPLES)
def test_coproduct_is_the_product_of_generator_coproducts(args):
    params = validate_parameters(*args)

    def powers(name, count):
        result = [TensorElement.unit(params)]
        for _ in range(count - 1):
            result.append(result[-1] * coproduct(generator(params, name)))
        return result

    dx, dy, dg = powers("x", params.nx), powers("y", params.ny), powers("g", params.order)
    for m in params.basis:
        assert coproduct(AlgebraElement.from_monomial(params, m)) == dx[m.i] * dy[m.j] * dg[m.l], m


def test_multiply_legs_multiplies_left_to_right(order_6):
    one = unit(order_6)
    g, x, y = (generator(order_6, name) for name in ("g", "x", "y"))
    t = TensorElement.pure(x, y, g) + TensorElement.pure(g, x, one).scale(2)
    assert multiply_legs(t) == multiply(multiply(x, y), g) + multiply(g, x).scale(2)
    x_top = AlgebraElement.monomial(order_6, order_6.nx - 1, 0, 0)
    assert multiply_legs(TensorElement.pure(x_top, x)).is_zero()


@pytest.mark.parametrize("args", SMALL_TUPLES)
def test_antipode_of_a_monomial_is_a_single_term(args):
    params = validate_parameters(*args)
    for m in params.basis:
        u = AlgebraElement.from_monomial(params, m)
        for inverse, fn in ((False, antipode), (True, antipode_inverse)):
            images = monomial_antipode(params, m, inverse=inverse)
            assert len(images) == 1
            assert AlgebraElement(params, dict(images)) == fn(u)
