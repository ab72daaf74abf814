"""Hopf axiom suite for H_q(a1, a2, b1, b2), checked exactly on basis monomials.

The exhaustive scope checks coassociativity, the counit and the antipode on
every PBW word x^i y^j. It then checks Delta multiplicative and S
anti-multiplicative on (b, g) for every basis monomial b, and on (generator,
word) pairs. Since x^i y^j g^l = (x^i y^j) g^l, those identities carry the three
axioms from the words over to every basis monomial.
"""

import logging
import random
from typing import List, Optional, Sequence, Tuple

from ...exceptions import InvalidInput
from .checks import PropertyCheck, check_all
from .cyclotomic import gauss_binomial
from .gta_core import (
    AlgebraElement,
    GtaParameters,
    Monomial,
    TensorElement,
    antipode,
    antipode_inverse,
    antipode_power,
    coproduct,
    coproduct_on_leg,
    counit,
    counit_on_leg,
    generator,
    group_like,
    map_leg,
    multiply,
    multiply_legs,
    unit,
)

logger = logging.getLogger(__name__)

SCOPES = ("exhaustive", "sampled")
GENERATOR_NAMES = ("g", "x", "y")


def _check_scope(scope: str) -> None:
    if scope not in SCOPES:
        raise InvalidInput(f"scope must be one of {SCOPES}, got {scope!r}")


def pbw_words(params: GtaParameters) -> List[Monomial]:
    """x^i y^j with no group-like part."""
    return [Monomial(i, j, 0) for i in range(params.nx) for j in range(params.ny)]


def select_monomials(params: GtaParameters, scope: str, seed: int, sample_size: int) -> List[Monomial]:
    """The full basis, or a seeded sample of it."""
    _check_scope(scope)
    basis = list(params.basis)
    if scope == "exhaustive" or sample_size >= len(basis):
        return basis
    return random.Random(seed).sample(basis, sample_size)


def select_words(params: GtaParameters, scope: str, seed: int, sample_size: int) -> List[Monomial]:
    """Monomials for the coproduct-heavy axioms: every PBW word, or the seeded sample."""
    if scope == "exhaustive":
        return pbw_words(params)
    return select_monomials(params, scope, seed, sample_size)


def select_pairs(params: GtaParameters, scope: str, seed: int, sample_size: int) -> List[Tuple[Monomial, Monomial]]:
    """Generator pairs, then (generator, word) and (basis, g) pairs (exhaustive) and seeded random pairs."""
    _check_scope(scope)
    generators = [next(iter(generator(params, name).terms)) for name in GENERATOR_NAMES]
    pairs = [(u, v) for u in generators for v in generators]
    if scope == "exhaustive":
        g = generators[0]
        pairs += [(u, w) for u in generators for w in pbw_words(params)]
        pairs += [(m, g) for m in params.basis]
    rng = random.Random(seed)
    basis = params.basis
    pairs += [(rng.choice(basis), rng.choice(basis)) for _ in range(sample_size)]
    return pairs


def _element(params: GtaParameters, m: Monomial) -> AlgebraElement:
    return AlgebraElement.from_monomial(params, m)


def check_coassociativity(params: GtaParameters, monomials: Sequence[Monomial]) -> PropertyCheck:
    def witness_of(m: Monomial) -> Optional[str]:
        delta = coproduct(_element(params, m))
        if coproduct_on_leg(delta, 0) != coproduct_on_leg(delta, 1):
            return f"(Delta x id)Delta != (id x Delta)Delta on {m}"
        return None

    return check_all("coassociativity", monomials, witness_of)


def check_counit(params: GtaParameters, monomials: Sequence[Monomial]) -> PropertyCheck:
    def witness_of(m: Monomial) -> Optional[str]:
        u = _element(params, m)
        delta = coproduct(u)
        if counit_on_leg(delta, 0).to_element() != u:
            return f"(eps x id)Delta(u) != u for u = {m}"
        if counit_on_leg(delta, 1).to_element() != u:
            return f"(id x eps)Delta(u) != u for u = {m}"
        return None

    return check_all("counit", monomials, witness_of)


def check_antipode(params: GtaParameters, monomials: Sequence[Monomial]) -> PropertyCheck:
    def witness_of(m: Monomial) -> Optional[str]:
        u = _element(params, m)
        delta = coproduct(u)
        expected = unit(params).scale(counit(u))
        if multiply_legs(map_leg(delta, 0, antipode)) != expected:
            return f"m(S x id)Delta(u) != eps(u)1 for u = {m}"
        if multiply_legs(map_leg(delta, 1, antipode)) != expected:
            return f"m(id x S)Delta(u) != eps(u)1 for u = {m}"
        return None

    return check_all("antipode", monomials, witness_of)


def check_coproduct_multiplicative(params: GtaParameters, pairs: Sequence[Tuple[Monomial, Monomial]]) -> PropertyCheck:
    def witness_of(pair: Tuple[Monomial, Monomial]) -> Optional[str]:
        u, v = (_element(params, m) for m in pair)
        if coproduct(multiply(u, v)) != coproduct(u) * coproduct(v):
            return f"Delta({pair[0]} * {pair[1]}) != Delta({pair[0]}) Delta({pair[1]})"
        return None

    return check_all("coproduct_multiplicative", pairs, witness_of)


def check_antipode_anti_multiplicative(params: GtaParameters, pairs: Sequence[Tuple[Monomial, Monomial]]) -> PropertyCheck:
    def witness_of(pair: Tuple[Monomial, Monomial]) -> Optional[str]:
        u, v = (_element(params, m) for m in pair)
        if antipode(multiply(u, v)) != multiply(antipode(v), antipode(u)):
            return f"S({pair[0]} * {pair[1]}) != S({pair[1]}) S({pair[0]})"
        return None

    return check_all("antipode_anti_multiplicative", pairs, witness_of)


def squared_antipode_exponent(params: GtaParameters, m: Monomial) -> int:
    """S^2(x^i y^j g^l) = q^(i a1 b1 + j a2 b2) x^i y^j g^l."""
    return (m.i * params.a1 * params.b1 + m.j * params.a2 * params.b2) % params.order


def check_squared_antipode(params: GtaParameters, monomials: Sequence[Monomial]) -> PropertyCheck:
    def witness_of(m: Monomial) -> Optional[str]:
        u = _element(params, m)
        if antipode_power(u, 2) != u.scale(params.q(squared_antipode_exponent(params, m))):
            return f"S^2({m}) is not q^{squared_antipode_exponent(params, m)} * {m}"
        return None

    return check_all("squared_antipode", monomials, witness_of)


def check_inverse_antipode(params: GtaParameters, monomials: Sequence[Monomial]) -> PropertyCheck:
    def witness_of(m: Monomial) -> Optional[str]:
        u = _element(params, m)
        if antipode(antipode_inverse(u)) != u or antipode_inverse(antipode(u)) != u:
            return f"S and S^-1 are not inverse on {m}"
        return None

    return check_all("inverse_antipode", monomials, witness_of)


def check_gauss_binomial_coproduct(params: GtaParameters) -> PropertyCheck:
    """Coefficients of Delta(x^n) and Delta(y^n) against Gaussian binomials."""
    cases = [("x", n, k) for n in range(params.nx) for k in range(n + 1)]
    cases += [("y", n, k) for n in range(params.ny) for k in range(n + 1)]

    def witness_of(case: Tuple[str, int, int]) -> Optional[str]:
        name, n, k = case
        if name == "x":
            power, twist, base = Monomial(n, 0, 0), params.a1, params.a1 * params.b1
            left, right = Monomial(k, 0, 0), Monomial(n - k, 0, (twist * k) % params.order)
        else:
            power, twist, base = Monomial(0, n, 0), params.a2, params.a2 * params.b2
            left, right = Monomial(0, k, 0), Monomial(0, n - k, (twist * k) % params.order)
        delta = coproduct(_element(params, power))
        found = delta.terms.get((left, right))
        expected = gauss_binomial(n, k, base, params.order)
        if found is None or found != expected:
            return f"coefficient of {left} (x) {right} in Delta({power}) is {found}, expected {expected}"
        return None

    return check_all("gauss_binomial_coproduct", cases, witness_of)


def check_group_like(params: GtaParameters) -> PropertyCheck:
    def witness_of(l: int) -> Optional[str]:
        g = group_like(params, l)
        if coproduct(g) != TensorElement.pure(g, g):
            return f"g^{l} is not group-like"
        return None

    return check_all("group_like", range(params.order), witness_of)


def run_axiom_suite(params: GtaParameters, scope: str = "exhaustive", seed: int = 0, sample_size: int = 100) -> List[PropertyCheck]:
    monomials = select_monomials(params, scope, seed, sample_size)
    words = select_words(params, scope, seed, sample_size)
    pairs = select_pairs(params, scope, seed, sample_size)
    logger.info(
        f"axiom suite on {params}: {len(words)} words, {len(monomials)} monomials, {len(pairs)} pairs ({scope})"
    )
    results = [
        check_group_like(params),
        check_coassociativity(params, words),
        check_counit(params, words),
        check_antipode(params, words),
        check_coproduct_multiplicative(params, pairs),
        check_antipode_anti_multiplicative(params, pairs),
        check_squared_antipode(params, monomials),
        check_inverse_antipode(params, monomials),
        check_gauss_binomial_coproduct(params),
    ]
    for result in results:
        if not result.passed:
            logger.error(f"{result.name} failed on {params}: {result.witness}")
    return results
