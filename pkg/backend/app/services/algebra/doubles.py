"""Drinfeld and anti-Drinfeld doubles on the space dual (x) H.

Both use the product

    (alpha (x) g)(beta (x) h) = alpha_(1)(h_(1)) alpha_(3)(T(h_(3))) beta alpha_(2) (x) g h_(2)

with T = S for the Drinfeld double D(H) and T = S^-1 for the anti-Drinfeld
double A(H). The outer legs of alpha are never split off: alpha_(2) is the
functional k -> alpha(h_(1) k T(h_(3))), which vanishes off a single slice
x^s y^t g^* and is only evaluated there.

For a pair in involution (l, beta) = (g^d, xi^-c) the map

    f(alpha (x) g) = alpha_(2)(l) beta^-1(g_(2)) alpha_(1) (x) g_(1)

is an algebra isomorphism A(H) -> D(H).
"""

import logging
import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import count
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ...exceptions import InvalidInput, ParameterMismatch
from .checks import PropertyCheck, check_all
from .cyclotomic import CyclotomicScalar
from .dual import (
    FunctionalIndex,
    functional_indices,
    functional_monomial,
    functional_monomial_product,
    slice_coordinates,
    xi_power,
)
from .gta_core import (
    AlgebraElement,
    GtaParameters,
    Monomial,
    iterated_coproduct,
    monomial_antipode,
    monomial_coproduct,
    monomial_product,
)

logger = logging.getLogger(__name__)


class DoubleKind(str, Enum):
    DRINFELD = "drinfeld"
    ANTI_DRINFELD = "anti_drinfeld"


DoubleKey = Tuple[FunctionalIndex, Monomial]
EPSILON = FunctionalIndex(0, 0, 0)
ONE = Monomial(0, 0, 0)


def double_basis(params: GtaParameters) -> List[DoubleKey]:
    return [(index, m) for index in functional_indices(params) for m in params.basis]


class DoubleElement:
    """Sparse element of D(H) or A(H) in the basis xi^r psi^s phi^t (x) x^i y^j g^l."""

    __slots__ = ("params", "kind", "terms")

    def __init__(self, params: GtaParameters, kind: DoubleKind, terms: Optional[Dict[DoubleKey, CyclotomicScalar]] = None):
        self.params = params
        self.kind = kind
        self.terms: Dict[DoubleKey, CyclotomicScalar] = {
            k: c for k, c in (terms or {}).items() if not c.is_zero()
        }

    @classmethod
    def basis_element(cls, params: GtaParameters, kind: DoubleKind, key: DoubleKey, coeff: Union[CyclotomicScalar, int] = 1) -> "DoubleElement":
        index, m = key
        if not (0 <= index.r < params.order and 0 <= index.s < params.nx and 0 <= index.t < params.ny):
            raise ValueError(f"functional index {tuple(index)} out of range for {params}")
        if not (0 <= m.i < params.nx and 0 <= m.j < params.ny and 0 <= m.l < params.order):
            raise ValueError(f"monomial {tuple(m)} out of range for {params}")
        if isinstance(coeff, int):
            coeff = CyclotomicScalar.from_int(params.order, coeff)
        return cls(params, kind, {(FunctionalIndex(*index), Monomial(*m)): coeff})

    @classmethod
    def unit(cls, params: GtaParameters, kind: DoubleKind) -> "DoubleElement":
        return cls.basis_element(params, kind, (EPSILON, ONE))

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, factor: Union[CyclotomicScalar, int]) -> "DoubleElement":
        return DoubleElement(self.params, self.kind, {k: c * factor for k, c in self.terms.items()})

    def __add__(self, other: "DoubleElement") -> "DoubleElement":
        _check_same(self, other)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            acc[k] = acc[k] + c if k in acc else c
        return DoubleElement(self.params, self.kind, acc)

    def __mul__(self, other):
        if isinstance(other, DoubleElement):
            return double_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DoubleElement):
            return NotImplemented
        return self.params == other.params and self.kind == other.kind and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{index}(x){m}" for (index, m), c in sorted(self.terms.items()))

    def __repr__(self) -> str:
        return f"DoubleElement({self.kind.value}, {self.params}, {self})"


def _check_same(u: DoubleElement, v: DoubleElement) -> None:
    if u.params != v.params or u.kind != v.kind:
        raise ParameterMismatch(f"cannot combine {u.kind.value} on {u.params} with {v.kind.value} on {v.params}")


def _element(params: GtaParameters, m: Monomial) -> AlgebraElement:
    return AlgebraElement.from_monomial(params, m)


@lru_cache(maxsize=1 << 14)
def _triple_coproduct(params: GtaParameters, m: Monomial) -> Tuple[Tuple[Tuple[Monomial, ...], CyclotomicScalar], ...]:
    return tuple(sorted(iterated_coproduct(_element(params, m), 3).terms.items()))


@lru_cache(maxsize=1 << 16)
def _sandwich_coordinates(
    params: GtaParameters, kind: DoubleKind, index: FunctionalIndex, left: Monomial, right: Monomial
) -> Tuple[Tuple[FunctionalIndex, CyclotomicScalar], ...]:
    """Coordinates of k -> alpha(left k T(right)) for alpha = xi^r psi^s phi^t.

    alpha vanishes off x^s y^t g^*, so only k on the slice shifted back by the
    x and y degrees of left and right can contribute.
    """
    s = index.s - left.i - right.i
    t = index.t - left.j - right.j
    if s < 0 or t < 0:
        return ()
    alpha = functional_monomial(params, *index)
    twisted = monomial_antipode(params, right, inverse=kind is DoubleKind.ANTI_DRINFELD)
    zero = CyclotomicScalar.zero(params.order)

    def value(l: int) -> CyclotomicScalar:
        first = monomial_product(params, left, Monomial(s, t, l))
        if first is None:
            return zero
        total = zero
        for m, weight in twisted:
            second = monomial_product(params, first[1], m)
            if second is not None:
                total = total + weight * params.q(first[0] + second[0]) * alpha.value(second[1])
        return total

    return tuple(sorted(slice_coordinates(params, s, t, value).items()))


@lru_cache(maxsize=1 << 16)
def basis_product(params: GtaParameters, kind: DoubleKind, left: DoubleKey, right: DoubleKey) -> Tuple[Tuple[DoubleKey, CyclotomicScalar], ...]:
    (alpha_index, g), (beta_index, h) = left, right
    if alpha_index == EPSILON:
        # eps(h_(1) k T(h_(3))) collapses the triple coproduct back to h
        hit = monomial_product(params, g, h)
        return () if hit is None else (((beta_index, hit[1]), params.q(hit[0])),)
    acc: Dict[DoubleKey, CyclotomicScalar] = {}
    for (h1, h2, h3), c in _triple_coproduct(params, h):
        outer = monomial_product(params, g, h2)
        if outer is None:
            continue
        for index, d in _sandwich_coordinates(params, kind, alpha_index, h1, h3):
            inner = functional_monomial_product(params, beta_index, index)
            if inner is None:
                continue
            key = (inner[1], outer[1])
            term = c * d * params.q(inner[0] + outer[0])
            acc[key] = acc[key] + term if key in acc else term
    return tuple(sorted((key, c) for key, c in acc.items() if not c.is_zero()))


def double_multiply(u: DoubleElement, v: DoubleElement) -> DoubleElement:
    _check_same(u, v)
    acc: Dict[DoubleKey, CyclotomicScalar] = {}
    for k1, c1 in u.terms.items():
        for k2, c2 in v.terms.items():
            for key, c in basis_product(u.params, u.kind, k1, k2):
                term = c1 * c2 * c
                acc[key] = acc[key] + term if key in acc else term
    return DoubleElement(u.params, u.kind, acc)


def ensure_double_size(params: GtaParameters, max_n: int) -> None:
    """Doubles are built when dim H <= max_n^3, so the double has dimension at most max_n^6."""
    if params.dimension > max_n ** 3:
        needed = next(k for k in count(max_n + 1) if k ** 3 >= params.dimension)
        raise InvalidInput(
            f"doubles of {params} have dimension {params.dimension ** 2}, above {max_n ** 6}; "
            f"raise --max-n to at least {needed}"
        )


def check_unit(params: GtaParameters, kind: DoubleKind) -> PropertyCheck:
    one = DoubleElement.unit(params, kind)

    def witness_of(key: DoubleKey) -> Optional[str]:
        v = DoubleElement.basis_element(params, kind, key)
        if one * v != v or v * one != v:
            return f"unit fails on {key[0]}(x){key[1]}"
        return None

    return check_all(f"{kind.value}_unit", double_basis(params), witness_of)


def check_associativity(params: GtaParameters, kind: DoubleKind, triples: int = 200, seed: int = 0) -> PropertyCheck:
    basis = double_basis(params)
    rng = random.Random(seed)
    cases = [tuple(rng.choice(basis) for _ in range(3)) for _ in range(triples)]

    def witness_of(case: Sequence[DoubleKey]) -> Optional[str]:
        u, v, w = (DoubleElement.basis_element(params, kind, key) for key in case)
        if (u * v) * w != u * (v * w):
            return "associativity fails on " + ", ".join(f"{index}(x){m}" for index, m in case)
        return None

    return check_all(f"{kind.value}_associativity", cases, witness_of)


@lru_cache(maxsize=1 << 16)
def _triangular_image(params: GtaParameters, key: DoubleKey, l_power: int, character_exponent: int) -> Tuple[Tuple[DoubleKey, CyclotomicScalar], ...]:
    """alpha_(2)(g^l_power) chi(g_(2)) alpha_(1) (x) g_(1) with chi = xi^character_exponent."""
    index, g = key
    alpha = functional_monomial(params, *index)
    # k -> alpha(k g^l_power) keeps the slice of alpha
    translated = slice_coordinates(
        params, index.s, index.t, lambda l: alpha.value(Monomial(index.s, index.t, (l + l_power) % params.order))
    )
    chi = xi_power(params, character_exponent)
    acc: Dict[DoubleKey, CyclotomicScalar] = {}
    for (g1, g2), c in monomial_coproduct(params, g):
        weight = chi.value(g2) * c
        if weight.is_zero():
            continue
        for target, d in translated.items():
            image = (target, g1)
            term = weight * d
            acc[image] = acc[image] + term if image in acc else term
    return tuple(sorted((image, c) for image, c in acc.items() if not c.is_zero()))


def triangular_map(u: DoubleElement, target: DoubleKind, l_power: int, character_exponent: int) -> DoubleElement:
    acc: Dict[DoubleKey, CyclotomicScalar] = {}
    for k, c in u.terms.items():
        for key, d in _triangular_image(u.params, k, l_power, character_exponent):
            term = c * d
            acc[key] = acc[key] + term if key in acc else term
    return DoubleElement(u.params, target, acc)


def pii_map(u: DoubleElement, c: int, d: int) -> DoubleElement:
    """f: A(H) -> D(H) for (l, beta) = (g^d, xi^-c)."""
    return triangular_map(u, DoubleKind.DRINFELD, d, c)


def pii_map_inverse(u: DoubleElement, c: int, d: int) -> DoubleElement:
    """f^-1: D(H) -> A(H)."""
    return triangular_map(u, DoubleKind.ANTI_DRINFELD, -d, -c)


def generating_keys(params: GtaParameters) -> List[DoubleKey]:
    """eps (x) g, eps (x) x, eps (x) y and xi, psi, phi (x) 1, as far as they exist."""
    keys = [(EPSILON, Monomial(0, 0, 1)), (FunctionalIndex(1, 0, 0), ONE)]
    if params.nx > 1:
        keys += [(EPSILON, Monomial(1, 0, 0)), (FunctionalIndex(0, 1, 0), ONE)]
    if params.ny > 1:
        keys += [(EPSILON, Monomial(0, 1, 0)), (FunctionalIndex(0, 0, 1), ONE)]
    return keys


def check_multiplicative(params: GtaParameters, c: int, d: int, pairs: Sequence[Tuple[DoubleKey, DoubleKey]], name: str = "multiplicative") -> PropertyCheck:
    def witness_of(pair: Tuple[DoubleKey, DoubleKey]) -> Optional[str]:
        u, v = (DoubleElement.basis_element(params, DoubleKind.ANTI_DRINFELD, key) for key in pair)
        if pii_map(u * v, c, d) != pii_map(u, c, d) * pii_map(v, c, d):
            return "f(uv) != f(u)f(v) for " + " and ".join(f"{index}(x){m}" for index, m in pair)
        return None

    return check_all(name, pairs, witness_of)


@dataclass
class IsomorphismReport:
    params: GtaParameters
    c: int
    d: int
    checks: List[PropertyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def pii_isomorphism_check(params: GtaParameters, c: int, d: int) -> IsomorphismReport:
    """f is a unital, multiplicative bijection A(H) -> D(H).

    Bijectivity is checked on every basis element. Multiplicativity is checked
    on (generator, basis element) pairs: every basis element is a product of
    generators, so f(s w) = f(s) f(w) for all of them extends to all products.
    """
    report = IsomorphismReport(params, c, d)
    basis = double_basis(params)

    unit_image = pii_map(DoubleElement.unit(params, DoubleKind.ANTI_DRINFELD), c, d)
    unit_ok = unit_image == DoubleElement.unit(params, DoubleKind.DRINFELD)
    report.checks.append(PropertyCheck("unit_preserved", unit_ok, 1, None if unit_ok else str(unit_image)))

    def left_inverse(key: DoubleKey) -> Optional[str]:
        u = DoubleElement.basis_element(params, DoubleKind.ANTI_DRINFELD, key)
        if pii_map_inverse(pii_map(u, c, d), c, d) != u:
            return f"f^-1(f(u)) != u for {key[0]}(x){key[1]}"
        return None

    def right_inverse(key: DoubleKey) -> Optional[str]:
        u = DoubleElement.basis_element(params, DoubleKind.DRINFELD, key)
        if pii_map(pii_map_inverse(u, c, d), c, d) != u:
            return f"f(f^-1(u)) != u for {key[0]}(x){key[1]}"
        return None

    report.checks.append(check_all("inverse_after_map", basis, left_inverse))
    report.checks.append(check_all("map_after_inverse", basis, right_inverse))
    report.checks.append(check_multiplicative(params, c, d, [(s, w) for s in generating_keys(params) for w in basis]))
    for check in report.checks:
        if not check.passed:
            logger.error(f"isomorphism check {check.name} failed for (c, d) = ({c}, {d}) on {params}: {check.witness}")
    return report


def triangular_isomorphism_search(params: GtaParameters, confirm: bool = False) -> List[Tuple[int, int]]:
    """Candidates (c, d) whose triangular map is multiplicative on pairs of generators.

    With `confirm`, survivors must also pass the full isomorphism check.
    """
    keys = generating_keys(params)
    pairs = [(u, v) for u in keys for v in keys]
    survivors = []
    for c in range(params.order):
        for d in range(params.order):
            if check_multiplicative(params, c, d, pairs, name="generator_multiplicative").passed:
                survivors.append((c, d))
    if confirm:
        survivors = [(c, d) for c, d in survivors if pii_isomorphism_check(params, c, d).passed]
    logger.info(f"triangular search on {params}: {len(survivors)} multiplicative candidates")
    return survivors
