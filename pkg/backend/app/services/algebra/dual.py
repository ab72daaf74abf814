"""The dual Hopf algebra as functionals on the PBW basis, multiplied by convolution.

The generators are

    xi(x^i y^j g^l)  = q^-l      if i = j = 0
    psi(x^i y^j g^l) = q^(-b1 l) if (i, j) = (1, 0)
    phi(x^i y^j g^l) = q^(-b2 l) if (i, j) = (0, 1)

and zero elsewhere. The convolution monomials xi^r psi^s phi^t form a basis,
which makes the dual algebra again generalised Taft, with parameters (b1, b2, a1, a2).
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, NamedTuple, Optional, Tuple, Union

from ...exceptions import InternalDisagreement, ParameterMismatch
from .checks import PropertyCheck, check_all
from .cyclotomic import CyclotomicScalar
from .gta_core import (
    AlgebraElement,
    GtaParameters,
    Monomial,
    counit,
    generator,
    group_like,
    monomial_coproduct,
    monomial_product,
    multiply,
)

logger = logging.getLogger(__name__)


class FunctionalIndex(NamedTuple):
    """Index (r, s, t) of xi^r psi^s phi^t."""

    r: int
    s: int
    t: int

    def __str__(self) -> str:
        parts = []
        for symbol, power in (("xi", self.r), ("psi", self.s), ("phi", self.t)):
            if power == 1:
                parts.append(symbol)
            elif power > 1:
                parts.append(f"{symbol}^{power}")
        return "*".join(parts) or "eps"


class Functional:
    """A linear form on H, stored as its value on every basis monomial."""

    __slots__ = ("params", "values")

    def __init__(self, params: GtaParameters, values: Tuple[CyclotomicScalar, ...]):
        if len(values) != params.dimension:
            raise ValueError(f"value table has {len(values)} entries, expected {params.dimension}")
        self.params = params
        self.values = tuple(values)

    @classmethod
    def from_function(cls, params: GtaParameters, fn: Callable[[Monomial], CyclotomicScalar]) -> "Functional":
        return cls(params, tuple(fn(m) for m in params.basis))

    @classmethod
    def zero(cls, params: GtaParameters) -> "Functional":
        zero = CyclotomicScalar.zero(params.order)
        return cls(params, (zero,) * params.dimension)

    @classmethod
    def counit(cls, params: GtaParameters) -> "Functional":
        one = CyclotomicScalar.one(params.order)
        zero = CyclotomicScalar.zero(params.order)
        return cls.from_function(params, lambda m: one if m.i == 0 and m.j == 0 else zero)

    @classmethod
    def point_mass(cls, params: GtaParameters, target: Monomial) -> "Functional":
        one = CyclotomicScalar.one(params.order)
        zero = CyclotomicScalar.zero(params.order)
        return cls.from_function(params, lambda m: one if m == target else zero)

    def value(self, m: Monomial) -> CyclotomicScalar:
        return self.values[self.params.index(m)]

    def __call__(self, u: Union[AlgebraElement, Monomial]) -> CyclotomicScalar:
        if isinstance(u, Monomial):
            return self.value(u)
        if u.params != self.params:
            raise ParameterMismatch(f"functional on {self.params} applied to element of {u.params}")
        total = CyclotomicScalar.zero(self.params.order)
        for m, c in u.terms.items():
            total = total + c * self.value(m)
        return total

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def scale(self, factor: Union[CyclotomicScalar, int]) -> "Functional":
        return Functional(self.params, tuple(v * factor for v in self.values))

    def __add__(self, other: "Functional") -> "Functional":
        _check_same(self, other)
        return Functional(self.params, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "Functional") -> "Functional":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Functional):
            return convolve(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Functional):
            return NotImplemented
        return self.params == other.params and self.values == other.values

    def __hash__(self) -> int:
        return hash((self.params, self.values))

    def __repr__(self) -> str:
        support = [f"{m}:{v}" for m, v in zip(self.params.basis, self.values) if not v.is_zero()]
        return f"Functional({self.params}, {{{', '.join(support)}}})"


def _check_same(f: Functional, h: Functional) -> None:
    if f.params != h.params:
        raise ParameterMismatch(f"cannot combine functionals on {f.params} and {h.params}")


def convolve(f: Functional, h: Functional) -> Functional:
    """(f * h)(m) = sum f(m_(1)) h(m_(2))."""
    _check_same(f, h)
    params = f.params
    zero = CyclotomicScalar.zero(params.order)
    values = []
    for m in params.basis:
        total = zero
        for (m1, m2), c in monomial_coproduct(params, m):
            left = f.value(m1)
            if left.is_zero():
                continue
            right = h.value(m2)
            if right.is_zero():
                continue
            total = total + c * left * right
        values.append(total)
    return Functional(params, tuple(values))


def convolution_power(f: Functional, k: int) -> Functional:
    result = Functional.counit(f.params)
    for _ in range(k):
        result = convolve(result, f)
    return result


@lru_cache(maxsize=64)
def dual_generators(params: GtaParameters) -> Tuple[Functional, Functional, Functional]:
    """(xi, psi, phi)."""
    zero = CyclotomicScalar.zero(params.order)

    def xi(m: Monomial) -> CyclotomicScalar:
        return params.q(-m.l) if m.i == 0 and m.j == 0 else zero

    def psi(m: Monomial) -> CyclotomicScalar:
        return params.q(-params.b1 * m.l) if (m.i, m.j) == (1, 0) else zero

    def phi(m: Monomial) -> CyclotomicScalar:
        return params.q(-params.b2 * m.l) if (m.i, m.j) == (0, 1) else zero

    return (
        Functional.from_function(params, xi),
        Functional.from_function(params, psi),
        Functional.from_function(params, phi),
    )


@lru_cache(maxsize=1 << 10)
def _generator_power(params: GtaParameters, which: int, k: int) -> Functional:
    if k == 0:
        return Functional.counit(params)
    return convolve(_generator_power(params, which, k - 1), dual_generators(params)[which])


@lru_cache(maxsize=1 << 12)
def functional_monomial(params: GtaParameters, r: int, s: int, t: int) -> Functional:
    """xi^r * psi^s * phi^t, in that order."""
    if not (0 <= r < params.order and 0 <= s < params.nx and 0 <= t < params.ny):
        raise ValueError(
            f"functional index ({r}, {s}, {t}) outside [0,{params.order}) x [0,{params.nx}) x [0,{params.ny})"
        )
    result = _generator_power(params, 0, r)
    if s:
        result = convolve(result, _generator_power(params, 1, s))
    if t:
        result = convolve(result, _generator_power(params, 2, t))
    return result


@lru_cache(maxsize=256)
def _character(params: GtaParameters, e: int) -> Functional:
    zero = CyclotomicScalar.zero(params.order)
    return Functional.from_function(params, lambda m: params.q(-e * m.l) if m.i == 0 and m.j == 0 else zero)


def xi_power(params: GtaParameters, e: int) -> Functional:
    """The character xi^e, for any integer e: g^l -> q^(-e l), zero off the group-likes.

    Equal to the convolution power `functional_monomial(params, e mod N, 0, 0)`,
    without building the powers one convolution at a time.
    """
    return _character(params, e % params.order)


@lru_cache(maxsize=1 << 16)
def functional_monomial_product(
    params: GtaParameters, left: FunctionalIndex, right: FunctionalIndex
) -> Optional[Tuple[int, FunctionalIndex]]:
    """(xi^r psi^s phi^t) * (xi^r' psi^s' phi^t') as (q-exponent, index), None if it vanishes."""
    s = left.s + right.s
    t = left.t + right.t
    if s >= params.nx or t >= params.ny:
        return None
    # xi^r' left past phi^t and psi^s, then psi^s' past phi^t
    exponent = -(params.a1 * left.s + params.a2 * left.t) * right.r - params.b1 * params.a2 * left.t * right.s
    return exponent % params.order, FunctionalIndex((left.r + right.r) % params.order, s, t)


def functional_indices(params: GtaParameters) -> List[FunctionalIndex]:
    return [
        FunctionalIndex(r, s, t)
        for r in range(params.order)
        for s in range(params.nx)
        for t in range(params.ny)
    ]


@lru_cache(maxsize=1 << 14)
def pairing_vector(params: GtaParameters, i: int, j: int, l: int) -> AlgebraElement:
    """(sum_m q^(i m) g^m) x^j y^l, the element picking out the index (i, j, l)."""
    averaged = AlgebraElement.zero(params)
    for m in range(params.order):
        averaged = averaged + group_like(params, m).scale(params.q(i * m))
    return multiply(averaged, AlgebraElement.monomial(params, j, l, 0))


def pairing_entry(params: GtaParameters, row: FunctionalIndex, column: Tuple[int, int, int]) -> CyclotomicScalar:
    return functional_monomial(params, *row)(pairing_vector(params, *column))


@lru_cache(maxsize=64)
def pairing_diagonal(params: GtaParameters) -> Dict[FunctionalIndex, CyclotomicScalar]:
    return {index: pairing_entry(params, index, index) for index in functional_indices(params)}


def slice_coordinates(
    params: GtaParameters, s: int, t: int, value: Callable[[int], CyclotomicScalar]
) -> Dict[FunctionalIndex, CyclotomicScalar]:
    """Coordinates of a functional supported on x^s y^t g^*, given l -> its value at x^s y^t g^l.

    Every pairing vector of index (r, s, t) lives on that slice, so only the
    indices (r, s, t) can carry a coordinate.
    """
    diagonal = pairing_diagonal(params)
    values = [value(l) for l in range(params.order)]
    zero = CyclotomicScalar.zero(params.order)
    coordinates = {}
    for r in range(params.order):
        index = FunctionalIndex(r, s, t)
        paired = zero
        for m, c in pairing_vector(params, r, s, t).terms.items():
            if not values[m.l].is_zero():
                paired = paired + c * values[m.l]
        if paired.is_zero():
            continue
        try:
            coordinates[index] = paired.exact_divide(diagonal[index])
        except ArithmeticError as exc:
            raise InternalDisagreement(f"coordinate at {index} is not integral: {exc}", witness=index)
    return coordinates


def functional_coordinates(f: Functional) -> Dict[FunctionalIndex, CyclotomicScalar]:
    """Coefficients of f in the basis xi^r psi^s phi^t.

    Uses the diagonal pairing one slice at a time; division is exact in Z[q]
    and raises InternalDisagreement if a coordinate is not integral.
    """
    params = f.params
    coordinates = {}
    for s in range(params.nx):
        for t in range(params.ny):
            coordinates.update(slice_coordinates(params, s, t, lambda l: f.value(Monomial(s, t, l))))
    return coordinates


def functional_from_coordinates(params: GtaParameters, coordinates: Dict[FunctionalIndex, CyclotomicScalar]) -> Functional:
    total = Functional.zero(params)
    for index, c in coordinates.items():
        total = total + functional_monomial(params, *index).scale(c)
    return total


def first_difference(f: Functional, h: Functional) -> Optional[str]:
    for m, left, right in zip(f.params.basis, f.values, h.values):
        if left != right:
            return f"at {m}: {left} != {right}"
    return None


@dataclass
class DualityReport:
    params: GtaParameters
    dual_tuple: Tuple[int, int, int, int]
    checks: List[PropertyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _identity_check(name: str, left: Functional, right: Functional) -> PropertyCheck:
    witness = first_difference(left, right)
    return PropertyCheck(name, witness is None, 1, witness)


def _pairing_check(params: GtaParameters) -> PropertyCheck:
    indices = functional_indices(params)
    columns = [tuple(index) for index in indices]

    def witness_of(row: FunctionalIndex) -> Optional[str]:
        for column in columns:
            entry = pairing_entry(params, row, column)
            if (tuple(row) == column) == entry.is_zero():
                return f"pairing entry at ({row}, {column}) is {entry}"
        return None

    return check_all("pairing_diagonal", indices, witness_of)


def _distinct_check(params: GtaParameters) -> PropertyCheck:
    tables = {functional_monomial(params, *index).values for index in functional_indices(params)}
    witness = None
    if len(tables) != params.dimension:
        witness = f"{len(tables)} distinct functionals, expected {params.dimension}"
    return PropertyCheck("distinct_functionals", witness is None, params.dimension, witness)


def _product_rule_check(params: GtaParameters, name: str, f: Functional, rule: Callable[[Monomial, Monomial], CyclotomicScalar]) -> PropertyCheck:
    """f(u v) = rule(u, v) for generators u and basis monomials v (enough to pin f down on all products)."""
    generators = [next(iter(generator(params, g).terms)) for g in ("g", "x", "y")]
    cases = [(u, v) for u in generators for v in params.basis]
    zero = CyclotomicScalar.zero(params.order)

    def witness_of(case: Tuple[Monomial, Monomial]) -> Optional[str]:
        u, v = case
        hit = monomial_product(params, u, v)
        actual = zero if hit is None else params.q(hit[0]) * f.value(hit[1])
        expected = rule(u, v)
        if actual != expected:
            return f"{name}({u} * {v}) = {actual}, expected {expected}"
        return None

    return check_all(name, cases, witness_of)


def check_duality(params: GtaParameters) -> DualityReport:
    """Exact checks of the relations presenting the dual as H(b1, b2, a1, a2)."""
    xi, psi, phi = dual_generators(params)
    eps = Functional.counit(params)
    zero = Functional.zero(params)
    report = DualityReport(params, (params.b1, params.b2, params.a1, params.a2))
    report.checks.append(_identity_check("xi_order", convolution_power(xi, params.order), eps))
    report.checks.append(_identity_check("psi_nilpotent", convolution_power(psi, params.nx), zero))
    report.checks.append(_identity_check("phi_nilpotent", convolution_power(phi, params.ny), zero))
    report.checks.append(_identity_check("xi_psi_commutation", xi * psi, (psi * xi).scale(params.q(params.a1))))
    report.checks.append(_identity_check("xi_phi_commutation", xi * phi, (phi * xi).scale(params.q(params.a2))))
    report.checks.append(
        _identity_check("psi_phi_commutation", psi * phi, (phi * psi).scale(params.q(params.b1 * params.a2)))
    )
    report.checks.append(_distinct_check(params))
    report.checks.append(_pairing_check(params))

    xi_b1 = xi_power(params, params.b1)
    xi_b2 = xi_power(params, params.b2)

    def eps_of(m: Monomial) -> CyclotomicScalar:
        return counit(AlgebraElement.from_monomial(params, m))

    report.checks.append(_product_rule_check(params, "xi_character", xi, lambda u, v: xi.value(u) * xi.value(v)))
    report.checks.append(
        _product_rule_check(
            params, "psi_twisted_derivation", psi,
            lambda u, v: eps_of(u) * psi.value(v) + psi.value(u) * xi_b1.value(v),
        )
    )
    report.checks.append(
        _product_rule_check(
            params, "phi_twisted_derivation", phi,
            lambda u, v: eps_of(u) * phi.value(v) + phi.value(u) * xi_b2.value(v),
        )
    )
    involution_ok = params.dual().dual() == params
    report.checks.append(
        PropertyCheck("dual_involution", involution_ok, 1, None if involution_ok else f"{params.dual().dual()}")
    )
    for check in report.checks:
        if not check.passed:
            logger.error(f"duality check {check.name} failed on {params}: {check.witness}")
    return report
