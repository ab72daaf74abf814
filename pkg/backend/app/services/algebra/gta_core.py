"""The Hopf algebra H_q(a1, a2, b1, b2) on its PBW basis x^i y^j g^l.

Relations (q a primitive N-th root of unity):

    g x = q^b1 x g,   g y = q^b2 y g,   x y = q^(a1 b2) y x,
    g^N = 1,   x^Nx = 0,   y^Ny = 0,

with Delta(g) = g (x) g, Delta(x) = 1 (x) x + x (x) g^a1, Delta(y) = 1 (x) y + y (x) g^a2
and S(g) = g^-1, S(x) = -x g^-a1, S(y) = -y g^-a2.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd
from typing import Callable, Dict, Iterator, NamedTuple, Optional, Tuple, Union

from ...exceptions import NotAParameterTuple, ParameterMismatch
from .cyclotomic import CyclotomicScalar, root_power

logger = logging.getLogger(__name__)


class Monomial(NamedTuple):
    """x^i y^j g^l."""

    i: int
    j: int
    l: int

    def __str__(self) -> str:
        parts = []
        for symbol, power in (("x", self.i), ("y", self.j), ("g", self.l)):
            if power == 1:
                parts.append(symbol)
            elif power > 1:
                parts.append(f"{symbol}^{power}")
        return "".join(parts) or "1"


UNIT_MONOMIAL = Monomial(0, 0, 0)


@dataclass(frozen=True)
class GtaParameters:
    """A validated parameter tuple; build through `validate_parameters`."""

    order: int
    a1: int
    a2: int
    b1: int
    b2: int
    nx: int
    ny: int

    def as_tuple(self) -> Tuple[int, int, int, int, int]:
        return (self.order, self.a1, self.a2, self.b1, self.b2)

    @property
    def dimension(self) -> int:
        return self.order * self.nx * self.ny

    @property
    def braiding(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        """Exponents of q_ij = q^(a_i b_j)."""
        n = self.order
        return (
            ((self.a1 * self.b1) % n, (self.a1 * self.b2) % n),
            ((self.a2 * self.b1) % n, (self.a2 * self.b2) % n),
        )

    @cached_property
    def basis(self) -> Tuple[Monomial, ...]:
        return tuple(
            Monomial(i, j, l)
            for i in range(self.nx)
            for j in range(self.ny)
            for l in range(self.order)
        )

    def index(self, m: Monomial) -> int:
        return (m.i * self.ny + m.j) * self.order + m.l

    def q(self, exponent: int) -> CyclotomicScalar:
        return root_power(self.order, exponent)

    def dual(self) -> "GtaParameters":
        """Parameters of the dual Hopf algebra: (b1, b2, a1, a2)."""
        return validate_parameters(self.order, self.b1, self.b2, self.a1, self.a2)

    def swapped(self) -> "GtaParameters":
        """The same algebra presented with x and y exchanged."""
        return validate_parameters(self.order, self.a2, self.a1, self.b2, self.b1)

    def __str__(self) -> str:
        return f"H(N={self.order}; {self.a1}, {self.a2}, {self.b1}, {self.b2})"


def validate_parameters(order: int, a1: int, a2: int, b1: int, b2: int) -> GtaParameters:
    """Check the defining congruences and derive the nilpotency orders.

    Args:
        order: N, the order of g (at least 2).
        a1, a2, b1, b2: integers, normalized into [0, N).

    Returns:
        GtaParameters with Nx = N / gcd(N, a1 b1) and Ny = N / gcd(N, a2 b2).

    Raises:
        NotAParameterTuple: naming the first violated condition.
    """
    if order < 2:
        raise NotAParameterTuple("N >= 2", f"N = {order} is too small")
    a1, a2, b1, b2 = (v % order for v in (a1, a2, b1, b2))

    if (a1 * b1) % order == 0:
        raise NotAParameterTuple("a1*b1 != 0 mod N", f"a1*b1 = {a1 * b1} is 0 mod {order}")
    if (a2 * b2) % order == 0:
        raise NotAParameterTuple("a2*b2 != 0 mod N", f"a2*b2 = {a2 * b2} is 0 mod {order}")
    mixed = a1 * b2 + a2 * b1
    if mixed % order != 0:
        raise NotAParameterTuple(
            "a1*b2 + a2*b1 == 0 mod N", f"a1*b2 + a2*b1 = {mixed} is not 0 mod {order}"
        )

    nx = order // gcd(order, (a1 * b1) % order)
    ny = order // gcd(order, (a2 * b2) % order)
    params = GtaParameters(order, a1, a2, b1, b2, nx, ny)
    logger.debug(f"validated {params}: Nx={nx}, Ny={ny}")
    return params


Scalar = Union[CyclotomicScalar, int]


def _as_scalar(params: GtaParameters, value: Scalar) -> CyclotomicScalar:
    if isinstance(value, int):
        return CyclotomicScalar.from_int(params.order, value)
    if value.order != params.order:
        raise ParameterMismatch(f"scalar of order {value.order} used in {params}")
    return value


def _accumulate(acc: Dict, key, value: CyclotomicScalar) -> None:
    if key in acc:
        acc[key] = acc[key] + value
    else:
        acc[key] = value


def _check_same(left: GtaParameters, right: GtaParameters) -> None:
    if left != right:
        raise ParameterMismatch(f"cannot combine elements of {left} and {right}")


class AlgebraElement:
    """A sparse linear combination of PBW monomials."""

    __slots__ = ("params", "terms")

    def __init__(self, params: GtaParameters, terms: Optional[Dict[Monomial, CyclotomicScalar]] = None):
        self.params = params
        self.terms: Dict[Monomial, CyclotomicScalar] = {
            m: c for m, c in (terms or {}).items() if not c.is_zero()
        }

    @classmethod
    def zero(cls, params: GtaParameters) -> "AlgebraElement":
        return cls(params)

    @classmethod
    def monomial(cls, params: GtaParameters, i: int, j: int, l: int, coeff: Scalar = 1) -> "AlgebraElement":
        if not (0 <= i < params.nx and 0 <= j < params.ny):
            raise ValueError(f"x^{i} y^{j} is outside the basis of {params}")
        return cls(params, {Monomial(i, j, l % params.order): _as_scalar(params, coeff)})

    @classmethod
    def from_monomial(cls, params: GtaParameters, m: Monomial, coeff: Scalar = 1) -> "AlgebraElement":
        return cls.monomial(params, m.i, m.j, m.l, coeff)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, m: Monomial) -> CyclotomicScalar:
        return self.terms.get(m, CyclotomicScalar.zero(self.params.order))

    def items(self) -> Iterator[Tuple[Monomial, CyclotomicScalar]]:
        return iter(sorted(self.terms.items()))

    def scale(self, factor: Scalar) -> "AlgebraElement":
        factor = _as_scalar(self.params, factor)
        return AlgebraElement(self.params, {m: c * factor for m, c in self.terms.items()})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_same(self.params, other.params)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            _accumulate(acc, m, c)
        return AlgebraElement(self.params, acc)

    def __neg__(self) -> "AlgebraElement":
        return self.scale(-1)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{m}" for m, c in self.items())

    def __repr__(self) -> str:
        return f"AlgebraElement({self.params}, {self})"


def unit(params: GtaParameters) -> AlgebraElement:
    return AlgebraElement.monomial(params, 0, 0, 0)


def generator(params: GtaParameters, name: str) -> AlgebraElement:
    positions = {"g": (0, 0, 1), "x": (1, 0, 0), "y": (0, 1, 0)}
    if name not in positions:
        raise ValueError(f"unknown generator {name!r}")
    return AlgebraElement.monomial(params, *positions[name])


def group_like(params: GtaParameters, power: int) -> AlgebraElement:
    return AlgebraElement.monomial(params, 0, 0, power)


def counit(u: AlgebraElement) -> CyclotomicScalar:
    total = CyclotomicScalar.zero(u.params.order)
    for m, c in u.terms.items():
        if m.i == 0 and m.j == 0:
            total = total + c
    return total


@lru_cache(maxsize=1 << 16)
def monomial_product(params: GtaParameters, left: Monomial, right: Monomial) -> Optional[Tuple[int, Monomial]]:
    """(x^i y^j g^l)(x^i' y^j' g^l') as (q-exponent, normal-form monomial), None if it vanishes."""
    i = left.i + right.i
    j = left.j + right.j
    if i >= params.nx or j >= params.ny:
        return None
    # g^l past x^i' y^j', then y^j past x^i'
    exponent = left.l * (params.b1 * right.i + params.b2 * right.j) - params.a1 * params.b2 * left.j * right.i
    return exponent % params.order, Monomial(i, j, (left.l + right.l) % params.order)


def multiply(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    _check_same(u.params, v.params)
    params = u.params
    acc: Dict[Monomial, CyclotomicScalar] = {}
    for m1, c1 in u.terms.items():
        for m2, c2 in v.terms.items():
            hit = monomial_product(params, m1, m2)
            if hit is None:
                continue
            exponent, m = hit
            _accumulate(acc, m, c1 * c2 * root_power(params.order, exponent))
    return AlgebraElement(params, acc)


TensorKey = Tuple[Monomial, ...]


class TensorElement:
    """A sparse element of the tensor power H^(x arity)."""

    __slots__ = ("params", "terms", "arity")

    def __init__(self, params: GtaParameters, terms: Optional[Dict[TensorKey, CyclotomicScalar]] = None, arity: int = 2):
        self.params = params
        self.arity = arity
        self.terms: Dict[TensorKey, CyclotomicScalar] = {
            k: c for k, c in (terms or {}).items() if not c.is_zero()
        }
        for key in self.terms:
            if len(key) != arity:
                raise ValueError(f"tensor key {key} does not have {arity} legs")

    @classmethod
    def unit(cls, params: GtaParameters, arity: int = 2) -> "TensorElement":
        return cls(params, {(UNIT_MONOMIAL,) * arity: CyclotomicScalar.one(params.order)}, arity)

    @classmethod
    def pure(cls, *factors: AlgebraElement) -> "TensorElement":
        """factor_1 (x) ... (x) factor_k."""
        params = factors[0].params
        terms: Dict[TensorKey, CyclotomicScalar] = {(): CyclotomicScalar.one(params.order)}
        for factor in factors:
            _check_same(params, factor.params)
            terms = {
                key + (m,): c * d for key, c in terms.items() for m, d in factor.terms.items()
            }
        return cls(params, terms, len(factors))

    def is_zero(self) -> bool:
        return not self.terms

    def scale(self, factor: Scalar) -> "TensorElement":
        factor = _as_scalar(self.params, factor)
        return TensorElement(self.params, {k: c * factor for k, c in self.terms.items()}, self.arity)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        _check_same(self.params, other.params)
        if self.arity != other.arity:
            raise ParameterMismatch("tensor elements of different arity")
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _accumulate(acc, k, c)
        return TensorElement(self.params, acc, self.arity)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_multiply(self, other)
        return self.scale(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.params == other.params and self.arity == other.arity and self.terms == other.terms

    __hash__ = None

    def to_element(self) -> AlgebraElement:
        if self.arity != 1:
            raise ValueError("only single-leg tensors are algebra elements")
        return AlgebraElement(self.params, {k[0]: c for k, c in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(
            f"({c})*" + " (x) ".join(str(m) for m in key) for key, c in sorted(self.terms.items())
        )

    def __repr__(self) -> str:
        return f"TensorElement({self.params}, {self})"


def tensor_multiply(s: TensorElement, t: TensorElement) -> TensorElement:
    _check_same(s.params, t.params)
    if s.arity != t.arity:
        raise ParameterMismatch("tensor elements of different arity")
    params = s.params
    acc: Dict[TensorKey, CyclotomicScalar] = {}
    for k1, c1 in s.terms.items():
        for k2, c2 in t.terms.items():
            exponent = 0
            legs = []
            for m1, m2 in zip(k1, k2):
                hit = monomial_product(params, m1, m2)
                if hit is None:
                    break
                exponent += hit[0]
                legs.append(hit[1])
            else:
                _accumulate(acc, tuple(legs), c1 * c2 * root_power(params.order, exponent))
    return TensorElement(params, acc, s.arity)


def _generator_coproduct(params: GtaParameters, name: str) -> TensorElement:
    one = unit(params)
    if name == "x":
        return TensorElement.pure(one, generator(params, "x")) + TensorElement.pure(
            generator(params, "x"), group_like(params, params.a1)
        )
    return TensorElement.pure(one, generator(params, "y")) + TensorElement.pure(
        generator(params, "y"), group_like(params, params.a2)
    )


@lru_cache(maxsize=1 << 14)
def monomial_coproduct(params: GtaParameters, m: Monomial) -> Tuple[Tuple[TensorKey, CyclotomicScalar], ...]:
    """Delta(x^i y^j g^l) = Delta(x)^i Delta(y)^j Delta(g)^l, as sorted (key, coefficient) pairs."""
    if m.l and (m.i or m.j):
        # Delta(x^i y^j) times g^l (x) g^l, which shares the cached word
        word = TensorElement(params, dict(monomial_coproduct(params, Monomial(m.i, m.j, 0))))
        g = group_like(params, m.l)
        return tuple(sorted(tensor_multiply(word, TensorElement.pure(g, g)).terms.items()))
    if m.i > 0:
        head, rest = "x", Monomial(m.i - 1, m.j, 0)
    elif m.j > 0:
        head, rest = "y", Monomial(0, m.j - 1, 0)
    else:
        return (((m, m), CyclotomicScalar.one(params.order)),)
    tail = TensorElement(params, dict(monomial_coproduct(params, rest)))
    product = tensor_multiply(_generator_coproduct(params, head), tail)
    return tuple(sorted(product.terms.items()))


def coproduct(u: AlgebraElement) -> TensorElement:
    acc: Dict[TensorKey, CyclotomicScalar] = {}
    for m, c in u.terms.items():
        for key, d in monomial_coproduct(u.params, m):
            _accumulate(acc, key, c * d)
    return TensorElement(u.params, acc)


def coproduct_on_leg(t: TensorElement, leg: int) -> TensorElement:
    """Apply Delta to one leg, producing a tensor with one more leg."""
    acc: Dict[TensorKey, CyclotomicScalar] = {}
    for key, c in t.terms.items():
        for (m1, m2), d in monomial_coproduct(t.params, key[leg]):
            _accumulate(acc, key[:leg] + (m1, m2) + key[leg + 1:], c * d)
    return TensorElement(t.params, acc, t.arity + 1)


def iterated_coproduct(u: AlgebraElement, arity: int = 3) -> TensorElement:
    """(Delta (x) id ... ) Delta: the Sweedler expansion h_(1) (x) ... (x) h_(arity)."""
    if arity < 1:
        raise ValueError("arity must be positive")
    result = TensorElement(u.params, {(m,): c for m, c in u.terms.items()}, 1)
    for _ in range(arity - 1):
        result = coproduct_on_leg(result, 0)
    return result


def counit_on_leg(t: TensorElement, leg: int) -> TensorElement:
    acc: Dict[TensorKey, CyclotomicScalar] = {}
    for key, c in t.terms.items():
        m = key[leg]
        if m.i == 0 and m.j == 0:
            _accumulate(acc, key[:leg] + key[leg + 1:], c)
    return TensorElement(t.params, acc, t.arity - 1)


def map_leg(t: TensorElement, leg: int, fn: Callable[[AlgebraElement], AlgebraElement]) -> TensorElement:
    """Apply a linear map H -> H to one leg."""
    acc: Dict[TensorKey, CyclotomicScalar] = {}
    for key, c in t.terms.items():
        image = fn(AlgebraElement.from_monomial(t.params, key[leg]))
        for m, d in image.terms.items():
            _accumulate(acc, key[:leg] + (m,) + key[leg + 1:], c * d)
    return TensorElement(t.params, acc, t.arity)


def multiply_legs(t: TensorElement) -> AlgebraElement:
    """The multiplication map on a tensor of any arity, left to right."""
    params = t.params
    acc: Dict[Monomial, CyclotomicScalar] = {}
    for key, c in t.terms.items():
        exponent, product = 0, key[0]
        for m in key[1:]:
            hit = monomial_product(params, product, m)
            if hit is None:
                break
            exponent += hit[0]
            product = hit[1]
        else:
            _accumulate(acc, product, c * root_power(params.order, exponent))
    return AlgebraElement(params, acc)


def _apply_monomialwise(u: AlgebraElement, images: Callable[[GtaParameters, Monomial], Tuple]) -> AlgebraElement:
    acc: Dict[Monomial, CyclotomicScalar] = {}
    for m, c in u.terms.items():
        for image, d in images(u.params, m):
            _accumulate(acc, image, c * d)
    return AlgebraElement(u.params, acc)


def _generator_antipode(params: GtaParameters, name: str, inverse: bool) -> AlgebraElement:
    twist = params.a1 if name == "x" else params.a2
    if inverse:
        # S^-1(x) = -g^-a1 x
        return -multiply(group_like(params, -twist), generator(params, name))
    return -multiply(generator(params, name), group_like(params, -twist))


def _antipode_images(inverse: bool):
    @lru_cache(maxsize=1 << 14)
    def images(params: GtaParameters, m: Monomial) -> Tuple[Tuple[Monomial, CyclotomicScalar], ...]:
        # anti-multiplicative: S(x * rest) = S(rest) S(x)
        if m.i > 0:
            head, rest = "x", Monomial(m.i - 1, m.j, m.l)
        elif m.j > 0:
            head, rest = "y", Monomial(0, m.j - 1, m.l)
        else:
            return ((Monomial(0, 0, (-m.l) % params.order), CyclotomicScalar.one(params.order)),)
        tail = AlgebraElement(params, dict(images(params, rest)))
        return tuple(sorted(multiply(tail, _generator_antipode(params, head, inverse)).terms.items()))

    return images


_antipode_monomial = _antipode_images(inverse=False)
_antipode_inverse_monomial = _antipode_images(inverse=True)


def monomial_antipode(params: GtaParameters, m: Monomial, inverse: bool = False) -> Tuple[Tuple[Monomial, CyclotomicScalar], ...]:
    """S(m) (or S^-1(m)) as sorted (monomial, coefficient) pairs; a single term on the PBW basis."""
    images = _antipode_inverse_monomial if inverse else _antipode_monomial
    return images(params, m)


def antipode(u: AlgebraElement) -> AlgebraElement:
    return _apply_monomialwise(u, _antipode_monomial)


def antipode_inverse(u: AlgebraElement) -> AlgebraElement:
    return _apply_monomialwise(u, _antipode_inverse_monomial)


def antipode_power(u: AlgebraElement, k: int) -> AlgebraElement:
    """S^k for any integer k; negative k iterates the inverse antipode."""
    step = antipode if k >= 0 else antipode_inverse
    result = u
    for _ in range(abs(k)):
        result = step(result)
    return result
