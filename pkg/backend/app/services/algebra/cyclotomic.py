"""Exact arithmetic in the cyclotomic integers Z[X]/(Phi_N).

Every scalar is kept as its remainder modulo the N-th cyclotomic polynomial,
so two scalars are equal exactly when their coefficient tuples are equal.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import List, Sequence, Tuple, Union

from ...exceptions import OrderMismatch

logger = logging.getLogger(__name__)

# Coefficients, lowest degree first
Polynomial = Tuple[int, ...]


def _exact_divide(numerator: Sequence[int], divisor: Sequence[int]) -> List[int]:
    """Long division by a monic polynomial whose remainder must vanish."""
    work = list(numerator)
    deg = len(divisor) - 1
    quotient = [0] * (len(work) - deg)
    for k in range(len(work) - 1, deg - 1, -1):
        lead = work[k]
        if lead:
            quotient[k - deg] = lead
            for i, c in enumerate(divisor):
                work[k - deg + i] -= lead * c
    if any(work):
        raise ArithmeticError("polynomial division left a remainder")
    return quotient


@lru_cache(maxsize=1024)
def cyclotomic_polynomial(order: int) -> Polynomial:
    """Phi_N by dividing X^N - 1 by Phi_d for every proper divisor d of N."""
    if order < 1:
        raise ValueError(f"cyclotomic order must be at least 1, got {order}")
    numerator: List[int] = [-1] + [0] * (order - 1) + [1]
    for d in range(1, order):
        if order % d == 0:
            numerator = _exact_divide(numerator, cyclotomic_polynomial(d))
    return tuple(numerator)


def totient(order: int) -> int:
    return len(cyclotomic_polynomial(order)) - 1


def _reduce(order: int, coeffs: Sequence[int]) -> Polynomial:
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    work = list(coeffs)
    for k in range(len(work) - 1, deg - 1, -1):
        lead = work[k]
        if lead:
            base = k - deg
            for i in range(deg):
                work[base + i] -= lead * phi[i]
    if len(work) < deg:
        work.extend([0] * (deg - len(work)))
    return tuple(work[:deg])


def _check_order(a: "CyclotomicScalar", b: "CyclotomicScalar") -> None:
    if a.order != b.order:
        raise OrderMismatch(f"cannot combine scalars of order {a.order} and {b.order}")


@dataclass(frozen=True, eq=False)
class CyclotomicScalar:
    """An element of Z[q], q a primitive `order`-th root of unity, in canonical form."""

    order: int
    coeffs: Polynomial

    @classmethod
    def from_int(cls, order: int, value: int) -> "CyclotomicScalar":
        deg = totient(order)
        return cls(order, (value,) + (0,) * (deg - 1))

    @classmethod
    def zero(cls, order: int) -> "CyclotomicScalar":
        return cls.from_int(order, 0)

    @classmethod
    def one(cls, order: int) -> "CyclotomicScalar":
        return cls.from_int(order, 1)

    @classmethod
    def from_coefficients(cls, order: int, coeffs: Sequence[int]) -> "CyclotomicScalar":
        """Reduce an arbitrary polynomial in q (lowest degree first)."""
        return cls(order, _reduce(order, coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def _coerce(self, other: Union["CyclotomicScalar", int]) -> "CyclotomicScalar":
        if isinstance(other, CyclotomicScalar):
            _check_order(self, other)
            return other
        if isinstance(other, int):
            return CyclotomicScalar.from_int(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return scalar_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicScalar":
        return scalar_neg(self)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return scalar_add(self, scalar_neg(other))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return scalar_add(other, scalar_neg(self))

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicScalar(self.order, tuple(c * other for c in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return scalar_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "CyclotomicScalar":
        if exponent < 0:
            raise ValueError("negative powers are not defined in Z[q]")
        result = CyclotomicScalar.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = CyclotomicScalar.from_int(self.order, other)
        if not isinstance(other, CyclotomicScalar):
            return NotImplemented
        return scalar_equals(self, other)

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def conjugate(self, k: int) -> "CyclotomicScalar":
        """Galois automorphism q -> q^k, for k coprime to the order."""
        if gcd(k, self.order) != 1:
            raise ValueError(f"{k} is not a unit mod {self.order}")
        spread = [0] * self.order
        for i, c in enumerate(self.coeffs):
            spread[(i * k) % self.order] += c
        return CyclotomicScalar.from_coefficients(self.order, spread)

    def _other_conjugates(self) -> "CyclotomicScalar":
        return _norm_cofactor(self)[0]

    def norm(self) -> int:
        """Field norm down to Q, always a rational integer."""
        return _norm_cofactor(self)[1]

    def exact_divide(self, divisor: "CyclotomicScalar") -> "CyclotomicScalar":
        """Quotient in Z[q]; raises ArithmeticError when it does not exist."""
        _check_order(self, divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero scalar")
        cofactor, denominator = _norm_cofactor(divisor)
        numerator = self * cofactor
        if any(c % denominator for c in numerator.coeffs):
            raise ArithmeticError(f"{self} is not divisible by {divisor} in Z[q]")
        return CyclotomicScalar(self.order, tuple(c // denominator for c in numerator.coeffs))

    def to_json(self) -> List[int]:
        return list(self.coeffs)

    def __str__(self) -> str:
        parts = []
        for power, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if power == 0:
                parts.append(str(c))
                continue
            symbol = "q" if power == 1 else f"q^{power}"
            if c == 1:
                parts.append(symbol)
            elif c == -1:
                parts.append(f"-{symbol}")
            else:
                parts.append(f"{c}{symbol}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CyclotomicScalar(N={self.order}, {self})"


def scalar_add(a: CyclotomicScalar, b: CyclotomicScalar) -> CyclotomicScalar:
    _check_order(a, b)
    return CyclotomicScalar(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def scalar_neg(a: CyclotomicScalar) -> CyclotomicScalar:
    return CyclotomicScalar(a.order, tuple(-x for x in a.coeffs))


def scalar_mul(a: CyclotomicScalar, b: CyclotomicScalar) -> CyclotomicScalar:
    _check_order(a, b)
    if a.is_one():
        return b
    if b.is_one():
        return a
    deg = len(a.coeffs)
    product = [0] * (2 * deg - 1)
    for i, x in enumerate(a.coeffs):
        if x:
            for j, y in enumerate(b.coeffs):
                if y:
                    product[i + j] += x * y
    return CyclotomicScalar(a.order, _reduce(a.order, product))


def scalar_equals(a: CyclotomicScalar, b: CyclotomicScalar) -> bool:
    _check_order(a, b)
    return a.coeffs == b.coeffs


@lru_cache(maxsize=1 << 12)
def _norm_cofactor(a: CyclotomicScalar) -> Tuple[CyclotomicScalar, int]:
    """(product of the other Galois conjugates of a, norm of a)."""
    cofactor = CyclotomicScalar.one(a.order)
    for k in range(2, a.order):
        if gcd(k, a.order) == 1:
            cofactor = cofactor * a.conjugate(k)
    value = a * cofactor
    if any(value.coeffs[1:]):
        raise ArithmeticError(f"norm of {a} is not rational")
    return cofactor, value.coeffs[0]


@lru_cache(maxsize=1 << 12)
def _reduced_root_power(order: int, exponent: int) -> CyclotomicScalar:
    spread = [0] * order
    spread[exponent] = 1
    return CyclotomicScalar.from_coefficients(order, spread)


def root_power(order: int, exponent: int) -> CyclotomicScalar:
    """q^e reduced mod Phi_N."""
    if order < 1:
        raise ValueError(f"cyclotomic order must be at least 1, got {order}")
    # the cache only ever sees exponents in [0, order)
    return _reduced_root_power(order, exponent % order)


@lru_cache(maxsize=1 << 14)
def gauss_binomial(n: int, k: int, e: int, order: int) -> CyclotomicScalar:
    """[n choose k] at base t = q^e, from [n,k]_t = [n-1,k-1]_t + t^k [n-1,k]_t."""
    if n < 0 or k < 0:
        raise ValueError("gauss_binomial needs non-negative n and k")
    if k > n:
        raise ValueError(f"gauss_binomial needs k <= n, got k={k}, n={n}")
    if k == 0 or k == n:
        return CyclotomicScalar.one(order)
    return gauss_binomial(n - 1, k - 1, e, order) + root_power(order, e * k) * gauss_binomial(n - 1, k, e, order)
