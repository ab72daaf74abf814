"""2-adic decision procedure for the existence of a pair in involution.

Write N = 2^n j with j odd. The odd part of the congruence system is always
solvable, so only the residues mod 2^n matter. Each parameter p is written as
2^power * mu mod 2^n with mu odd (or p = 0 mod 2^n, power undefined, mu = 0),
giving the coefficient matrix

    mu = [[mu(a1), mu(b1)],
          [mu(a2), mu(b2)]]

and tau, the 2-adic valuation of det(mu) mod 2^n. Presenting the algebra so
that power(a1) <= power(a2), there is no pair exactly when

    every mu entry is nonzero, power(a1) + power(b2) < n, power(a1) != power(a2),
    and (det(mu) = 0 mod 2^n or tau > min(power(a1), power(b1))).

Eliminating c from the system leaves det(mu) d = R mod 2^(n - power(b2)) with
R of valuation power(a1), and the first congruence must still be solvable for
c. That gives the bound min(power(a1), power(b1)). Comparing tau with
min(power(a1), power(a2)) instead is also reported (`stated_has_pair`). It
misjudges tuples such as N = 16, (2, 4, 1, 6).
"""

import logging
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel

from ..algebra.gta_core import GtaParameters

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    ODD_ORDER = "odd_order"
    ZERO_COEFFICIENT = "zero_coefficient"
    POWER_SUM_AT_LEAST_N = "power_sum_at_least_n"
    EQUAL_A_POWERS = "equal_a_powers"
    DETERMINANT_VANISHES = "determinant_vanishes"
    TAU_EXCEEDS_BOUND = "tau_exceeds_bound"
    TAU_WITHIN_BOUND = "tau_within_bound"


class ClassifierReport(BaseModel):
    n: int
    j: int
    a1_power: Optional[int] = None
    a2_power: Optional[int] = None
    b1_power: Optional[int] = None
    b2_power: Optional[int] = None
    mu: Tuple[Tuple[int, int], Tuple[int, int]] = ((0, 0), (0, 0))
    det_mu: int = 0
    tau: int = 0
    nu: int = 0
    swapped: bool = False
    has_pair: bool
    stated_has_pair: bool
    reason: Verdict

    @property
    def powers(self) -> Tuple[Optional[int], Optional[int], Optional[int], Optional[int]]:
        return (self.a1_power, self.a2_power, self.b1_power, self.b2_power)


def two_adic_split(order: int) -> Tuple[int, int]:
    """(n, j) with order = 2^n * j and j odd."""
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    n = (order & -order).bit_length() - 1
    return n, order >> n


def power_and_coefficient(value: int, n: int) -> Tuple[Optional[int], int]:
    """(power, mu) with value = 2^power * mu mod 2^n, mu odd; (None, 0) when value = 0 mod 2^n."""
    residue = value % (1 << n)
    if residue == 0:
        return None, 0
    power = (residue & -residue).bit_length() - 1
    return power, residue >> power


def classify(params: GtaParameters) -> ClassifierReport:
    n, j = two_adic_split(params.order)
    if n == 0:
        return ClassifierReport(n=n, j=j, has_pair=True, stated_has_pair=True, reason=Verdict.ODD_ORDER)

    a1, a2, b1, b2 = params.a1, params.a2, params.b1, params.b2
    pa1, u1 = power_and_coefficient(a1, n)
    pa2, u2 = power_and_coefficient(a2, n)
    swapped = pa1 is not None and pa2 is not None and pa1 > pa2
    if swapped:
        a1, a2, b1, b2 = a2, a1, b2, b1
        pa1, u1, pa2, u2 = pa2, u2, pa1, u1
    pb1, v1 = power_and_coefficient(b1, n)
    pb2, v2 = power_and_coefficient(b2, n)

    modulus = 1 << n
    det = (u1 * v2 - v1 * u2) % modulus
    tau, nu = power_and_coefficient(det, n)
    tau = tau or 0

    fields = dict(
        n=n, j=j, a1_power=pa1, a2_power=pa2, b1_power=pb1, b2_power=pb2,
        mu=((u1, v1), (u2, v2)), det_mu=det, tau=tau, nu=nu, swapped=swapped,
    )

    if None in (pa1, pa2, pb1, pb2):
        verdict, has_pair, stated = Verdict.ZERO_COEFFICIENT, True, True
    elif pa1 + pb2 >= n:
        verdict, has_pair, stated = Verdict.POWER_SUM_AT_LEAST_N, True, True
    elif pa1 == pa2:
        verdict, has_pair, stated = Verdict.EQUAL_A_POWERS, True, True
    elif det == 0:
        verdict, has_pair, stated = Verdict.DETERMINANT_VANISHES, False, False
    else:
        has_pair = tau <= min(pa1, pb1)
        stated = tau <= min(pa1, pa2)
        verdict = Verdict.TAU_WITHIN_BOUND if has_pair else Verdict.TAU_EXCEEDS_BOUND

    report = ClassifierReport(has_pair=has_pair, stated_has_pair=stated, reason=verdict, **fields)
    logger.debug(f"classified {params}: {verdict.value}, has_pair={has_pair}")
    return report
