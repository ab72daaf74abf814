"""Brute-force search for pairs in involution.

With l = g^d and beta = xi^-c, the pair condition on the generators becomes

    a1 c + b1 d = a1 b1   and   a2 c + b2 d = a2 b2   (mod N),

and the pair is modular exactly when c d = 0 (mod N).
"""

import logging
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from ..algebra.gta_core import GtaParameters

logger = logging.getLogger(__name__)


class PiiCertificate(BaseModel):
    """A solution (c, d); encodes the pair (g^d, xi^-c)."""

    model_config = ConfigDict(frozen=True)

    c: int
    d: int
    modular: bool


def satisfies_equations(params: GtaParameters, c: int, d: int) -> bool:
    n = params.order
    return (
        (params.a1 * c + params.b1 * d - params.a1 * params.b1) % n == 0
        and (params.a2 * c + params.b2 * d - params.a2 * params.b2) % n == 0
    )


def solution_mask(params: GtaParameters) -> np.ndarray:
    """Boolean N x N grid, True at (c, d) solving both congruences."""
    n = params.order
    c = np.arange(n, dtype=np.int64)[:, None]
    d = np.arange(n, dtype=np.int64)[None, :]
    first = (params.a1 * c + params.b1 * d - params.a1 * params.b1) % n == 0
    second = (params.a2 * c + params.b2 * d - params.a2 * params.b2) % n == 0
    return first & second


def modular_mask(order: int) -> np.ndarray:
    c = np.arange(order, dtype=np.int64)[:, None]
    d = np.arange(order, dtype=np.int64)[None, :]
    return (c * d) % order == 0


def oracle_pairs(params: GtaParameters) -> List[PiiCertificate]:
    """All solutions in lexicographic (c, d) order."""
    cs, ds = np.nonzero(solution_mask(params))
    n = params.order
    return [PiiCertificate(c=int(c), d=int(d), modular=(int(c) * int(d)) % n == 0) for c, d in zip(cs, ds)]


def oracle_has_pair(params: GtaParameters) -> bool:
    return bool(solution_mask(params).any())


def oracle_has_modular_pair(params: GtaParameters) -> bool:
    return bool((solution_mask(params) & modular_mask(params.order)).any())


def first_modular(certificates: List[PiiCertificate]) -> Optional[PiiCertificate]:
    return next((cert for cert in certificates if cert.modular), None)


def odd_part_solution(params: GtaParameters) -> PiiCertificate:
    """c = (b1 + b2)/2, d = (a1 + a2)/2 mod N; only defined for odd N."""
    n = params.order
    if n % 2 == 0:
        raise ValueError(f"odd_part_solution needs odd N, got {n}")
    half = pow(2, -1, n)
    c = (half * (params.b1 + params.b2)) % n
    d = (half * (params.a1 + params.a2)) % n
    return PiiCertificate(c=c, d=d, modular=(c * d) % n == 0)
