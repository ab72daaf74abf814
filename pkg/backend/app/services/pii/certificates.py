"""Full-algebra verification of pairs in involution.

A certificate (c, d) stands for l = g^d and beta = xi^-c. It is a pair in
involution when

    S^2(h) = beta(h_(3)) beta^-1(h_(1)) l h_(2) l^-1

for every h, and modular when beta(l) = 1.
"""

import logging
from typing import List, Optional

from ..algebra.checks import PropertyCheck, check_all
from ..algebra.dual import xi_power
from ..algebra.gta_core import (
    AlgebraElement,
    GtaParameters,
    Monomial,
    antipode_power,
)
from ..algebra.structure import twisted_conjugation
from .oracle import PiiCertificate

logger = logging.getLogger(__name__)


def conjugation_image(params: GtaParameters, m: Monomial, c: int, d: int) -> AlgebraElement:
    """beta(h_(3)) beta^-1(h_(1)) l h_(2) l^-1 for h = m."""
    return twisted_conjugation(params, m, -c, -d)


def verification_order(params: GtaParameters) -> List[Monomial]:
    """The basis with x and y first: they reject a wrong (c, d) in one step."""
    first = [m for m in (Monomial(1, 0, 0), Monomial(0, 1, 0)) if m.i < params.nx and m.j < params.ny]
    return first + [m for m in params.basis if m not in first]


def verify_certificate(params: GtaParameters, cert: PiiCertificate) -> PropertyCheck:
    """Compare the conjugation map of (g^d, xi^-c) with S^2 on every basis monomial."""

    def witness_of(m: Monomial) -> Optional[str]:
        expected = antipode_power(AlgebraElement.from_monomial(params, m), 2)
        found = conjugation_image(params, m, cert.c, cert.d)
        if found != expected:
            return f"(c, d) = ({cert.c}, {cert.d}): conjugation gives {found} on {m}, S^2 gives {expected}"
        return None

    result = check_all("pair_in_involution", verification_order(params), witness_of)
    logger.debug(f"certificate ({cert.c}, {cert.d}) on {params}: {result.passed}")
    return result


def modular_by_evaluation(params: GtaParameters, cert: PiiCertificate) -> bool:
    """beta(l) = 1, evaluated as a functional."""
    return xi_power(params, -cert.c).value(Monomial(0, 0, cert.d % params.order)).is_one()
