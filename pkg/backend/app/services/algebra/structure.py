"""Integrals, distinguished group-likes, unimodularity, quasitriangularity and Radford's S^4 formula."""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from ...exceptions import InternalDisagreement
from .checks import PropertyCheck, check_all
from .cyclotomic import CyclotomicScalar
from .dual import Functional, convolve, dual_generators, functional_monomial, xi_power
from .gta_core import (
    AlgebraElement,
    GtaParameters,
    Monomial,
    antipode_power,
    counit,
    generator,
    group_like,
    monomial_coproduct,
    monomial_product,
    multiply,
)

logger = logging.getLogger(__name__)


def is_left_integral(u: AlgebraElement) -> bool:
    """h u = eps(h) u for the generators h (which is enough for all h)."""
    for name in ("g", "x", "y"):
        h = generator(u.params, name)
        if multiply(h, u) != u.scale(counit(h)):
            return False
    return True


def averaged_monomial(params: GtaParameters, i: int, j: int) -> AlgebraElement:
    """(sum_m g^m) x^i y^j."""
    total = AlgebraElement.zero(params)
    for m in range(params.order):
        total = total + group_like(params, m)
    return multiply(total, AlgebraElement.monomial(params, i, j, 0))


def left_integral(params: GtaParameters) -> AlgebraElement:
    """Lambda = (sum_m g^m) x^(Nx-1) y^(Ny-1), checked before returning."""
    integral = averaged_monomial(params, params.nx - 1, params.ny - 1)
    if not is_left_integral(integral):
        raise InternalDisagreement(f"(sum g^m) x^(Nx-1) y^(Ny-1) is not a left integral of {params}", witness=str(integral))
    return integral


def _right_character_exponent(params: GtaParameters) -> int:
    """The e with Lambda h = xi^e(h) Lambda, found by acting on Lambda with the generators."""
    integral = left_integral(params)
    for name in ("x", "y"):
        if not multiply(integral, generator(params, name)).is_zero():
            raise InternalDisagreement(f"Lambda {name} is not zero in {params}")
    translated = multiply(integral, generator(params, "g"))
    for e in range(params.order):
        if translated == integral.scale(params.q(-e)):
            return e
    raise InternalDisagreement(f"Lambda g is not a multiple of Lambda in {params}", witness=str(translated))


def dual_left_integral(params: GtaParameters) -> Functional:
    """Upsilon = (sum_m xi^m) psi^(Nx-1) phi^(Ny-1), checked before returning."""
    averaged = Functional.zero(params)
    for m in range(params.order):
        averaged = averaged + functional_monomial(params, m, 0, 0)
    integral = convolve(averaged, functional_monomial(params, 0, params.nx - 1, params.ny - 1))
    for f in dual_generators(params):
        unit_value = f.value(Monomial(0, 0, 0))
        if convolve(f, integral) != integral.scale(unit_value):
            raise InternalDisagreement(f"Upsilon is not a left integral of the dual of {params}")
    return integral


def dual_distinguished_exponent(params: GtaParameters) -> int:
    """The e with Upsilon f = f(g^e) Upsilon, computed inside the dual directly."""
    integral = dual_left_integral(params)
    xi, psi, phi = dual_generators(params)
    for f in (psi, phi):
        if not convolve(integral, f).is_zero():
            raise InternalDisagreement(f"Upsilon does not annihilate psi, phi on the right in {params}")
    translated = convolve(integral, xi)
    for e in range(params.order):
        if translated == integral.scale(xi.value(Monomial(0, 0, e))):
            return e
    raise InternalDisagreement(f"Upsilon xi is not a multiple of Upsilon in {params}")


@dataclass(frozen=True)
class GrouplikeExponents:
    """alpha = xi^e_xi is the distinguished group-like of H, g^e_g the one of the dual.

    `closed_*` hold -(b1 + b2) and -(a1 + a2); they coincide with the computed
    exponents exactly when b1 Nx + b2 Ny (resp. a1 Nx + a2 Ny) vanishes mod N.
    """

    e_xi: int
    e_g: int
    closed_e_xi: int
    closed_e_g: int

    @property
    def closed_form_agrees(self) -> bool:
        return (self.e_xi, self.e_g) == (self.closed_e_xi, self.closed_e_g)


def distinguished_grouplikes(params: GtaParameters) -> GrouplikeExponents:
    # the dual's exponent is the H-side computation on the dual parameters
    exponents = GrouplikeExponents(
        e_xi=_right_character_exponent(params),
        e_g=_right_character_exponent(params.dual()),
        closed_e_xi=(-(params.b1 + params.b2)) % params.order,
        closed_e_g=(-(params.a1 + params.a2)) % params.order,
    )
    if not exponents.closed_form_agrees:
        logger.warning(
            f"{params}: computed distinguished exponents ({exponents.e_xi}, {exponents.e_g}) "
            f"differ from -(b1+b2), -(a1+a2) = ({exponents.closed_e_xi}, {exponents.closed_e_g})"
        )
    return exponents


def is_quasitriangular(params: GtaParameters) -> bool:
    half = params.order // 2
    return (
        params.order % 2 == 0
        and params.nx == 2
        and params.ny == 2
        and params.a1 == half
        and params.a2 == half
    )


def twisted_conjugation(params: GtaParameters, m: Monomial, character_exponent: int, group_power: int) -> AlgebraElement:
    """chi(h_(3)) chi^-1(h_(1)) g^-p h_(2) g^p for h = m, chi = xi^character_exponent and p = group_power.

    chi vanishes off the group-likes, so only the terms of Delta(m) with a
    group-like first leg, split again on the second leg, can contribute.
    """
    chi = xi_power(params, character_exponent)
    chi_inverse = xi_power(params, -character_exponent)
    before = Monomial(0, 0, (-group_power) % params.order)
    after = Monomial(0, 0, group_power % params.order)
    acc: Dict[Monomial, CyclotomicScalar] = {}
    for (h1, rest), c in monomial_coproduct(params, m):
        outer = chi_inverse.value(h1)
        if outer.is_zero():
            continue
        for (h2, h3), d in monomial_coproduct(params, rest):
            inner = chi.value(h3)
            if inner.is_zero():
                continue
            e1, conjugated = monomial_product(params, before, h2)
            e2, conjugated = monomial_product(params, conjugated, after)
            term = c * d * outer * inner * params.q(e1 + e2)
            acc[conjugated] = acc[conjugated] + term if conjugated in acc else term
    return AlgebraElement(params, acc)


def radford_image(params: GtaParameters, m: Monomial, exponents: GrouplikeExponents) -> AlgebraElement:
    """alpha(h_(3)) alpha^-1(h_(1)) g_d^-1 h_(2) g_d for h = m."""
    return twisted_conjugation(params, m, exponents.e_xi, exponents.e_g)


def verify_radford_s4(params: GtaParameters, exponents: Optional[GrouplikeExponents] = None) -> PropertyCheck:
    """S^4 against the distinguished group-likes on every basis monomial."""
    if exponents is None:
        exponents = distinguished_grouplikes(params)

    def witness_of(m: Monomial) -> Optional[str]:
        lhs = antipode_power(AlgebraElement.from_monomial(params, m), 4)
        rhs = radford_image(params, m, exponents)
        if lhs != rhs:
            return f"S^4({m}) = {lhs} but Radford's formula gives {rhs}"
        return None

    return check_all("radford_s4", params.basis, witness_of)


@dataclass
class StructureReport:
    params: GtaParameters
    integral: AlgebraElement
    exponents: GrouplikeExponents
    quasitriangular: bool
    radford: Optional[PropertyCheck] = None
    integral_dual: Optional[Functional] = None

    @property
    def unimodular(self) -> bool:
        return self.exponents.e_xi == 0

    @property
    def dual_unimodular(self) -> bool:
        return self.exponents.e_g == 0

    def exponent_pair(self) -> Tuple[int, int]:
        return self.exponents.e_xi, self.exponents.e_g


def structure_report(params: GtaParameters, with_radford: bool = False, with_dual_integral: bool = False) -> StructureReport:
    exponents = distinguished_grouplikes(params)
    report = StructureReport(
        params=params,
        integral=left_integral(params),
        exponents=exponents,
        quasitriangular=is_quasitriangular(params),
    )
    if with_radford:
        report.radford = verify_radford_s4(params, exponents)
    if with_dual_integral:
        report.integral_dual = dual_left_integral(params)
        direct = dual_distinguished_exponent(params)
        if direct != exponents.e_g:
            raise InternalDisagreement(
                f"dual distinguished exponent {direct} from Upsilon differs from transported {exponents.e_g}",
                witness=params.as_tuple(),
            )
    logger.info(f"structure of {params}: exponents {report.exponent_pair()}, quasitriangular={report.quasitriangular}")
    return report
