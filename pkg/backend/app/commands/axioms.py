from typing import Optional

from ..models.reports import Report, params_echo
from ..services.algebra.axioms import run_axiom_suite
from ..services.algebra.checks import check_all
from ..services.algebra.gta_core import AlgebraElement, Monomial, counit, multiply, validate_parameters
from ..services.algebra.structure import averaged_monomial, verify_radford_s4


def run_axioms(
    order: int, a1: int, a2: int, b1: int, b2: int,
    scope: str = "exhaustive", seed: int = 0, sample_size: int = 100, radford: bool = True,
) -> Report:
    """Hopf axioms, the left integral and (optionally) Radford's S^4 formula, one verdict each."""
    params = validate_parameters(order, a1, a2, b1, b2)
    report = Report(command="axioms", params=params_echo(params))
    report.verdicts["scope"] = scope
    report.verdicts["seed"] = seed

    for check in run_axiom_suite(params, scope=scope, seed=seed, sample_size=sample_size):
        report.record_check(check.name, check)

    integral = averaged_monomial(params, params.nx - 1, params.ny - 1)

    def absorbs(m: Monomial) -> Optional[str]:
        h = AlgebraElement.from_monomial(params, m)
        if multiply(h, integral) != integral.scale(counit(h)):
            return f"{m} * Lambda != eps({m}) Lambda"
        return None

    report.record_check("left_integral", check_all("left_integral", params.basis, absorbs))
    if radford:
        report.record_check("radford_s4", verify_radford_s4(params))
    return report
