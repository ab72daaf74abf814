from ..models.reports import Report, params_echo
from ..services.algebra.dual import check_duality
from ..services.algebra.gta_core import validate_parameters
from ..services.algebra.structure import dual_distinguished_exponent, distinguished_grouplikes


def run_dual(order: int, a1: int, a2: int, b1: int, b2: int) -> Report:
    """The dual as H(b1, b2, a1, a2): relations, pairing, integral."""
    params = validate_parameters(order, a1, a2, b1, b2)
    report = Report(command="dual", params=params_echo(params))
    duality = check_duality(params)
    report.verdicts["dual_tuple"] = list(duality.dual_tuple)
    for check in duality.checks:
        report.record_check(check.name, check)

    # the dual's distinguished group-like, once from Upsilon and once transported from H
    direct = dual_distinguished_exponent(params)
    transported = distinguished_grouplikes(params).e_g
    report.verdicts["dual_distinguished_exponent"] = direct
    if direct != transported:
        report.passed = False
        report.witnesses.append(f"Upsilon gives g^{direct}, the transported computation g^{transported}")
    return report
