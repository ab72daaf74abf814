import logging

from ..models.reports import Report, params_echo
from ..services.algebra.gta_core import validate_parameters
from ..services.algebra.structure import structure_report
from ..services.pii.certificates import modular_by_evaluation, verify_certificate
from ..services.pii.classifier import classify
from ..services.pii.oracle import first_modular, oracle_pairs

logger = logging.getLogger(__name__)


def run_check(order: int, a1: int, a2: int, b1: int, b2: int, verify_certificates: bool = False) -> Report:
    """
    Everything known about one tuple:
    1. Validates it and derives Nx, Ny.
    2. Computes integrals and the distinguished group-likes.
    3. Runs the 2-adic classifier and the brute-force oracle.
    4. Optionally re-verifies every certificate on the full basis.
    """
    params = validate_parameters(order, a1, a2, b1, b2)
    report = Report(command="check", params=params_echo(params))

    structure = structure_report(params)
    exponents = structure.exponents
    classifier = classify(params)
    certificates = oracle_pairs(params)
    first = first_modular(certificates)
    agrees = classifier.has_pair == bool(certificates)

    report.verdicts = {
        "valid": True,
        "nx": params.nx,
        "ny": params.ny,
        "dimension": params.dimension,
        "distinguished": {
            "e_xi": exponents.e_xi,
            "e_g": exponents.e_g,
            "closed_e_xi": exponents.closed_e_xi,
            "closed_e_g": exponents.closed_e_g,
            "closed_form_agrees": exponents.closed_form_agrees,
        },
        "unimodular": structure.unimodular,
        "dual_unimodular": structure.dual_unimodular,
        "quasitriangular": structure.quasitriangular,
        "classifier": classifier.model_dump(mode="json"),
        "has_pair": bool(certificates),
        "certificates": [cert.model_dump() for cert in certificates],
        "first_modular": first.model_dump() if first else None,
        "classifier_agrees": agrees,
    }
    if not agrees:
        logger.error(f"classifier says has_pair={classifier.has_pair} but the oracle found {len(certificates)} on {params}")
        report.passed = False
        report.witnesses.append(f"classifier/oracle disagreement on {params.as_tuple()}")

    if verify_certificates:
        failures = 0
        for cert in certificates:
            check = verify_certificate(params, cert)
            if not check.passed:
                failures += 1
                report.witnesses.append(check.witness)
            if modular_by_evaluation(params, cert) != cert.modular:
                failures += 1
                report.witnesses.append(f"modular flag of ({cert.c}, {cert.d}) differs from xi^-c(g^d) = 1")
        report.verdicts["certificates_verified"] = failures == 0
        report.passed = report.passed and failures == 0

    logger.info(f"check {params}: has_pair={bool(certificates)}, {len(certificates)} certificates")
    return report
