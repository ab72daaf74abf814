import logging

from ..models.reports import Report, params_echo
from ..services.algebra.doubles import (
    DoubleKind,
    check_associativity,
    check_unit,
    ensure_double_size,
    pii_isomorphism_check,
    triangular_isomorphism_search,
)
from ..services.algebra.gta_core import validate_parameters
from ..services.pii.oracle import oracle_pairs

logger = logging.getLogger(__name__)


def run_double(
    order: int, a1: int, a2: int, b1: int, b2: int,
    max_n: int = 4, seed: int = 0, triples: int = 200,
) -> Report:
    """
    Both doubles and the map between them:
    1. Unit (every basis element) and associativity (seeded triples) for D(H) and A(H).
    2. With a certificate, the triangular map of the first one must be an isomorphism.
    3. Without one, no triangular candidate may be multiplicative.
    """
    params = validate_parameters(order, a1, a2, b1, b2)
    ensure_double_size(params, max_n)
    report = Report(command="double", params=params_echo(params))
    report.verdicts["dimension"] = params.dimension ** 2

    for kind in DoubleKind:
        report.record_check(f"{kind.value}_unit", check_unit(params, kind))
        report.record_check(f"{kind.value}_associativity", check_associativity(params, kind, triples=triples, seed=seed))

    certificates = oracle_pairs(params)
    report.verdicts["has_pair"] = bool(certificates)
    if certificates:
        cert = certificates[0]
        report.verdicts["certificate"] = cert.model_dump()
        isomorphism = pii_isomorphism_check(params, cert.c, cert.d)
        for check in isomorphism.checks:
            report.record_check(f"isomorphism_{check.name}", check)
        report.verdicts["isomorphism"] = isomorphism.passed
    else:
        survivors = triangular_isomorphism_search(params)
        report.verdicts["triangular_survivors"] = [list(pair) for pair in survivors]
        if survivors:
            report.passed = False
            report.witnesses.append(f"triangular maps multiplicative on generators without a pair: {survivors}")
    logger.info(f"double {params}: passed={report.passed}")
    return report
