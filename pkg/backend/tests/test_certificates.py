import pytest
from conftest import valid_tuples

from backend.app.services.algebra.gta_core import Monomial
from backend.app.services.pii.certificates import modular_by_evaluation, verification_order, verify_certificate
from backend.app.services.pii.oracle import PiiCertificate, oracle_pairs, satisfies_equations


def test_oracle_certificates_verify_on_the_full_basis(order_6):
    for cert in oracle_pairs(order_6):
        check = verify_certificate(order_6, cert)
        assert check.passed, check.witness
        assert check.checked == order_6.dimension
        assert modular_by_evaluation(order_6, cert) == cert.modular


def test_non_solution_is_rejected_with_a_witness(order_6):
    cert = PiiCertificate(c=1, d=1, modular=False)
    assert not satisfies_equations(order_6, 1, 1)
    check = verify_certificate(order_6, cert)
    assert not check.passed
    assert "(c, d) = (1, 1)" in check.witness


def test_every_candidate_at_n_2(sweedler_like):
    for c in range(2):
        for d in range(2):
            cert = PiiCertificate(c=c, d=d, modular=(c * d) % 2 == 0)
            assert verify_certificate(sweedler_like, cert).passed == satisfies_equations(sweedler_like, c, d)


@pytest.mark.slow
def test_certificate_soundness_up_to_12():
    for params in valid_tuples(12):
        solutions = {(cert.c, cert.d) for cert in oracle_pairs(params)}
        for cert in oracle_pairs(params):
            assert verify_certificate(params, cert).passed, (params, cert)
            assert modular_by_evaluation(params, cert) == cert.modular
        misses = [(c, d) for c in range(params.order) for d in range(params.order) if (c, d) not in solutions]
        for c, d in misses:
            assert not verify_certificate(params, PiiCertificate(c=c, d=d, modular=False)).passed, (params, c, d)


def test_verification_starts_with_x_and_y(pair_free_8):
    order = verification_order(pair_free_8)
    assert order[:2] == [Monomial(1, 0, 0), Monomial(0, 1, 0)]
    assert sorted(order) == list(pair_free_8.basis)


def test_wrong_candidate_is_rejected_on_a_generator(pair_free_8):
    check = verify_certificate(pair_free_8, PiiCertificate(c=0, d=0, modular=True))
    assert not check.passed
    assert check.checked <= 2
