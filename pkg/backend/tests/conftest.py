import pytest

from backend.app.services.algebra.gta_core import GtaParameters, validate_parameters
from backend.app.services.pii.cross_validation import enumerate_valid_tuples


@pytest.fixture
def sweedler_like() -> GtaParameters:
    """N = 2, every parameter 1: the smallest algebra, dimension 8."""
    return validate_parameters(2, 1, 1, 1, 1)


@pytest.fixture
def pair_free_8() -> GtaParameters:
    """(1, 2, 1, -2) at N = 8; it has no pair in involution."""
    return validate_parameters(8, 1, 2, 1, -2)


@pytest.fixture
def order_6() -> GtaParameters:
    return validate_parameters(6, 1, 1, 1, 5)


def valid_tuples(max_n: int, min_n: int = 2):
    """Every validated GtaParameters with min_n <= N <= max_n."""
    for order in range(min_n, max_n + 1):
        for row in enumerate_valid_tuples(order):
            yield validate_parameters(order, *(int(v) for v in row))
