from itertools import product
from types import SimpleNamespace

import pytest

from backend.app.exceptions import ClassifierDisagreement
from backend.app.services.pii import cross_validation
from backend.app.services.pii.cross_validation import (
    cross_validate,
    enumerate_valid_tuples,
    first_disagreement,
    sample_valid_tuples,
    scan_order,
)


def brute_force_count(order):
    return sum(
        1
        for a1, a2, b1, b2 in product(range(order), repeat=4)
        if (a1 * b1) % order and (a2 * b2) % order and (a1 * b2 + a2 * b1) % order == 0
    )


@pytest.mark.parametrize("order", [2, 4, 6, 8])
def test_enumeration_is_complete_and_sorted(order):
    rows = [tuple(int(v) for v in row) for row in enumerate_valid_tuples(order)]
    assert len(rows) == brute_force_count(order)
    assert rows == sorted(rows)


def test_sampling_is_seeded_and_valid():
    first = sample_valid_tuples(40, 50, seed=7)
    second = sample_valid_tuples(40, 50, seed=7)
    assert first.shape == (50, 4)
    assert (first == second).all()
    for a1, a2, b1, b2 in first.tolist():
        assert (a1 * b1) % 40 and (a2 * b2) % 40 and (a1 * b2 + a2 * b1) % 40 == 0


def test_scan_up_to_8():
    report = cross_validate(8)
    rows = {row.order: row for row in report.orders}
    assert report.disagreements == []
    assert first_disagreement(report) is None
    assert rows[4].pii_free == 0
    assert all(rows[n].pii_free == 0 for n in (3, 5, 7))
    assert rows[8].pii_free >= 1
    assert (1, 2, 1, 6) in rows[8].pii_free_witnesses
    assert all(row.corollary_violations == 0 for row in report.orders)


def test_scan_is_independent_of_parallelism():
    assert cross_validate(10, parallelism=2) == cross_validate(10)


def test_sampled_mode_is_reproducible():
    first = cross_validate(30, mode="sampled", seed=1, sample_size=40, exhaustive_max_n=8, min_n=26)
    second = cross_validate(30, mode="sampled", seed=1, sample_size=40, exhaustive_max_n=8, min_n=26)
    assert first == second
    assert all(row.sampled and row.valid_tuples == 40 for row in first.orders)


def test_stated_rule_disagreement_is_counted_not_fatal():
    row = scan_order(16, "exhaustive", 0, 0, 24)
    assert row.disagreements == []
    assert row.stated_rule_disagreements >= 1
    # the first tuple in lexicographic order where the two bounds differ
    assert row.stated_rule_witnesses[0] == (2, 4, 1, 6)


def test_disagreement_raises_with_smallest_counterexample(monkeypatch):
    monkeypatch.setattr(
        cross_validation, "classify", lambda params: SimpleNamespace(has_pair=False, stated_has_pair=False)
    )
    with pytest.raises(ClassifierDisagreement) as info:
        cross_validate(4)
    assert info.value.counterexample == (2, 1, 1, 1, 1)
    report = cross_validate(4, strict=False)
    assert first_disagreement(report) == (2, 1, 1, 1, 1)


def test_bad_arguments():
    with pytest.raises(ValueError):
        cross_validate(1)
    with pytest.raises(ValueError):
        cross_validate(8, mode="random")


@pytest.mark.slow
def test_scan_up_to_24_exhaustive():
    report = cross_validate(24)
    assert report.disagreements == []
    assert all(row.pii_free == 0 for row in report.orders if row.order % 2 or row.order == 4)


@pytest.mark.slow
def test_sampled_scan_up_to_96():
    report = cross_validate(96, mode="sampled", parallelism=4)
    assert report.disagreements == []
