"""Classifier-versus-oracle harness over whole parameter spaces."""

import logging
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from pydantic import BaseModel, Field
from tqdm import tqdm

from ...exceptions import ClassifierDisagreement, InvalidInput
from ..algebra.gta_core import validate_parameters
from ..algebra.structure import is_quasitriangular
from .classifier import classify
from .oracle import modular_mask, solution_mask

logger = logging.getLogger(__name__)

ParameterTuple = Tuple[int, int, int, int]
MODES = ("exhaustive", "sampled")
_BATCH = 4096


def _valid_mask(order: int, a1, a2, b1, b2) -> np.ndarray:
    return (
        ((a1 * b1) % order != 0)
        & ((a2 * b2) % order != 0)
        & ((a1 * b2 + a2 * b1) % order == 0)
    )


def enumerate_valid_tuples(order: int) -> np.ndarray:
    """Every valid (a1, a2, b1, b2) in [0, N)^4, lexicographically, as a (k, 4) array."""
    residues = np.arange(order, dtype=np.int64)
    a2, b1, b2 = np.meshgrid(residues, residues, residues, indexing="ij")
    blocks = []
    for a1 in range(order):
        mask = _valid_mask(order, a1, a2, b1, b2)
        count = int(mask.sum())
        if count:
            block = np.column_stack([np.full(count, a1), a2[mask], b1[mask], b2[mask]])
            blocks.append(block)
    if not blocks:
        return np.empty((0, 4), dtype=np.int64)
    return np.concatenate(blocks)


def sample_valid_tuples(order: int, size: int, seed: int) -> np.ndarray:
    """`size` valid tuples drawn uniformly (with replacement) by seeded rejection sampling."""
    rng = np.random.default_rng([seed, order])
    found: List[np.ndarray] = []
    total = 0
    while total < size:
        draws = rng.integers(0, order, size=(_BATCH, 4), dtype=np.int64)
        keep = draws[_valid_mask(order, draws[:, 0], draws[:, 1], draws[:, 2], draws[:, 3])]
        found.append(keep)
        total += len(keep)
    return np.concatenate(found)[:size]


class OrderSummary(BaseModel):
    """Aggregated counts for one order N."""

    order: int
    sampled: bool
    valid_tuples: int
    pii_free: int = 0
    modular_pair_free: int = 0
    quasitriangular: int = 0
    closed_form_unimodular: int = 0
    corollary_violations: int = 0
    stated_rule_disagreements: int = 0
    disagreements: List[ParameterTuple] = Field(default_factory=list)
    pii_free_witnesses: List[ParameterTuple] = Field(default_factory=list)
    stated_rule_witnesses: List[ParameterTuple] = Field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return not self.disagreements


class ScanReport(BaseModel):
    max_n: int
    mode: str
    seed: int
    orders: List[OrderSummary]

    @property
    def disagreements(self) -> List[Tuple[int, int, int, int, int]]:
        return sorted((row.order,) + tuple(t) for row in self.orders for t in row.disagreements)

    @property
    def stated_rule_disagreements(self) -> int:
        return sum(row.stated_rule_disagreements for row in self.orders)


def scan_order(order: int, mode: str, seed: int, sample_size: int, exhaustive_max_n: int, witness_limit: int = 5) -> OrderSummary:
    sampled = mode == "sampled" and order > exhaustive_max_n
    tuples = sample_valid_tuples(order, sample_size, seed) if sampled else enumerate_valid_tuples(order)
    modular = modular_mask(order)
    summary = OrderSummary(order=order, sampled=sampled, valid_tuples=len(tuples))
    free, stated_witnesses = set(), set()

    for row in tuples:
        key = tuple(int(v) for v in row)
        params = validate_parameters(order, *key)
        report = classify(params)
        mask = solution_mask(params)
        has_pair = bool(mask.any())

        if report.has_pair != has_pair:
            logger.error(f"classifier says {report.has_pair}, oracle says {has_pair} for N={order}, {key}")
            summary.disagreements.append(key)
        if report.stated_has_pair != has_pair:
            summary.stated_rule_disagreements += 1
            stated_witnesses.add(key)
        if not has_pair:
            summary.pii_free += 1
            free.add(key)
        if not (mask & modular).any():
            summary.modular_pair_free += 1

        quasi = is_quasitriangular(params)
        unimodular = (params.a1 + params.a2) % order == 0 or (params.b1 + params.b2) % order == 0
        summary.quasitriangular += quasi
        summary.closed_form_unimodular += unimodular
        if (quasi or unimodular or order % 2) and not has_pair:
            summary.corollary_violations += 1

    summary.disagreements = sorted(set(summary.disagreements))
    summary.pii_free_witnesses = sorted(free)[:witness_limit]
    summary.stated_rule_witnesses = sorted(stated_witnesses)[:witness_limit]
    logger.info(
        f"N={order}: {summary.valid_tuples} tuples, {summary.pii_free} without pair, "
        f"{len(summary.disagreements)} disagreements"
    )
    return summary


def cross_validate(
    max_n: int,
    mode: str = "exhaustive",
    seed: int = 0,
    sample_size: int = 1000,
    exhaustive_max_n: int = 24,
    parallelism: int = 1,
    strict: bool = True,
    progress: bool = False,
    min_n: int = 2,
) -> ScanReport:
    """Compare classify with the brute-force oracle for every order in [min_n, max_n].

    Raises:
        ClassifierDisagreement: when strict, carrying the smallest counterexample and the report.
    """
    if max_n < 2:
        raise InvalidInput(f"max_n must be at least 2, got {max_n}")
    if mode not in MODES:
        raise InvalidInput(f"mode must be one of {MODES}, got {mode!r}")
    orders = range(max(2, min_n), max_n + 1)
    if parallelism == 1:
        rows = [
            scan_order(order, mode, seed, sample_size, exhaustive_max_n)
            for order in tqdm(orders, desc="scan", disable=not progress)
        ]
    else:
        rows = Parallel(n_jobs=parallelism)(
            delayed(scan_order)(order, mode, seed, sample_size, exhaustive_max_n) for order in orders
        )
    report = ScanReport(max_n=max_n, mode=mode, seed=seed, orders=sorted(rows, key=lambda row: row.order))
    if report.stated_rule_disagreements:
        logger.warning(f"tau > min(a-powers) misjudges {report.stated_rule_disagreements} tuples up to N={max_n}")
    if strict and report.disagreements:
        raise ClassifierDisagreement(report.disagreements[0], report)
    return report


def first_disagreement(report: ScanReport) -> Optional[Tuple[int, int, int, int, int]]:
    found = report.disagreements
    return found[0] if found else None
