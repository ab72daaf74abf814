from ..models.reports import Report
from ..services.pii.cross_validation import cross_validate


def run_scan(
    max_n: int,
    mode: str = "exhaustive",
    seed: int = 0,
    sample_size: int = 1000,
    exhaustive_max_n: int = 24,
    parallelism: int = 1,
    progress: bool = False,
    min_n: int = 2,
) -> Report:
    """Per-order classifier/oracle table; fails on any disagreement."""
    scan = cross_validate(
        max_n,
        mode=mode,
        seed=seed,
        sample_size=sample_size,
        exhaustive_max_n=exhaustive_max_n,
        parallelism=parallelism,
        strict=False,
        progress=progress,
        min_n=min_n,
    )
    report = Report(command="scan")
    report.verdicts = {
        "max_n": scan.max_n,
        "mode": scan.mode,
        "seed": scan.seed,
        "orders": [row.model_dump(mode="json") for row in scan.orders],
        "disagreements": len(scan.disagreements),
        "stated_rule_disagreements": scan.stated_rule_disagreements,
        "corollary_violations": sum(row.corollary_violations for row in scan.orders),
    }
    for counterexample in scan.disagreements:
        report.witnesses.append(f"classifier/oracle disagreement at (N, a1, a2, b1, b2) = {counterexample}")
    report.passed = not scan.disagreements and report.verdicts["corollary_violations"] == 0
    return report
