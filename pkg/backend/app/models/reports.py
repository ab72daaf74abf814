import json
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field

from ..services.algebra.checks import PropertyCheck
from ..services.algebra.gta_core import GtaParameters

SCHEMA_VERSION = 1


class CheckVerdict(BaseModel):
    passed: bool
    checked: int
    witness: Optional[str] = None

    @classmethod
    def from_check(cls, check: PropertyCheck) -> "CheckVerdict":
        return cls(passed=check.passed, checked=check.checked, witness=check.witness)


class ParamsEcho(BaseModel):
    """The validated tuple, reduced mod N."""

    order: int
    a1: int
    a2: int
    b1: int
    b2: int

    @classmethod
    def from_params(cls, params: GtaParameters) -> "ParamsEcho":
        return cls(order=params.order, a1=params.a1, a2=params.a2, b1=params.b1, b2=params.b2)


class Report(BaseModel):
    """One per invocation; written to stdout as sorted-key JSON."""

    schema_version: int = SCHEMA_VERSION
    command: str
    passed: bool = True
    params: Optional[Dict[str, int]] = None
    verdicts: Dict[str, Any] = Field(default_factory=dict)
    witnesses: List[str] = Field(default_factory=list)
    timing: Optional[float] = None

    def record_check(self, name: str, check: PropertyCheck) -> None:
        """Store a check under `name`; a failure flips `passed` and keeps the witness."""
        self.verdicts[name] = CheckVerdict.from_check(check).model_dump()
        if not check.passed:
            self.passed = False
            self.witnesses.append(f"{name}: {check.witness}")

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=2)


def params_echo(params: GtaParameters) -> Dict[str, int]:
    return ParamsEcho.from_params(params).model_dump()


def raw_params(order: int, a1: int, a2: int, b1: int, b2: int) -> Dict[str, int]:
    return {"order": order, "a1": a1, "a2": a2, "b1": b1, "b2": b2}
