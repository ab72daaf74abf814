from dataclasses import dataclass
from typing import Callable, Iterable, Optional, TypeVar

T = TypeVar("T")


@dataclass(frozen=True)
class PropertyCheck:
    """Outcome of checking one identity over a set of cases."""

    name: str
    passed: bool
    checked: int
    witness: Optional[str] = None


def check_all(name: str, cases: Iterable[T], witness_of: Callable[[T], Optional[str]]) -> PropertyCheck:
    """Run `witness_of` on every case; it returns None on success or a witness description.

    Stops at the first failure.
    """
    checked = 0
    for case in cases:
        checked += 1
        witness = witness_of(case)
        if witness is not None:
            return PropertyCheck(name, False, checked, witness)
    return PropertyCheck(name, True, checked)
