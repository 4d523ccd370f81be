"""Result record shared by every identity check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class CheckReport:
    identity: str
    params: dict[str, Any]
    lhs: Any
    rhs: Any
    passed: bool
    # (label, lhs, rhs) triples for sub-checks that disagreed
    failures: list = field(default_factory=list)

    @classmethod
    def compare(cls, identity, params, lhs, rhs, extra_failures=()):
        failures = list(extra_failures)
        if lhs != rhs:
            failures.insert(0, ("lhs != rhs", lhs, rhs))
        return cls(identity, dict(params), lhs, rhs, not failures, failures)
