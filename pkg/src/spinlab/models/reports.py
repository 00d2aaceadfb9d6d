from enum import Enum
from typing import Literal

from pydantic import Field

from spinlab.models.base import SerializableModel

SCHEMA = "v1"


class CheckStatus(str, Enum):
    """Outcome of a single check."""

    PASSED = "passed"
    FAILED = "failed"


class Check(SerializableModel):
    """Single verified identity."""

    name: str
    """Identity that was checked."""

    status: CheckStatus
    """Outcome of the check."""

    subject: dict[str, str] = {}
    """Parameters the check was run with."""

    counterexample: str | None = None
    """Offending entry when the check failed."""


class Report(SerializableModel):
    """Outcome of a verification suite."""

    schema_version: Literal["v1"] = Field(SCHEMA, alias="schema")
    """Version of the document format."""

    suite: str
    """Name of the suite."""

    checks: list[Check] = []
    """All checks in a deterministic order."""

    @property
    def passed(self) -> bool:
        """Whether all checks passed."""

        return all(check.status == CheckStatus.PASSED for check in self.checks)

    @property
    def failures(self) -> list[Check]:
        """Checks that failed."""

        return [check for check in self.checks if check.status == CheckStatus.FAILED]


def check(
    name: str,
    ok: bool,
    counterexample: str | None = None,
    **subject: object,
) -> Check:
    """Build a check from its outcome."""

    return Check(
        name=name,
        status=CheckStatus.PASSED if ok else CheckStatus.FAILED,
        subject={key: str(value) for key, value in subject.items()},
        counterexample=None if ok else counterexample,
    )


def merge(suite: str, reports: list[Report]) -> Report:
    """Combine several reports into one suite."""

    return Report(suite=suite, checks=[c for r in reports for c in r.checks])


class Mode(str, Enum):
    """How identities between rational functions are tested."""

    SYMBOLIC = "symbolic"
    RANDOMIZED = "randomized"
