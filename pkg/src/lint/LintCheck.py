##
# @file LintCheck.py
#
# @brief Protocol checks, their registry and the lint report.
#
# Registered checks and their worst outcome:
# - multiple_environments   warn
# - multiple_tasks          warn
# - runs_count              fail
# - eval_episode_count      warn
# - eval_interval           warn
# - training_duration       fail (warn when the policy class is unknown)
# - absolute_present        fail
# - absolute_episode_count  warn
# - return_metric_present   fail
# - confidence_level        warn
##

# Internal imports
from src.Errors import InvariantViolation
from src.model.Datatypes import LintStatus

# External imports
from dataclasses import dataclass
import json

## Check id -> description, in report order.
CHECK_REGISTRY = {
    "multiple_environments": "Evaluate on multiple environments",
    "multiple_tasks": "Evaluate on multiple tasks per environment",
    "runs_count": "Use at least R independent training runs per task",
    "eval_episode_count": "Use E independent evaluation episodes per interval",
    "eval_interval": "Evaluate at a fixed timestep interval",
    "training_duration": "Train for the protocol budget (on-policy 10x longer)",
    "absolute_present": "Report the absolute metric for every run",
    "absolute_episode_count": "Compute the absolute metric over 10 x E episodes",
    "return_metric_present": "Always report the episode return",
    "confidence_level": "Use 95% confidence intervals as a measure of spread",
}


@dataclass(frozen=True)
class LintCheck:
    id: str
    description: str
    status: LintStatus
    finding: str = ""

    def __post_init__(self) -> None:
        if self.id not in CHECK_REGISTRY:
            raise InvariantViolation("id", f"'{self.id}' is not a registered check")
        object.__setattr__(self, "status", LintStatus(self.status))

    def to_dict(self) -> dict:
        return {"id": self.id, "description": self.description, "status": self.status.value, "finding": self.finding}


@dataclass(frozen=True)
class LintReport:
    """!
    Ordered checks of one lint run. Check ids are unique.
    """

    checks: tuple

    def __post_init__(self) -> None:
        checks = tuple(self.checks)
        ids = [check.id for check in checks]
        if len(set(ids)) != len(ids):
            raise InvariantViolation("checks", "check ids must be unique within a report")
        object.__setattr__(self, "checks", checks)

    @property
    def summary(self) -> dict:
        """!
        Number of checks per status.
        @return dict status value -> count
        """
        counts = {status.value: 0 for status in LintStatus}
        for check in self.checks:
            counts[check.status.value] += 1
        return counts

    @property
    def failed(self) -> bool:
        return self.summary[LintStatus.FAIL.value] > 0

    def check(self, check_id: str) -> LintCheck:
        for check in self.checks:
            if check.id == check_id:
                return check
        raise KeyError(check_id)

    def statuses(self) -> dict:
        return {check.id: check.status for check in self.checks}

    def to_dict(self) -> dict:
        return {"checks": [check.to_dict() for check in self.checks], "summary": self.summary}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        """!
        Plain text table, one line per check followed by the summary.
        @return str
        """
        width = max([len(check.id) for check in self.checks] + [5])
        lines = [f"{'check'.ljust(width)}  status          finding"]
        for check in self.checks:
            lines.append(f"{check.id.ljust(width)}  {check.status.value.ljust(14)}  {check.finding}".rstrip())
        summary = self.summary
        lines.append("")
        lines.append(f"pass {summary['pass']}, warn {summary['warn']}, fail {summary['fail']}, "
                     f"not applicable {summary['not_applicable']}")
        return "\n".join(lines) + "\n"
