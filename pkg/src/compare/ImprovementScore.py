##
# @file ImprovementScore.py
#
# @brief Probability that a candidate algorithm improves on a baseline, with its CI.
##

# Internal imports
from src.Errors import InvariantViolation
from src.model.ConfidenceInterval import ConfidenceInterval

# External imports
from dataclasses import dataclass
import json


@dataclass(frozen=True)
class ImprovementScore:
    candidate: str
    baseline: str
    probability: float
    ci: ConfidenceInterval

    def __post_init__(self) -> None:
        object.__setattr__(self, "probability", float(self.probability))
        if not 0.0 <= self.probability <= 1.0:
            raise InvariantViolation("probability", f"probability {self.probability} outside [0, 1]")

    def to_dict(self) -> dict:
        return {
            "candidate": self.candidate,
            "baseline": self.baseline,
            "probability": self.probability,
            "ci": {"lower": self.ci.lower, "upper": self.ci.upper,
                   "level": self.ci.level, "method": self.ci.method.value},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"
