##
# @file ConfidenceInterval.py
#
# @brief Two-sided confidence interval with its level and method.
##

# Internal imports
from src.Errors import InvariantViolation
from src.model.Datatypes import CIMethod

# External imports
from dataclasses import dataclass
import math


@dataclass(frozen=True)
class ConfidenceInterval:
    """!
    Two-sided confidence interval [lower, upper] at the given level.
    """

    lower: float
    upper: float
    level: float = 0.95
    method: CIMethod = CIMethod.NORMAL

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower", float(self.lower))
        object.__setattr__(self, "upper", float(self.upper))
        object.__setattr__(self, "method", CIMethod(self.method))
        if not (math.isfinite(self.lower) and math.isfinite(self.upper)):
            raise InvariantViolation("ci", "confidence bounds must be finite")
        if self.lower > self.upper:
            raise InvariantViolation("ci", f"lower bound {self.lower} exceeds upper bound {self.upper}")
        if not 0.0 < self.level < 1.0:
            raise InvariantViolation("ci.level", "confidence level must lie in (0, 1)")

    @classmethod
    def degenerate(cls, value: float, level: float = 0.95) -> "ConfidenceInterval":
        """!
        Interval of zero width around a single value.
        @return ConfidenceInterval
        """
        return cls(value, value, level, CIMethod.DEGENERATE)

    def contains(self, value: float) -> bool:
        return self.lower <= value <= self.upper
