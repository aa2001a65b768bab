##
# @file MetricDescriptor.py
#
# @brief Describes how a metric behaves: its range and its direction.
##

# Internal imports
from src.Errors import InvariantViolation

# External imports
from dataclasses import dataclass


@dataclass(frozen=True)
class MetricDescriptor:
    """!
    Describes a metric.
    unit_interval is True for metrics that already lie in [0, 1] (win rate, completion rate),
    these are never min-max normalised.
    """

    name: str
    unit_interval: bool = False
    higher_is_better: bool = True

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not self.name:
            raise InvariantViolation("name", "metric name must be a non-empty string")
        if not isinstance(self.unit_interval, bool):
            raise InvariantViolation("unit_interval", "unit_interval must be a boolean")
        if not isinstance(self.higher_is_better, bool):
            raise InvariantViolation("higher_is_better", "higher_is_better must be a boolean")

    def orient(self, value: float) -> float:
        """!
        Map a raw value onto a higher-is-better scale.
        Lower-is-better metrics are negated, lower-is-better unit-interval metrics become 1 - x.
        @param value float
        @return float
        """
        if self.higher_is_better:
            return value
        if self.unit_interval:
            return 1.0 - value
        return -value

    def to_dict(self) -> dict:
        return {"name": self.name, "unit_interval": self.unit_interval, "higher_is_better": self.higher_is_better}


## Descriptor of the universal episode return.
RETURN_DESCRIPTOR = MetricDescriptor("return", unit_interval=False, higher_is_better=True)
