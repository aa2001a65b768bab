##
# @file IntervalRecord.py
#
# @brief Evaluation results of one run at one evaluation interval.
#
# @section libraries_IntervalRecord Libraries/Modules
# - EpisodeMetrics
#   - Validation of the per-episode metric lists.
##

# Internal imports
from src.Errors import InvariantViolation
from src.model.components.EpisodeMetrics import freeze_episode_metrics

# External imports
from dataclasses import dataclass
from typing import Mapping


@dataclass(frozen=True)
class IntervalRecord:
    """!
    Evaluation results of one run at one evaluation interval.
    step_count is the absolute environment timestep at which training was paused,
    metrics maps a metric name to the values of the E evaluation episodes.
    """

    step_count: int
    metrics: Mapping[str, tuple]

    def __post_init__(self) -> None:
        if isinstance(self.step_count, bool) or not isinstance(self.step_count, int):
            raise InvariantViolation("step_count", "step_count must be an integer")
        if self.step_count < 0:
            raise InvariantViolation("step_count", "step_count must be non-negative")
        object.__setattr__(self, "metrics", freeze_episode_metrics(self.metrics))

    @property
    def episode_count(self) -> int:
        """!
        Number of evaluation episodes at this interval.
        @return int
        """
        return len(next(iter(self.metrics.values())))
