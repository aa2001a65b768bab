##
# @file AbsoluteRecord.py
#
# @brief Episodes played by the best joint policy of a run (absolute metric).
#
# @section libraries_AbsoluteRecord Libraries/Modules
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
class AbsoluteRecord:
    """!
    Episodes played by the best joint policy found during training.
    The protocol expects 10 x E episodes per metric.
    """

    metrics: Mapping[str, tuple]

    def __post_init__(self) -> None:
        object.__setattr__(self, "metrics", freeze_episode_metrics(self.metrics, equal_length=False))
        if "return" not in self.metrics:
            raise InvariantViolation("metrics.return", "the absolute block must contain the \"return\" metric")
