##
# @file RunRecord.py
#
# @brief All evaluations of one independent training run.
#
# @section libraries_RunRecord Libraries/Modules
# - IntervalRecord, AbsoluteRecord
##

# Internal imports
from src.Errors import InvariantViolation
from src.model.components.IntervalRecord import IntervalRecord
from src.model.components.AbsoluteRecord import AbsoluteRecord

# External imports
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class RunRecord:
    """!
    All evaluations of one independent training run: the ordered interval
    evaluations and, optionally, the absolute-metric block.
    """

    intervals: tuple
    absolute: Optional[AbsoluteRecord] = None

    def __post_init__(self) -> None:
        intervals = tuple(self.intervals)
        if len(intervals) == 0:
            raise InvariantViolation("intervals", "a run needs at least one evaluation interval")

        previous = None
        for i, interval in enumerate(intervals):
            if not isinstance(interval, IntervalRecord):
                raise InvariantViolation(f"intervals[{i}]", "expected an IntervalRecord")
            if "return" not in interval.metrics:
                raise InvariantViolation(f"intervals[{i}].metrics.return", "every interval must carry the \"return\" metric")
            if previous is not None and interval.step_count <= previous:
                raise InvariantViolation(f"intervals[{i}].step_count",
                                         f"intervals must be strictly increasing in step_count ({interval.step_count} after {previous})")
            previous = interval.step_count

        if self.absolute is not None and not isinstance(self.absolute, AbsoluteRecord):
            raise InvariantViolation("absolute", "expected an AbsoluteRecord")

        object.__setattr__(self, "intervals", intervals)

    @property
    def step_grid(self) -> tuple:
        """!
        Ordered step counts of all intervals.
        @return tuple[int, ...]
        """
        return tuple(interval.step_count for interval in self.intervals)

    @property
    def final_step(self) -> int:
        return self.intervals[-1].step_count
