##
# @file ProfileCurve.py
#
# @brief Sampled curve with pointwise estimates and confidence bands:
# performance profiles, sample-efficiency curves and per-task interval series.
##

# Internal imports
from src.Errors import InvariantViolation
from src.model.ConfidenceInterval import ConfidenceInterval
from src.model.Datatypes import CurveKind

# External imports
from dataclasses import dataclass
import math


@dataclass(frozen=True)
class ProfileCurve:
    """!
    xs are tau values (profiles) or step counts; points[i] = (estimate, ConfidenceInterval) at xs[i].
    """

    kind: CurveKind
    label: str
    xs: tuple
    points: tuple

    def __post_init__(self) -> None:
        kind = CurveKind(self.kind)
        xs = tuple(float(x) for x in self.xs)
        points = tuple((float(estimate), ci) for estimate, ci in self.points)

        if len(points) != len(xs):
            raise InvariantViolation("points", f"{len(points)} points for {len(xs)} grid values")
        for i, x in enumerate(xs):
            if not math.isfinite(x):
                raise InvariantViolation(f"xs[{i}]", "grid values must be finite")
            if i > 0 and x <= xs[i - 1]:
                raise InvariantViolation(f"xs[{i}]", "grid values must be strictly increasing")
        for i, (estimate, ci) in enumerate(points):
            if not isinstance(ci, ConfidenceInterval):
                raise InvariantViolation(f"points[{i}]", "expected a ConfidenceInterval")
            if not math.isfinite(estimate):
                raise InvariantViolation(f"points[{i}]", "estimates must be finite")

        if kind is CurveKind.PERFORMANCE_PROFILE:
            for i, (estimate, _) in enumerate(points):
                if not 0.0 <= estimate <= 1.0:
                    raise InvariantViolation(f"points[{i}]", "profile estimates must lie in [0, 1]")
                if i > 0 and estimate > points[i - 1][0]:
                    raise InvariantViolation(f"points[{i}]", "profile estimates must be non-increasing")

        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "xs", xs)
        object.__setattr__(self, "points", points)

    @property
    def estimates(self) -> list:
        return [estimate for estimate, _ in self.points]

    def __len__(self) -> int:
        return len(self.xs)
