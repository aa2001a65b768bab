##
# @file Normalisation.py
#
# @brief Per-task min-max normalisation.
# Bounds are pooled over every algorithm on a task; which samples enter the pool is
# chosen with a Pooling mode. All values are oriented to higher-is-better first.
#
# @section libraries_Normalisation Libraries/Modules
# - warnings standard library
#   - ClampWarning and DegenerateBoundsWarning.
##

# Internal imports
from src.Errors import EmptyPool, InvariantViolation, ClampWarning, DegenerateBoundsWarning
from src.metrics.AbsoluteMetric import run_interval_mean, absolute_return
from src.model.Datatypes import Pooling
from src.model.ExperimentLog import ExperimentLog
from src.model.components.MetricDescriptor import MetricDescriptor
from src.model.components.RunRecord import RunRecord

# External imports
from dataclasses import dataclass
from typing import Optional
import math
import warnings


@dataclass(frozen=True)
class TaskBounds:
    """!
    Min and max of the pooled scores of one task and metric.
    """

    env: str
    task: str
    metric: str
    min: float
    max: float
    pooling: Pooling = Pooling.GLOBAL
    sample_count: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "min", float(self.min))
        object.__setattr__(self, "max", float(self.max))
        object.__setattr__(self, "pooling", Pooling(self.pooling))
        if not (math.isfinite(self.min) and math.isfinite(self.max)):
            raise InvariantViolation("bounds", "task bounds must be finite")
        if self.min > self.max:
            raise InvariantViolation("bounds", f"min {self.min} exceeds max {self.max}")
        if self.sample_count < 1:
            raise InvariantViolation("bounds.sample_count", "bounds need at least one sample")

    @property
    def degenerate(self) -> bool:
        return self.min == self.max


def task_score_bounds(log: ExperimentLog, env: str, task: str, metric: str = "return",
                      pooling: Pooling = Pooling.GLOBAL,
                      descriptor: Optional[MetricDescriptor] = None) -> TaskBounds:
    """!
    Pool the oriented scores of all algorithms on a task and return their min/max.
    absolute_only pools absolute returns, intervals_only pools the per-interval means,
    global pools both.
    @param log ExperimentLog
    @param env str
    @param task str
    @param metric str
    @param pooling Pooling
    @param descriptor MetricDescriptor Orientation; defaults to the log's descriptor.
    @return TaskBounds
    """
    pooling = Pooling(pooling)
    descriptor = descriptor or log.descriptor(metric)
    use_intervals = pooling in (Pooling.INTERVALS_ONLY, Pooling.GLOBAL)
    use_absolute = pooling in (Pooling.ABSOLUTE_ONLY, Pooling.GLOBAL)

    pool = []
    for runs in log.task_groups(env, task).values():
        for run in runs.values():
            if use_intervals:
                pool += [descriptor.orient(run_interval_mean(interval, metric))
                         for interval in run.intervals if metric in interval.metrics]
            if use_absolute and run.absolute is not None and metric in run.absolute.metrics:
                pool.append(descriptor.orient(absolute_return(run, metric)))

    if len(pool) == 0:
        raise EmptyPool(f"$.environments.{env}.{task}",
                        f"no '{metric}' samples to pool under {pooling.value} pooling")
    return TaskBounds(env, task, metric, min(pool), max(pool), pooling, len(pool))


def run_score_bounds(run: RunRecord, metric: str = "return",
                     descriptor: Optional[MetricDescriptor] = None,
                     env: str = "", task: str = "") -> TaskBounds:
    """!
    Min/max over every training evaluation episode of a single run, for per-run normalised interval series.
    """
    descriptor = descriptor or MetricDescriptor(metric)
    episodes = [descriptor.orient(value) for interval in run.intervals for value in interval.metrics.get(metric, ())]
    if len(episodes) == 0:
        raise EmptyPool(f"metrics.{metric}", "the run never recorded this metric")
    return TaskBounds(env, task, metric, min(episodes), max(episodes), Pooling.INTERVALS_ONLY, len(episodes))


def min_max_normalise(value: float, bounds: TaskBounds) -> float:
    """!
    (value - min) / (max - min), clamped to [0, 1].
    Out-of-bounds values raise a ClampWarning; max == min yields 0.0 and a DegenerateBoundsWarning.
    @param value float Oriented score.
    @param bounds TaskBounds
    @return float in [0, 1]
    """
    if bounds.degenerate:
        warnings.warn(f"{bounds.env}/{bounds.task}: degenerate bounds for '{bounds.metric}' "
                      f"(min = max = {bounds.min}), normalised to 0.0", DegenerateBoundsWarning, stacklevel=2)
        return 0.0

    normalised = (value - bounds.min) / (bounds.max - bounds.min)
    if normalised < 0.0 or normalised > 1.0:
        warnings.warn(f"{bounds.env}/{bounds.task}: value {value} outside [{bounds.min}, {bounds.max}], clamped",
                      ClampWarning, stacklevel=2)
        return min(max(normalised, 0.0), 1.0)
    return normalised


def unit_score(value: float, descriptor: MetricDescriptor, bounds: TaskBounds) -> float:
    """!
    Map an oriented score into [0, 1]: unit-interval metrics are only clamped,
    everything else is min-max normalised with the given bounds.
    @return float
    """
    if descriptor.unit_interval:
        if value < 0.0 or value > 1.0:
            warnings.warn(f"'{descriptor.name}' value {value} outside [0, 1], clamped", ClampWarning, stacklevel=2)
            return min(max(value, 0.0), 1.0)
        return value
    return min_max_normalise(value, bounds)
