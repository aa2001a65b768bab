##
# @file IntervalSeries.py
#
# @brief Per-task series of one algorithm over the evaluation intervals.
# At every interval the per-run means are reduced across runs with a normal CI
# (Student-t on request) or with the IQM and a single-stratum bootstrap CI.
#
# @section libraries_IntervalSeries Libraries/Modules
# - numpy (https://numpy.org)
# - scipy (https://scipy.org)
#   - stats.norm / stats.t quantiles.
##

# Internal imports
from src.Errors import InvariantViolation, UnknownMetric
from src.aggregate.StratifiedBootstrap import stratified_bootstrap_ci
from src.compare.ProfileCurve import ProfileCurve
from src.metrics.AbsoluteMetric import run_interval_mean
from src.metrics.Normalisation import TaskBounds, run_score_bounds, unit_score
from src.model.ConfidenceInterval import ConfidenceInterval
from src.model.Datatypes import CIMethod, CurveKind, Statistic
from src.model.EvalMatrix import EvalMatrix
from src.model.ExperimentLog import ExperimentLog

# External imports
from dataclasses import dataclass
from typing import Optional
from scipy import stats
import math
import numpy as np


def normal_interval(values, ci_level: float = 0.95, use_student_t: bool = False) -> tuple:
    """!
    Mean with a two-sided normal CI mean +/- z * s / sqrt(R), s the sample standard deviation.
    A single value yields a degenerate interval.
    @param values Sequence[float]
    @param ci_level float
    @param use_student_t bool Use the t quantile with R - 1 degrees of freedom instead of z.
    @return tuple (mean, ConfidenceInterval)
    """
    values = np.asarray(values, dtype=np.float64)
    mean = math.fsum(values) / values.size
    if values.size == 1:
        return mean, ConfidenceInterval.degenerate(mean, ci_level)

    q = 1.0 - (1.0 - ci_level) / 2.0
    quantile = stats.t.ppf(q, df=values.size - 1) if use_student_t else stats.norm.ppf(q)
    half_width = float(quantile * np.std(values, ddof=1) / math.sqrt(values.size))
    return mean, ConfidenceInterval(mean - half_width, mean + half_width, ci_level, CIMethod.NORMAL)


@dataclass(frozen=True)
class MetricSeries:
    """!
    points: ordered (step_count, estimate, ConfidenceInterval) triples.
    """

    algorithm: str
    env: str
    task: str
    metric: str
    points: tuple
    statistic: Statistic = Statistic.MEAN

    def __post_init__(self) -> None:
        points = tuple((int(step), float(estimate), ci) for step, estimate, ci in self.points)
        for i in range(1, len(points)):
            if points[i][0] <= points[i - 1][0]:
                raise InvariantViolation(f"points[{i}]", "step counts must be strictly increasing")
        for i, (_, estimate, ci) in enumerate(points):
            if ci.method is CIMethod.NORMAL and not ci.contains(estimate):
                raise InvariantViolation(f"points[{i}]", "a normal interval must contain its estimate")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "statistic", Statistic(self.statistic))

    @property
    def steps(self) -> list:
        return [step for step, _, _ in self.points]

    def to_curve(self) -> ProfileCurve:
        """!
        Convert the series to an interval_series curve.
        @return ProfileCurve
        """
        return ProfileCurve(CurveKind.INTERVAL_SERIES, f"{self.algorithm} {self.env}/{self.task}",
                            [float(step) for step, _, _ in self.points],
                            [(estimate, ci) for _, estimate, ci in self.points])


def per_task_interval_series(log: ExperimentLog, algorithm: str, env: str, task: str, metric: str = "return",
                             ci_level: float = 0.95, statistic: Statistic = Statistic.MEAN,
                             use_student_t: bool = False, bounds: Optional[TaskBounds] = None,
                             per_run_bounds: bool = False, replicates: int = 2000, seed: int = 42) -> MetricSeries:
    """!
    Reduce the per-run interval means of one algorithm on one task across runs.
    @param log ExperimentLog
    @param algorithm str
    @param env str
    @param task str
    @param metric str
    @param ci_level float
    @param statistic Statistic mean (normal CI) or iqm (bootstrap CI over runs).
    @param use_student_t bool Student-t quantile for the mean.
    @param bounds TaskBounds Normalise the per-run means with these bounds.
    @param per_run_bounds bool Normalise each run with its own episode min/max.
    @param replicates int Bootstrap replicates (iqm only).
    @param seed int Bootstrap seed (iqm only).
    @return MetricSeries
    """
    statistic = Statistic(statistic)
    if statistic not in (Statistic.MEAN, Statistic.IQM):
        raise InvariantViolation("statistic", "interval series support the mean and the iqm")

    runs = log.runs(env, task, algorithm)
    descriptor = log.descriptor(metric)
    run_bounds = [run_score_bounds(run, metric, descriptor, env, task) if per_run_bounds else bounds for run in runs]
    normalise = per_run_bounds or bounds is not None

    points = []
    for i, step in enumerate(log.step_grid(env, task, algorithm)):
        means = []
        for run, run_bound in zip(runs, run_bounds):
            try:
                value = descriptor.orient(run_interval_mean(run.intervals[i], metric))
            except UnknownMetric as error:
                raise error.prefixed(f"$.environments.{env}.{task}.{algorithm}.intervals[{i}]")
            means.append(unit_score(value, descriptor, run_bound) if normalise else value)

        if statistic is Statistic.MEAN:
            estimate, ci = normal_interval(means, ci_level, use_student_t)
        else:
            column = EvalMatrix(algorithm, metric, [(env, task)], np.array(means)[:, np.newaxis], normalised=False)
            estimate, ci = stratified_bootstrap_ci(column, Statistic.IQM, replicates, ci_level, seed)
        points.append((step, estimate, ci))

    return MetricSeries(algorithm, env, task, metric, tuple(points), statistic)
