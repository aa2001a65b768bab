##
# @file AbsoluteMetric.py
#
# @brief Per-interval means and the absolute metric of a run.
# Both are raw (un-oriented) arithmetic means over episodes.
#
# @section libraries_AbsoluteMetric Libraries/Modules
# - math standard library
#   - fsum, so the means do not depend on episode order.
##

# Internal imports
from src.Errors import UnknownMetric, MissingAbsolute
from src.model.components.IntervalRecord import IntervalRecord
from src.model.components.RunRecord import RunRecord

# External imports
import math


def episode_mean(episodes: tuple) -> float:
    return math.fsum(episodes) / len(episodes)


def run_interval_mean(record: IntervalRecord, metric: str) -> float:
    """!
    Mean of a metric over the E evaluation episodes of one interval.
    @param record IntervalRecord
    @param metric str Metric name.
    @return float
    """
    if metric not in record.metrics:
        raise UnknownMetric(f"metrics.{metric}", f"metric '{metric}' is not recorded at step {record.step_count}")
    return episode_mean(record.metrics[metric])


def absolute_return(run: RunRecord, metric: str) -> float:
    """!
    Mean of a metric over the absolute block (10 x E episodes of the best joint policy).
    @param run RunRecord
    @param metric str Metric name.
    @return float
    """
    if run.absolute is None:
        raise MissingAbsolute("absolute", "run has no absolute block")
    if metric not in run.absolute.metrics:
        raise UnknownMetric(f"absolute.metrics.{metric}", f"metric '{metric}' is not recorded in the absolute block")
    return episode_mean(run.absolute.metrics[metric])
