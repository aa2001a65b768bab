##
# @file Statistics.py
#
# @brief Point statistics over pooled scores: IQM, mean, median and optimality gap.
# Every statistic has a scalar form and a row-wise form used on bootstrap replicates.
#
# @section libraries_Statistics Libraries/Modules
# - numpy (https://numpy.org)
# - scipy (https://scipy.org)
#   - stats.trim_mean, which trims floor(n/4) values from each tail at proportion 0.25.
##

# Internal imports
from src.Errors import EmptyInput
from src.model.Datatypes import Statistic
from src.model.EvalMatrix import EvalMatrix

# External imports
from scipy import stats
import numpy as np

## Fraction trimmed from each tail by the interquartile mean.
IQM_TRIM: float = 0.25


def _as_scores(scores) -> np.ndarray:
    values = np.asarray(scores, dtype=np.float64).ravel()
    if values.size == 0:
        raise EmptyInput("scores", "at least one score is required")
    return values


def iqm(scores) -> float:
    """!
    Interquartile mean: sort, drop floor(n/4) scores from each tail, average the rest.
    @param scores Sequence[float]
    @return float
    """
    return float(stats.trim_mean(_as_scores(scores), IQM_TRIM))


def optimality_gap(scores, gamma: float = 1.0) -> float:
    """!
    gamma minus the mean of the scores clipped at gamma. Zero iff every score reaches gamma.
    @param scores Sequence[float]
    @param gamma float Threshold.
    @return float >= 0
    """
    return float(optimality_gap_rows(_as_scores(scores)[np.newaxis, :], gamma)[0])


def optimality_gap_rows(samples: np.ndarray, gamma: float) -> np.ndarray:
    gaps = gamma - np.minimum(samples, gamma).mean(axis=1)
    gaps = np.maximum(gaps, 0.0)
    gaps[np.all(samples >= gamma, axis=1)] = 0.0
    return gaps


def statistic_rows(samples: np.ndarray, statistic: Statistic, gamma: float = 1.0) -> np.ndarray:
    """!
    Evaluate a statistic on every row of a (replicates x scores) array.
    @param samples np.ndarray 2D
    @param statistic Statistic
    @param gamma float Optimality-gap threshold.
    @return np.ndarray One value per row.
    """
    statistic = Statistic(statistic)
    if statistic is Statistic.IQM:
        return stats.trim_mean(samples, IQM_TRIM, axis=1)
    if statistic is Statistic.MEAN:
        return samples.mean(axis=1)
    if statistic is Statistic.MEDIAN:
        return np.median(samples, axis=1)
    return optimality_gap_rows(samples, gamma)


def pooled_statistic(matrix: EvalMatrix, statistic: Statistic, gamma: float = 1.0) -> float:
    """!
    Apply a statistic to all R x M entries of a matrix pooled into one list.
    @param matrix EvalMatrix
    @param statistic Statistic
    @param gamma float Optimality-gap threshold.
    @return float
    """
    if matrix.values.size == 0:
        raise EmptyInput("values", f"evaluation matrix of '{matrix.algorithm}' is empty")
    pooled = matrix.values.ravel()
    return float(statistic_rows(pooled[np.newaxis, :], statistic, gamma)[0])
