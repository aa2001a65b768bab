##
# @file ProbabilityOfImprovement.py
#
# @brief Probability of improvement of X over Y: per task the Mann-Whitney statistic
# U = P(x > y) + 0.5 P(x = y), averaged over tasks without weighting.
# The CI comes from a stratified bootstrap that resamples both matrices independently.
#
# @section libraries_ProbabilityOfImprovement Libraries/Modules
# - numpy (https://numpy.org)
##

# Internal imports
from src.Errors import TaskListMismatch, EmptyInput, InvariantViolation
from src.aggregate.StratifiedBootstrap import derive_stream_key, resample_column, percentile_interval
from src.compare.ImprovementScore import ImprovementScore
from src.model.EvalMatrix import EvalMatrix

# External imports
from itertools import permutations
import math
import numpy as np


def _check_pair(x: EvalMatrix, y: EvalMatrix) -> None:
    if x.tasks != y.tasks:
        raise TaskListMismatch("tasks", f"'{x.algorithm}' and '{y.algorithm}' are evaluated on different tasks")
    if x.values.size == 0 or y.values.size == 0:
        raise EmptyInput("values", "both evaluation matrices need at least one run")


def task_improvement(x_column: np.ndarray, y_column: np.ndarray) -> float:
    """!
    Mann-Whitney U of one task, ties counted one half.
    @return float in [0, 1]
    """
    greater = np.count_nonzero(x_column[:, np.newaxis] > y_column[np.newaxis, :])
    equal = np.count_nonzero(x_column[:, np.newaxis] == y_column[np.newaxis, :])
    return (greater + 0.5 * equal) / (x_column.size * y_column.size)


def _replicate_improvement(x_samples: np.ndarray, y_samples: np.ndarray) -> np.ndarray:
    greater = np.count_nonzero(x_samples[:, :, np.newaxis] > y_samples[:, np.newaxis, :], axis=(1, 2))
    equal = np.count_nonzero(x_samples[:, :, np.newaxis] == y_samples[:, np.newaxis, :], axis=(1, 2))
    return (greater + 0.5 * equal) / (x_samples.shape[1] * y_samples.shape[1])


def probability_of_improvement(x: EvalMatrix, y: EvalMatrix, replicates: int = 2000,
                               ci_level: float = 0.95, seed: int = 42) -> ImprovementScore:
    """!
    Probability that a run of x scores higher than a run of y, averaged over tasks.
    @param x EvalMatrix Candidate.
    @param y EvalMatrix Baseline.
    @param replicates int
    @param ci_level float
    @param seed int
    @return ImprovementScore
    """
    _check_pair(x, y)
    if replicates < 1:
        raise InvariantViolation("replicates", "at least one bootstrap replicate is required")
    tasks = range(len(x.tasks))
    probability = math.fsum(task_improvement(x.column(t), y.column(t)) for t in tasks) / len(x.tasks)

    replicate_values = np.zeros(replicates)
    for t in tasks:
        x_samples = resample_column(x.column(t), derive_stream_key(seed, x.algorithm, "vs", y.algorithm, t, "x"), replicates)
        y_samples = resample_column(y.column(t), derive_stream_key(seed, x.algorithm, "vs", y.algorithm, t, "y"), replicates)
        replicate_values += _replicate_improvement(x_samples, y_samples)
    replicate_values /= len(x.tasks)

    return ImprovementScore(x.algorithm, y.algorithm, probability, percentile_interval(replicate_values, ci_level))


def improvement_matrix(matrices: dict, replicates: int = 2000, ci_level: float = 0.95, seed: int = 42) -> dict:
    """!
    Probability of improvement for every ordered pair of algorithms.
    @param matrices dict algorithm -> EvalMatrix
    @return dict (candidate, baseline) -> ImprovementScore
    """
    return {
        (candidate, baseline): probability_of_improvement(matrices[candidate], matrices[baseline],
                                                          replicates, ci_level, seed)
        for candidate, baseline in permutations(sorted(matrices), 2)
    }
