##
# @file StratifiedBootstrap.py
#
# @brief Stratified percentile bootstrap over evaluation matrices.
# Runs are resampled with replacement inside each task column; columns are never mixed.
# Each column is sorted before resampling, so the replicate draws do not depend on run order.
#
# Random streams: one Philox counter-based generator per (seed, algorithm, task index),
# keyed by 64 bits of a SHA-256 digest. Replicate b reads row b of that stream.
#
# @section libraries_StratifiedBootstrap Libraries/Modules
# - numpy (https://numpy.org)
#   - Philox bit generator, percentiles.
# - hashlib standard library
#   - Stream key derivation.
##

# Internal imports
from src.Errors import EmptyInput, InvariantViolation
from src.aggregate.Statistics import pooled_statistic, statistic_rows
from src.model.ConfidenceInterval import ConfidenceInterval
from src.model.Datatypes import CIMethod, Statistic
from src.model.EvalMatrix import EvalMatrix

# External imports
import hashlib
import json
import numpy as np


def derive_stream_key(seed: int, *labels) -> int:
    """!
    64-bit key of a random stream, derived from the seed and identifying labels.
    @param seed int
    @param labels str | int Identifiers of the stream (algorithm, task index, ...).
    @return int
    """
    digest = hashlib.sha256(json.dumps([int(seed), *labels]).encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def resample_indices(key: int, runs: int, replicates: int) -> np.ndarray:
    # (replicates x runs) indices in [0, runs), row b is replicate b
    generator = np.random.Generator(np.random.Philox(key=key))
    uniforms = generator.random((replicates, runs))
    return np.minimum((uniforms * runs).astype(np.int64), runs - 1)


def resample_column(column: np.ndarray, key: int, replicates: int) -> np.ndarray:
    ordered = np.sort(column)
    return ordered[resample_indices(key, ordered.size, replicates)]


def stratified_samples(matrix: EvalMatrix, replicates: int, seed: int, *labels) -> np.ndarray:
    """!
    Stratified bootstrap replicates of a matrix with the task columns pooled side by side.
    @param matrix EvalMatrix
    @param replicates int
    @param seed int
    @param labels extra stream labels; the algorithm name is used when none are given.
    @return np.ndarray (replicates x R*M)
    """
    if replicates < 1:
        raise InvariantViolation("replicates", "at least one bootstrap replicate is required")
    if matrix.values.size == 0:
        raise EmptyInput("values", f"evaluation matrix of '{matrix.algorithm}' is empty")
    labels = labels or (matrix.algorithm,)
    return np.hstack([
        resample_column(matrix.column(t), derive_stream_key(seed, *labels, t), replicates)
        for t in range(len(matrix.tasks))
    ])


def percentile_interval(replicate_values: np.ndarray, ci_level: float) -> ConfidenceInterval:
    """!
    Percentile interval [(1-level)/2, 1-(1-level)/2] of a replicate distribution.
    A zero-width interval is reported as degenerate.
    @return ConfidenceInterval
    """
    if not 0.0 < ci_level < 1.0:
        raise InvariantViolation("ci_level", "confidence level must lie in (0, 1)")
    tail = 100.0 * (1.0 - ci_level) / 2.0
    low, high = np.percentile(np.sort(replicate_values), [tail, 100.0 - tail])
    lower, upper = float(min(low, high)), float(max(low, high))
    method = CIMethod.DEGENERATE if lower == upper else CIMethod.STRATIFIED_BOOTSTRAP
    return ConfidenceInterval(lower, upper, ci_level, method)


def bootstrap_statistics(matrix: EvalMatrix, statistics, replicates: int = 2000, ci_level: float = 0.95,
                         seed: int = 42, gamma: float = 1.0) -> dict:
    """!
    Point estimates and stratified bootstrap CIs of several statistics, evaluated on one shared set of replicates.
    @param matrix EvalMatrix
    @param statistics Iterable[Statistic]
    @param replicates int
    @param ci_level float
    @param seed int
    @param gamma float Optimality-gap threshold.
    @return dict Statistic -> (point, ConfidenceInterval)
    """
    if replicates < 1:
        raise InvariantViolation("replicates", "at least one bootstrap replicate is required")
    statistics = [Statistic(statistic) for statistic in statistics]
    points = {statistic: pooled_statistic(matrix, statistic, gamma) for statistic in statistics}

    if np.all(matrix.values == matrix.values[:1, :]):
        return {statistic: (point, ConfidenceInterval.degenerate(point, ci_level)) for statistic, point in points.items()}

    samples = stratified_samples(matrix, replicates, seed)
    return {
        statistic: (points[statistic], percentile_interval(statistic_rows(samples, statistic, gamma), ci_level))
        for statistic in statistics
    }


def stratified_bootstrap_ci(matrix: EvalMatrix, statistic: Statistic, replicates: int = 2000,
                            ci_level: float = 0.95, seed: int = 42, gamma: float = 1.0) -> tuple:
    """!
    Point estimate and stratified percentile-bootstrap CI of one statistic.
    Deterministic for a fixed seed.
    @return tuple (point, ConfidenceInterval)
    """
    return bootstrap_statistics(matrix, [statistic], replicates, ci_level, seed, gamma)[Statistic(statistic)]
