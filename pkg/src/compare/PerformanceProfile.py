##
# @file PerformanceProfile.py
#
# @brief Performance profiles: fraction of all run scores strictly above tau, over a tau grid,
# with pointwise stratified bootstrap CIs.
#
# @section libraries_PerformanceProfile Libraries/Modules
# - numpy (https://numpy.org)
##

# Internal imports
from src.Errors import EmptyInput, InvariantViolation
from src.aggregate.StratifiedBootstrap import stratified_samples, percentile_interval
from src.compare.ProfileCurve import ProfileCurve
from src.model.ConfidenceInterval import ConfidenceInterval
from src.model.Datatypes import CurveKind
from src.model.EvalMatrix import EvalMatrix

# External imports
from typing import Optional
import numpy as np

## Number of points of the default tau grid on [0, 1].
DEFAULT_TAU_POINTS: int = 101


def default_taus(points: int = DEFAULT_TAU_POINTS) -> np.ndarray:
    return np.linspace(0.0, 1.0, points)


def profile_fractions(scores: np.ndarray, taus: np.ndarray) -> np.ndarray:
    """!
    Fraction of scores strictly greater than each tau.
    @return np.ndarray aligned with taus.
    """
    counts = np.count_nonzero(scores[np.newaxis, :] > taus[:, np.newaxis], axis=1)
    return counts / scores.size


def performance_profile(matrix: EvalMatrix, taus: Optional[list] = None, replicates: int = 2000,
                        ci_level: float = 0.95, seed: int = 42) -> ProfileCurve:
    """!
    Run-score distribution of one algorithm.
    @param matrix EvalMatrix
    @param taus list[float] Strictly increasing thresholds; 101 points on [0, 1] by default.
    @param replicates int
    @param ci_level float
    @param seed int
    @return ProfileCurve of kind performance_profile.
    """
    if matrix.values.size == 0:
        raise EmptyInput("values", f"evaluation matrix of '{matrix.algorithm}' is empty")
    taus = default_taus() if taus is None else np.asarray(taus, dtype=np.float64)
    if taus.ndim != 1 or np.any(np.diff(taus) <= 0):
        raise InvariantViolation("taus", "thresholds must be strictly increasing")

    estimates = profile_fractions(matrix.values.ravel(), taus)

    if np.all(matrix.values == matrix.values[:1, :]):
        intervals = [ConfidenceInterval.degenerate(estimate, ci_level) for estimate in estimates]
    else:
        samples = stratified_samples(matrix, replicates, seed)
        intervals = [percentile_interval(np.count_nonzero(samples > tau, axis=1) / samples.shape[1], ci_level)
                     for tau in taus]

    return ProfileCurve(CurveKind.PERFORMANCE_PROFILE, matrix.algorithm, taus.tolist(), list(zip(estimates, intervals)))
