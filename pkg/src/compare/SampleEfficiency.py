##
# @file SampleEfficiency.py
#
# @brief Sample-efficiency curves: an aggregate statistic of normalised per-run interval means,
# traced against the training timesteps, with stratified bootstrap CIs at every step.
##

# Internal imports
from src.Errors import StepGridMismatch, RaggedRuns, UnknownAlgorithm, InvariantViolation
from src.ProtocolConfig import ProtocolConfig
from src.aggregate.StratifiedBootstrap import stratified_bootstrap_ci
from src.compare.ProfileCurve import ProfileCurve
from src.metrics.AbsoluteMetric import run_interval_mean
from src.metrics.Normalisation import task_score_bounds, unit_score
from src.model.Datatypes import CurveKind, Pooling, Statistic
from src.model.EvalMatrix import EvalMatrix
from src.model.ExperimentLog import ExperimentLog

# External imports
import logging
import numpy as np

logger = logging.getLogger(__name__)

## Step-grid alignment modes.
ALIGN_STRICT: str = "strict"
ALIGN_INTERSECT: str = "intersect"


def shared_step_grid(log: ExperimentLog, algorithm: str, tasks: list, align: str = ALIGN_STRICT) -> list:
    """!
    Step grid shared by every task of an algorithm.
    strict requires identical grids, intersect keeps the step counts present in every task.
    @return list[int]
    """
    grids = {(env, task): log.step_grid(env, task, algorithm) for env, task in tasks}
    reference = grids[tasks[0]]
    offending = [f"{env}/{task}" for (env, task), grid in grids.items() if grid != reference]

    if align == ALIGN_STRICT:
        if offending:
            raise StepGridMismatch("--align", f"step grids of {', '.join(offending)} differ from "
                                              f"{tasks[0][0]}/{tasks[0][1]}")
        return list(reference)
    if align != ALIGN_INTERSECT:
        raise InvariantViolation("--align", f"unknown alignment '{align}' (strict or intersect)")

    shared = sorted(set.intersection(*(set(grid) for grid in grids.values())))
    if len(shared) == 0:
        raise StepGridMismatch("--align", "the tasks have no step count in common")
    if offending:
        logger.warning("Step grids differ, using %d shared step counts -> %s", len(shared), ", ".join(offending))
    return shared


def sample_efficiency_curve(log: ExperimentLog, algorithm: str, metric: str = "return",
                            statistic: Statistic = Statistic.IQM, pooling: Pooling = Pooling.GLOBAL,
                            config: ProtocolConfig = ProtocolConfig(), align: str = ALIGN_STRICT) -> ProfileCurve:
    """!
    Normalised sample-efficiency curve of one algorithm over all of its tasks.
    @param log ExperimentLog
    @param algorithm str
    @param metric str
    @param statistic Statistic Reduction at each step (iqm by default).
    @param pooling Pooling Bounds used for normalisation.
    @param config ProtocolConfig Bootstrap replicates, level, seed and gamma.
    @param align str strict | intersect
    @return ProfileCurve of kind sample_efficiency.
    """
    tasks = [(env, task) for env, task in log.tasks() if algorithm in log.task_groups(env, task)]
    if len(tasks) == 0:
        raise UnknownAlgorithm("algorithm", f"algorithm '{algorithm}' has no runs in the log")

    steps = shared_step_grid(log, algorithm, tasks, align)
    descriptor = log.descriptor(metric)

    columns = []
    for env, task in tasks:
        runs = log.runs(env, task, algorithm)
        if columns and len(runs) != len(columns[0][1]):
            raise RaggedRuns(f"$.environments.{env}.{task}.{algorithm}",
                             f"found {len(runs)} runs, expected {len(columns[0][1])}")
        bounds = None if descriptor.unit_interval else task_score_bounds(log, env, task, metric, pooling, descriptor)
        positions = {step: i for i, step in enumerate(log.step_grid(env, task, algorithm))}
        columns.append((bounds, runs, positions))

    xs = []
    points = []
    for step in steps:
        values = np.array([
            [unit_score(descriptor.orient(run_interval_mean(run.intervals[positions[step]], metric)), descriptor, bounds)
             for run in runs]
            for bounds, runs, positions in columns
        ]).T
        matrix = EvalMatrix(algorithm, metric, tasks, values)
        points.append(stratified_bootstrap_ci(matrix, statistic, config.bootstrap_replicates, config.ci_level,
                                              config.seed, config.gamma))
        xs.append(float(step))

    return ProfileCurve(CurveKind.SAMPLE_EFFICIENCY, algorithm, xs, points)
