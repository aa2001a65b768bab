##
# @file EvaluationMatrixBuilder.py
#
# @brief Builds the (R x M) evaluation matrix of normalised absolute scores of one algorithm.
# Runs are ordered by run_id inside every task column.
#
# @section libraries_EvaluationMatrixBuilder Libraries/Modules
# - numpy (https://numpy.org)
##

# Internal imports
from src.Errors import RaggedRuns, MissingAbsolute, UnknownAlgorithm, UnknownMetric
from src.metrics.AbsoluteMetric import absolute_return
from src.metrics.IntervalSeries import normal_interval
from src.metrics.Normalisation import task_score_bounds, unit_score
from src.model.Datatypes import Pooling
from src.model.EvalMatrix import EvalMatrix
from src.model.ExperimentLog import ExperimentLog
from src.model.components.MetricDescriptor import MetricDescriptor

# External imports
from typing import Optional
import logging
import numpy as np

logger = logging.getLogger(__name__)


def algorithm_tasks(log: ExperimentLog, algorithm: str) -> list:
    """!
    Sorted (env, task) pairs on which an algorithm has runs.
    @return list[tuple[str, str]]
    """
    return [(env, task) for env, task in log.tasks() if algorithm in log.task_groups(env, task)]


def build_evaluation_matrix(log: ExperimentLog, algorithm: str, metric: str = "return",
                            pooling: Pooling = Pooling.GLOBAL, descriptor: Optional[MetricDescriptor] = None,
                            tasks: Optional[list] = None) -> EvalMatrix:
    """!
    Entry (r, t) is the normalised absolute score of run r on task t.
    Unit-interval metrics keep their raw absolute mean.
    @param log ExperimentLog
    @param algorithm str
    @param metric str
    @param pooling Pooling Bounds pooling mode.
    @param descriptor MetricDescriptor Defaults to the log's descriptor of the metric.
    @param tasks list[tuple[str, str]] Task subset; every task of the algorithm by default.
    @return EvalMatrix
    """
    descriptor = descriptor or log.descriptor(metric)
    tasks = algorithm_tasks(log, algorithm) if tasks is None else [tuple(task) for task in tasks]
    if len(tasks) == 0:
        raise UnknownAlgorithm("algorithm", f"algorithm '{algorithm}' has no runs in the log")

    columns = []
    for env, task in tasks:
        group_path = f"$.environments.{env}.{task}.{algorithm}"
        group = log.group(env, task, algorithm)
        if columns and len(group) != len(columns[0]):
            raise RaggedRuns(group_path, f"found {len(group)} runs, expected {len(columns[0])} "
                                         f"as on {tasks[0][0]}/{tasks[0][1]}")

        bounds = None if descriptor.unit_interval else task_score_bounds(log, env, task, metric, pooling, descriptor)
        column = []
        for run_id in sorted(group):
            try:
                score = descriptor.orient(absolute_return(group[run_id], metric))
            except (MissingAbsolute, UnknownMetric) as error:
                raise error.prefixed(f"{group_path}.{run_id}")
            column.append(unit_score(score, descriptor, bounds))
        columns.append(column)

    values = np.array(columns, dtype=np.float64).T
    logger.debug("Evaluation matrix -> %s %s %s", algorithm, metric, values.shape)
    return EvalMatrix(algorithm, metric, tasks, values, normalised=True)


def evaluation_matrices(log: ExperimentLog, metric: str = "return", pooling: Pooling = Pooling.GLOBAL,
                        algorithms: Optional[list] = None, tasks: Optional[list] = None) -> dict:
    """!
    Evaluation matrix of every (or the listed) algorithm.
    @return dict algorithm -> EvalMatrix
    """
    algorithms = log.algorithms() if algorithms is None else algorithms
    return {algorithm: build_evaluation_matrix(log, algorithm, metric, pooling, tasks=tasks) for algorithm in algorithms}


def task_absolute_summary(matrix: EvalMatrix, ci_level: float = 0.95) -> dict:
    """!
    Per-task mean of the normalised absolute scores across runs, with a normal CI.
    @param matrix EvalMatrix
    @param ci_level float
    @return dict "env/task" -> (mean, ConfidenceInterval)
    """
    return {label: normal_interval(matrix.column(t), ci_level) for t, label in enumerate(matrix.task_labels())}
