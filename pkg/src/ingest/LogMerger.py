##
# @file LogMerger.py
#
# @brief Union of several experiment logs, e.g. per-algorithm logs from different frameworks.
##

# Internal imports
from src.Errors import DuplicateRun, SchemaViolation
from src.model.ExperimentLog import ExperimentLog, iter_groups

# External imports
import logging

logger = logging.getLogger(__name__)


def merge_logs(logs: list) -> ExperimentLog:
    """!
    Merge logs into one. Metadata keys are prefixed with the source index ("log0.framework").
    @param logs list[ExperimentLog]
    @return ExperimentLog
    """
    logs = list(logs)
    if len(logs) == 0:
        raise SchemaViolation("$", "at least one log required")

    environments = {}
    metrics = {}
    metadata = {}

    for i, log in enumerate(logs):
        for env, task, algorithm, runs in iter_groups(log):
            group = environments.setdefault(env, {}).setdefault(task, {}).setdefault(algorithm, {})
            for run_id, run in runs.items():
                if run_id in group:
                    raise DuplicateRun(f"$.environments.{env}.{task}.{algorithm}.{run_id}",
                                       f"run is defined by more than one log (log {i})")
                group[run_id] = run

        for name, descriptor in log.metrics.items():
            if name in metrics and metrics[name] != descriptor:
                raise SchemaViolation(f"$.metrics.{name}", f"log {i} declares a conflicting descriptor")
            metrics[name] = descriptor

        for key, value in log.metadata.items():
            metadata[f"log{i}.{key}"] = value

    logger.info("Merged logs -> %d", len(logs))
    return ExperimentLog(environments, metrics, metadata)
