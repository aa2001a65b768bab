##
# @file LogEncoder.py
#
# @brief Encodes an ExperimentLog into the canonical JSON format.
# parse_experiment_log(serialize_experiment_log(log)) == log for every log that declares "return".
#
# @section libraries_LogEncoder Libraries/Modules
# - json standard library
##

# Internal imports
from src.ingest.LogSchema import LOG_FORMAT_VERSION
from src.model.ExperimentLog import ExperimentLog
from src.model.components.MetricDescriptor import RETURN_DESCRIPTOR
from src.model.components.RunRecord import RunRecord

# External imports
import json


def _encode_run(run: RunRecord) -> dict:
    encoded = {
        "intervals": [
            {"step_count": interval.step_count,
             "metrics": {name: list(values) for name, values in interval.metrics.items()}}
            for interval in run.intervals
        ]
    }
    if run.absolute is not None:
        encoded["absolute"] = {"metrics": {name: list(values) for name, values in run.absolute.metrics.items()}}
    return encoded


def encode_document(log: ExperimentLog) -> dict:
    """!
    Convert a log into the canonical JSON object.
    The mandatory "return" descriptor is emitted even when the log does not declare it.
    @param log ExperimentLog
    @return dict
    """
    descriptors = [descriptor.to_dict() for descriptor in log.metrics.values()]
    if "return" not in log.metrics:
        descriptors.insert(0, RETURN_DESCRIPTOR.to_dict())

    return {
        "version": LOG_FORMAT_VERSION,
        "metrics": descriptors,
        "environments": {
            env: {
                task: {
                    algorithm: {run_id: _encode_run(run) for run_id, run in runs.items()}
                    for algorithm, runs in algorithms.items()
                }
                for task, algorithms in tasks.items()
            }
            for env, tasks in log.environments.items()
        },
        "metadata": dict(log.metadata),
    }


def serialize_experiment_log(log: ExperimentLog) -> bytes:
    """!
    Serialize a log to canonical UTF-8 JSON. Output is deterministic for a given log.
    @param log ExperimentLog
    @return bytes
    """
    text = json.dumps(encode_document(log), allow_nan=False, ensure_ascii=False, separators=(",", ":"))
    return (text + "\n").encode("utf-8")


def save_experiment_log(log: ExperimentLog, filepath: str) -> None:
    with open(filepath, "wb") as log_file:
        log_file.write(serialize_experiment_log(log))
