##
# @file LogDecoder.py
#
# @brief Decodes canonical JSON experiment logs into ExperimentLog instances.
# Decoding happens in three passes: JSON syntax, schema structure and model invariants.
# Each pass reports the JSON path of the first offending value.
#
# @section libraries_LogDecoder Libraries/Modules
# - json standard library
#   - Parsing with strict number handling.
# - LogSchema
#   - Structural validation (jsonschema).
##

# Internal imports
from src.Errors import MalformedJson, SchemaViolation, InvariantViolation
from src.ingest.LogSchema import schema_violations
from src.model.ExperimentLog import ExperimentLog
from src.model.components.AbsoluteRecord import AbsoluteRecord
from src.model.components.IntervalRecord import IntervalRecord
from src.model.components.MetricDescriptor import MetricDescriptor
from src.model.components.RunRecord import RunRecord

# External imports
from os.path import exists
import json
import logging
import math

logger = logging.getLogger(__name__)

## Top-level keys with a meaning in the canonical format.
KNOWN_TOP_LEVEL_KEYS = ("version", "metrics", "environments", "metadata")


class _NumberOutOfRange(ValueError):
    pass


def _parse_float(text: str) -> float:
    value = float(text)
    if not math.isfinite(value):
        raise _NumberOutOfRange(text)
    return value


def _parse_int(text: str) -> int:
    value = int(text)
    try:
        float(value)
    except OverflowError:
        raise _NumberOutOfRange(text)
    return value


def _reject_constant(text: str) -> float:
    raise _NumberOutOfRange(text)


def _decode_json(document) -> object:
    """!
    Syntax pass.
    @param document bytes | str UTF-8 JSON document.
    @return parsed JSON value.
    """
    try:
        text = document.decode("utf-8") if isinstance(document, (bytes, bytearray)) else document
        return json.loads(text, parse_float=_parse_float, parse_int=_parse_int, parse_constant=_reject_constant)
    except UnicodeDecodeError as error:
        raise MalformedJson("$", f"input is not valid UTF-8 ({error.reason} at byte {error.start})")
    except json.JSONDecodeError as error:
        raise MalformedJson("$", f"line {error.lineno} column {error.colno}: {error.msg}")
    except _NumberOutOfRange as error:
        raise MalformedJson("$", f"number outside the IEEE-754 double range: {error}")


def _decode_descriptors(entries: list) -> dict:
    descriptors = {}
    for i, entry in enumerate(entries):
        name = entry["name"]
        if name in descriptors:
            raise SchemaViolation(f"$.metrics[{i}].name", f"metric '{name}' is declared twice")
        descriptors[name] = MetricDescriptor(name,
                                             unit_interval=entry.get("unit_interval", False),
                                             higher_is_better=entry.get("higher_is_better", True))
    if "return" not in descriptors:
        raise SchemaViolation("$.metrics", "a \"return\" metric descriptor is mandatory")
    return descriptors


def _decode_run(raw_run: dict, path: str) -> RunRecord:
    try:
        intervals = []
        for i, raw_interval in enumerate(raw_run["intervals"]):
            try:
                intervals.append(IntervalRecord(raw_interval["step_count"], raw_interval["metrics"]))
            except InvariantViolation as error:
                raise error.prefixed(f"intervals[{i}]")

        absolute = None
        if "absolute" in raw_run:
            try:
                absolute = AbsoluteRecord(raw_run["absolute"]["metrics"])
            except InvariantViolation as error:
                raise error.prefixed("absolute")

        return RunRecord(tuple(intervals), absolute)
    except InvariantViolation as error:
        raise error.prefixed(path)


def decode_document(raw: object) -> ExperimentLog:
    """!
    Schema and invariant passes over an already parsed JSON value.
    @param raw object Parsed JSON.
    @return ExperimentLog
    """
    violations = schema_violations(raw)
    if violations:
        path, message = violations[0]
        raise SchemaViolation(path, message)

    descriptors = _decode_descriptors(raw["metrics"])

    # Every level is copied even when empty, so ExperimentLog rejects empty environments, tasks and groups.
    environments = {
        env: {
            task: {
                algorithm: {run_id: _decode_run(raw_run, f"$.environments.{env}.{task}.{algorithm}.{run_id}")
                            for run_id, raw_run in runs.items()}
                for algorithm, runs in algorithms.items()
            }
            for task, algorithms in tasks.items()
        }
        for env, tasks in raw["environments"].items()
    }

    metadata = dict(raw.get("metadata", {}))
    for key, value in raw.items():
        if key not in KNOWN_TOP_LEVEL_KEYS and key not in metadata:
            metadata[key] = value if isinstance(value, str) else json.dumps(value, sort_keys=True)

    try:
        return ExperimentLog(environments, descriptors, metadata)
    except InvariantViolation as error:
        raise error.prefixed("$")


def parse_experiment_log(document) -> ExperimentLog:
    """!
    Parse a canonical UTF-8 JSON experiment log.
    @param document bytes UTF-8 JSON document (str is accepted as well).
    @return ExperimentLog
    """
    return decode_document(_decode_json(document))


def load_experiment_log(filepath: str) -> ExperimentLog:
    """!
    Take in a filepath to a .JSON experiment log and load all the contents.
    @param filepath str Path to the log.
    @return ExperimentLog
    """
    if not exists(filepath):
        raise FileNotFoundError(f"no such file: {filepath}")

    with open(filepath, "rb") as log_file:
        log = parse_experiment_log(log_file.read())

    logger.info("Loaded experiment log -> %s", filepath)
    logger.info("    Environments -> %d", len(log.environments))
    logger.info("    Tasks        -> %d", len(log.tasks()))
    logger.info("    Algorithms   -> %s", ", ".join(log.algorithms()))
    return log
