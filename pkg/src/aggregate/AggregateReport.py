##
# @file AggregateReport.py
#
# @brief Per-algorithm point estimates and stratified bootstrap CIs of aggregate statistics.
#
# JSON layout:
# {"metric": ..., "gamma": ..., "bootstrap": {"replicates": ..., "seed": ..., "ci_level": ...},
#  "entries": {"<alg>": {"iqm": {"point": ..., "lower": ..., "upper": ...}, ...}}}
#
# @section libraries_AggregateReport Libraries/Modules
# - jsonschema (https://python-jsonschema.readthedocs.io)
#   - Validation of reports read back from disk.
# - concurrent.futures standard library
#   - Optional per-algorithm worker threads.
##

# Internal imports
from src.Errors import EmptyInput, TaskListMismatch, InvariantViolation, MalformedJson, SchemaViolation
from src.ProtocolConfig import ProtocolConfig
from src.aggregate.StratifiedBootstrap import bootstrap_statistics
from src.metrics.EvaluationMatrixBuilder import build_evaluation_matrix
from src.model.ConfidenceInterval import ConfidenceInterval
from src.model.Datatypes import CIMethod, Pooling, Statistic
from src.model.ExperimentLog import ExperimentLog

# External imports
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from jsonschema import Draft7Validator
from types import MappingProxyType
from typing import Mapping
import json
import logging

logger = logging.getLogger(__name__)

## Statistics reported when none are requested.
DEFAULT_STATISTICS = (Statistic.IQM, Statistic.MEAN, Statistic.MEDIAN, Statistic.OPTIMALITY_GAP)

_ESTIMATE = {
    "type": "object",
    "required": ["point", "lower", "upper"],
    "properties": {"point": {"type": "number"}, "lower": {"type": "number"}, "upper": {"type": "number"}},
}

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["metric", "gamma", "bootstrap", "entries"],
    "properties": {
        "metric": {"type": "string"},
        "gamma": {"type": "number"},
        "bootstrap": {
            "type": "object",
            "required": ["replicates", "seed", "ci_level"],
            "properties": {
                "replicates": {"type": "integer", "minimum": 1},
                "seed": {"type": "integer"},
                "ci_level": {"type": "number", "exclusiveMinimum": 0, "exclusiveMaximum": 1},
            },
        },
        "entries": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "propertyNames": {"enum": [statistic.value for statistic in Statistic]},
                "additionalProperties": _ESTIMATE,
            },
        },
    },
}


@dataclass(frozen=True)
class BootstrapProvenance:
    replicates: int
    seed: int
    ci_level: float

    def __post_init__(self) -> None:
        if self.replicates < 1:
            raise InvariantViolation("bootstrap.replicates", "at least one replicate is required")


@dataclass(frozen=True)
class AggregateReport:
    """!
    entries: algorithm -> statistic name -> (point, ConfidenceInterval).
    """

    metric: str
    gamma: float
    entries: Mapping[str, Mapping[str, tuple]]
    bootstrap: BootstrapProvenance

    def __post_init__(self) -> None:
        entries = {}
        for algorithm, statistics in self.entries.items():
            frozen = {}
            for name, (point, ci) in statistics.items():
                if ci.method not in (CIMethod.STRATIFIED_BOOTSTRAP, CIMethod.DEGENERATE):
                    raise InvariantViolation(f"entries.{algorithm}.{name}",
                                             "aggregate CIs come from the stratified bootstrap")
                frozen[Statistic(name).value] = (float(point), ci)
            entries[algorithm] = MappingProxyType(frozen)
        object.__setattr__(self, "entries", MappingProxyType(entries))
        object.__setattr__(self, "gamma", float(self.gamma))

    def algorithms(self) -> list:
        return sorted(self.entries)

    def to_dict(self) -> dict:
        return {
            "metric": self.metric,
            "gamma": self.gamma,
            "bootstrap": {"replicates": self.bootstrap.replicates, "seed": self.bootstrap.seed,
                          "ci_level": self.bootstrap.ci_level},
            "entries": {
                algorithm: {name: {"point": point, "lower": ci.lower, "upper": ci.upper}
                            for name, (point, ci) in self.entries[algorithm].items()}
                for algorithm in self.algorithms()
            },
        }

    def to_json(self) -> str:
        """!
        Deterministic JSON text of the report.
        @return str
        """
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_json(cls, text) -> "AggregateReport":
        """!
        Read a report written by to_json.
        @param text str | bytes
        @return AggregateReport
        """
        try:
            document = json.loads(text)
        except (json.JSONDecodeError, UnicodeDecodeError) as error:
            raise MalformedJson("$", str(error))

        errors = sorted(Draft7Validator(REPORT_SCHEMA).iter_errors(document), key=lambda e: list(e.absolute_path))
        if errors:
            path = "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in errors[0].absolute_path)
            raise SchemaViolation(path, errors[0].message)

        bootstrap = document["bootstrap"]
        level = bootstrap["ci_level"]
        entries = {}
        for algorithm, statistics in document["entries"].items():
            entries[algorithm] = {}
            for name, estimate in statistics.items():
                method = CIMethod.DEGENERATE if estimate["lower"] == estimate["upper"] else CIMethod.STRATIFIED_BOOTSTRAP
                try:
                    ci = ConfidenceInterval(estimate["lower"], estimate["upper"], level, method)
                except InvariantViolation as error:
                    raise error.prefixed(f"$.entries.{algorithm}.{name}")
                entries[algorithm][name] = (estimate["point"], ci)

        return cls(document["metric"], document["gamma"], entries,
                   BootstrapProvenance(bootstrap["replicates"], bootstrap["seed"], level))


def aggregate_scores(matrices: Mapping, statistics=DEFAULT_STATISTICS,
                     config: ProtocolConfig = ProtocolConfig(), workers: int = 1) -> AggregateReport:
    """!
    Point estimate and stratified bootstrap CI of every statistic for every algorithm.
    Bootstrap streams are keyed by the config seed and the algorithm name.
    @param matrices Mapping algorithm -> EvalMatrix
    @param statistics Iterable[Statistic]
    @param config ProtocolConfig Replicates, level, seed and gamma.
    @param workers int Worker threads; results do not depend on it.
    @return AggregateReport
    """
    if len(matrices) == 0:
        raise EmptyInput("matrices", "at least one evaluation matrix is required")
    statistics = [Statistic(statistic) for statistic in statistics]
    if len(statistics) == 0:
        raise EmptyInput("statistics", "at least one statistic is required")

    algorithms = sorted(matrices)
    reference = matrices[algorithms[0]]
    for algorithm in algorithms[1:]:
        if matrices[algorithm].tasks != reference.tasks:
            raise TaskListMismatch(f"matrices.{algorithm}",
                                   f"task list differs from the one of '{reference.algorithm}'")
        if matrices[algorithm].metric != reference.metric:
            raise TaskListMismatch(f"matrices.{algorithm}",
                                   f"metric '{matrices[algorithm].metric}' differs from '{reference.metric}'")

    def job(algorithm: str) -> dict:
        return bootstrap_statistics(matrices[algorithm], statistics, config.bootstrap_replicates,
                                    config.ci_level, config.seed, config.gamma)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            results = dict(zip(algorithms, executor.map(job, algorithms)))
    else:
        results = {algorithm: job(algorithm) for algorithm in algorithms}

    entries = {algorithm: {statistic.value: estimate for statistic, estimate in results[algorithm].items()}
               for algorithm in algorithms}
    logger.info("Aggregated -> %s over %d tasks", ", ".join(algorithms), len(reference.tasks))
    return AggregateReport(reference.metric, config.gamma, entries,
                           BootstrapProvenance(config.bootstrap_replicates, config.seed, config.ci_level))


def aggregate_by_environment(log: ExperimentLog, metric: str = "return", statistics=DEFAULT_STATISTICS,
                             config: ProtocolConfig = ProtocolConfig(), pooling: Pooling = Pooling.GLOBAL,
                             workers: int = 1) -> dict:
    """!
    One AggregateReport per environment, over the tasks of that environment.
    Algorithms missing from any task of an environment are left out of its report.
    @return dict environment -> AggregateReport
    """
    reports = {}
    for env in sorted(log.environments):
        tasks = [(env, task) for task in sorted(log.environments[env])]
        algorithms = [algorithm for algorithm in log.algorithms()
                      if all(algorithm in log.task_groups(env, task) for _, task in tasks)]
        skipped = sorted(set(log.algorithms()) - set(algorithms))
        if skipped:
            logger.warning("Skipping algorithms not run on every task of %s -> %s", env, ", ".join(skipped))
        if not algorithms:
            continue
        matrices = {algorithm: build_evaluation_matrix(log, algorithm, metric, pooling, tasks=tasks)
                    for algorithm in algorithms}
        reports[env] = aggregate_scores(matrices, statistics, config, workers)
    return reports
