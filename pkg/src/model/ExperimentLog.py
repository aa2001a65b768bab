##
# @file ExperimentLog.py
#
# @brief Canonical record of an experiment: environments -> tasks -> algorithms -> runs.
# The log is immutable after construction; helper functions at the bottom of this file
# derive new logs from existing ones.
#
# @section libraries_ExperimentLog Libraries/Modules
# - RunRecord, MetricDescriptor
##

# Internal imports
from src.Errors import InvariantViolation, UnknownTask, UnknownAlgorithm
from src.model.components.RunRecord import RunRecord
from src.model.components.MetricDescriptor import MetricDescriptor

# External imports
from dataclasses import dataclass, field, replace
from types import MappingProxyType
from typing import Iterator, Mapping


def _check_name(name: object, path: str, what: str) -> None:
    if not isinstance(name, str) or not name:
        raise InvariantViolation(path, f"{what} names must be non-empty strings")


@dataclass(frozen=True)
class ExperimentLog:
    """!
    Canonical nested record of an experiment.
    environments: env -> task -> algorithm -> run_id -> RunRecord.
    metrics: declared metric descriptors by name.
    metadata: free-form string key/values (framework, versions, notes).
    """

    environments: Mapping[str, Mapping[str, Mapping[str, Mapping[str, RunRecord]]]]
    metrics: Mapping[str, MetricDescriptor] = field(default_factory=dict)
    metadata: Mapping[str, str] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not isinstance(self.environments, Mapping):
            raise InvariantViolation("environments", "environments must be a mapping")

        environments = {}
        for env, tasks in self.environments.items():
            _check_name(env, "environments", "environment")
            env_path = f"environments.{env}"
            if not isinstance(tasks, Mapping) or len(tasks) == 0:
                raise InvariantViolation(env_path, "an environment needs at least one task")

            frozen_tasks = {}
            for task, algorithms in tasks.items():
                _check_name(task, env_path, "task")
                task_path = f"{env_path}.{task}"
                if not isinstance(algorithms, Mapping) or len(algorithms) == 0:
                    raise InvariantViolation(task_path, "a task needs at least one algorithm")

                frozen_algorithms = {}
                for algorithm, runs in algorithms.items():
                    _check_name(algorithm, task_path, "algorithm")
                    group_path = f"{task_path}.{algorithm}"
                    frozen_algorithms[algorithm] = self.__freeze_group(runs, group_path)

                frozen_tasks[task] = MappingProxyType(frozen_algorithms)
            environments[env] = MappingProxyType(frozen_tasks)

        metrics = {}
        for name, descriptor in dict(self.metrics).items():
            if not isinstance(descriptor, MetricDescriptor) or descriptor.name != name:
                raise InvariantViolation(f"metrics.{name}", "metric descriptors must be keyed by their own name")
            metrics[name] = descriptor

        metadata = {}
        for key, value in dict(self.metadata).items():
            if not isinstance(key, str) or not isinstance(value, str):
                raise InvariantViolation(f"metadata.{key}", "metadata keys and values must be strings")
            metadata[key] = value

        object.__setattr__(self, "environments", MappingProxyType(environments))
        object.__setattr__(self, "metrics", MappingProxyType(metrics))
        object.__setattr__(self, "metadata", MappingProxyType(metadata))

    @staticmethod
    def __freeze_group(runs: Mapping[str, RunRecord], path: str) -> Mapping[str, RunRecord]:
        """!
        Validate one (env, task, algorithm) group.
        @param runs Mapping[str, RunRecord]
        @param path str Relative path of the group.
        @return read-only mapping of run_id to RunRecord.
        """
        if not isinstance(runs, Mapping) or len(runs) == 0:
            raise InvariantViolation(path, "every (env, task, algorithm) group must contain at least one run")

        grid = None
        first_run = None
        frozen = {}
        for run_id, run in runs.items():
            _check_name(run_id, path, "run")
            if not isinstance(run, RunRecord):
                raise InvariantViolation(f"{path}.{run_id}", "expected a RunRecord")
            if grid is None:
                grid, first_run = run.step_grid, run_id
            elif run.step_grid != grid:
                raise InvariantViolation(f"{path}.{run_id}",
                                         "runs share an identical ordered sequence of step_count values "
                                         f"is violated (differs from run {first_run})")
            frozen[run_id] = run
        return MappingProxyType(frozen)

    def tasks(self) -> list:
        """!
        Return every (env, task) pair, sorted.
        @return list[tuple[str, str]]
        """
        return sorted((env, task) for env, tasks in self.environments.items() for task in tasks)

    def algorithms(self) -> list:
        names = set()
        for tasks in self.environments.values():
            for algorithms in tasks.values():
                names.update(algorithms)
        return sorted(names)

    def group(self, env: str, task: str, algorithm: str) -> Mapping[str, RunRecord]:
        """!
        Return the runs of one algorithm on one task.
        @return Mapping[str, RunRecord]
        """
        algorithms = self.task_groups(env, task)
        if algorithm not in algorithms:
            raise UnknownAlgorithm(f"environments.{env}.{task}", f"algorithm '{algorithm}' has no runs on this task")
        return algorithms[algorithm]

    def task_groups(self, env: str, task: str) -> Mapping[str, Mapping[str, RunRecord]]:
        if env not in self.environments or task not in self.environments[env]:
            raise UnknownTask(f"environments.{env}.{task}", "no such task in the log")
        return self.environments[env][task]

    def runs(self, env: str, task: str, algorithm: str) -> list:
        group = self.group(env, task, algorithm)
        return [group[run_id] for run_id in sorted(group)]

    def step_grid(self, env: str, task: str, algorithm: str) -> tuple:
        return next(iter(self.group(env, task, algorithm).values())).step_grid

    def descriptor(self, metric: str) -> MetricDescriptor:
        """!
        Return the declared descriptor of a metric, or the default one
        (not unit interval, higher is better) for undeclared metrics.
        @return MetricDescriptor
        """
        if metric in self.metrics:
            return self.metrics[metric]
        return MetricDescriptor(metric)


def iter_groups(log: ExperimentLog) -> Iterator[tuple]:
    # (env, task, algorithm, runs) in log order
    for env, tasks in log.environments.items():
        for task, algorithms in tasks.items():
            for algorithm, runs in algorithms.items():
                yield env, task, algorithm, runs


def replace_group(log: ExperimentLog, env: str, task: str, algorithm: str,
                  runs: Mapping[str, RunRecord]) -> ExperimentLog:
    """!
    Return a copy of the log in which one group is replaced (or added).
    @return ExperimentLog
    """
    environments = {e: {t: dict(a) for t, a in tasks.items()} for e, tasks in log.environments.items()}
    environments.setdefault(env, {}).setdefault(task, {})[algorithm] = dict(runs)
    return replace(log, environments=environments)


def remove_environment(log: ExperimentLog, env: str) -> ExperimentLog:
    environments = {e: tasks for e, tasks in log.environments.items() if e != env}
    return replace(log, environments=environments)
