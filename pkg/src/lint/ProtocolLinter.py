##
# @file ProtocolLinter.py
#
# @brief Checks an ExperimentLog against the standardised evaluation protocol.
# Every check is a function (log, config, policy_class) -> (status, finding), run in registry order.
##

# Internal imports
from src.Errors import SchemaViolation
from src.ProtocolConfig import ProtocolConfig
from src.lint.LintCheck import CHECK_REGISTRY, LintCheck, LintReport
from src.model.Datatypes import LintStatus, PolicyClass
from src.model.ExperimentLog import ExperimentLog, iter_groups

# External imports
from typing import Mapping, Optional
import logging

logger = logging.getLogger(__name__)


def _multiple_environments(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    count = len(log.environments)
    if count >= 2:
        return LintStatus.PASS, f"found {count} environments"
    return LintStatus.WARN, f"found {count} environment, evaluating on more than one is strongly recommended"


def _multiple_tasks(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    single = sorted(env for env, tasks in log.environments.items() if len(tasks) < 2)
    if single:
        return LintStatus.WARN, f"single task in {', '.join(single)}"
    return LintStatus.PASS, f"found {len(log.tasks())} tasks"


def _runs_count(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    short = [(len(runs), f"{env}/{task}/{algorithm}") for env, task, algorithm, runs in iter_groups(log)
             if len(runs) < config.runs]
    if short:
        found, where = min(short)
        return LintStatus.FAIL, f"found {found}, protocol requires {config.runs} ({where})"
    return LintStatus.PASS, f"every group has at least {config.runs} runs"


def _eval_episode_count(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    for env, task, algorithm, runs in iter_groups(log):
        for run_id, run in runs.items():
            for i, interval in enumerate(run.intervals):
                if interval.episode_count != config.eval_episodes:
                    return LintStatus.WARN, (f"found {interval.episode_count} episodes, protocol requires "
                                             f"{config.eval_episodes} ({env}/{task}/{algorithm}/{run_id} interval {i})")
    return LintStatus.PASS, f"{config.eval_episodes} episodes at every interval"


def _eval_interval(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    for env, task, algorithm, runs in iter_groups(log):
        grid = next(iter(runs.values())).step_grid
        where = f"{env}/{task}/{algorithm}"
        if grid[0] not in (0, config.eval_interval):
            return LintStatus.WARN, f"first evaluation at step {grid[0]} ({where})"
        for previous, step in zip(grid, grid[1:]):
            if step - previous != config.eval_interval:
                return LintStatus.WARN, (f"found a gap of {step - previous} steps after step {previous}, "
                                         f"protocol requires {config.eval_interval} ({where})")
    return LintStatus.PASS, f"evaluations every {config.eval_interval} steps"


def _training_duration(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    status = LintStatus.PASS
    findings = []
    for algorithm in log.algorithms():
        final = min(next(iter(runs.values())).final_step
                    for _, _, name, runs in iter_groups(log) if name == algorithm)
        regime = PolicyClass(policy_class.get(algorithm, PolicyClass.UNKNOWN))

        if regime is PolicyClass.ON_POLICY and final < config.timesteps_on_policy:
            status = LintStatus.FAIL
            findings.append(f"{algorithm} trained {final} steps, on-policy requires {config.timesteps_on_policy}")
        elif regime is PolicyClass.OFF_POLICY and final < config.timesteps_off_policy:
            status = LintStatus.FAIL
            findings.append(f"{algorithm} trained {final} steps, off-policy requires {config.timesteps_off_policy}")
        elif regime is PolicyClass.UNKNOWN and final < config.timesteps_off_policy:
            if status is not LintStatus.FAIL:
                status = LintStatus.WARN
            findings.append(f"{algorithm} trained {final} steps, below both budgets "
                            f"({config.timesteps_off_policy} off-policy, {config.timesteps_on_policy} on-policy)")

    if findings:
        return status, "; ".join(findings)
    return LintStatus.PASS, "every algorithm reached its training budget"


def _absolute_present(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    missing = [f"{env}/{task}/{algorithm}/{run_id}" for env, task, algorithm, runs in iter_groups(log)
               for run_id, run in runs.items() if run.absolute is None]
    if missing:
        return LintStatus.FAIL, f"{len(missing)} runs without an absolute block (first: {missing[0]})"
    return LintStatus.PASS, "every run has an absolute block"


def _absolute_episode_count(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    blocks = 0
    for env, task, algorithm, runs in iter_groups(log):
        for run_id, run in runs.items():
            if run.absolute is None:
                continue
            blocks += 1
            for name, episodes in run.absolute.metrics.items():
                if len(episodes) != config.absolute_episodes:
                    return LintStatus.WARN, (f"found {len(episodes)} absolute episodes, protocol requires "
                                             f"{config.absolute_episodes} ({env}/{task}/{algorithm}/{run_id} {name})")
    if blocks == 0:
        return LintStatus.NOT_APPLICABLE, "no absolute blocks"
    return LintStatus.PASS, f"{config.absolute_episodes} episodes in every absolute block"


def _return_metric_present(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    if "return" not in log.metrics:
        return LintStatus.FAIL, "the \"return\" metric is not declared"
    return LintStatus.PASS, "\"return\" is declared and recorded at every interval"


def _confidence_level(log: ExperimentLog, config: ProtocolConfig, policy_class: Mapping) -> tuple:
    if config.ci_level != 0.95:
        return LintStatus.WARN, f"confidence level {config.ci_level}, protocol uses 0.95"
    return LintStatus.PASS, "95% confidence intervals"


## Check id -> implementation; keys match CHECK_REGISTRY.
CHECKS = {
    "multiple_environments": _multiple_environments,
    "multiple_tasks": _multiple_tasks,
    "runs_count": _runs_count,
    "eval_episode_count": _eval_episode_count,
    "eval_interval": _eval_interval,
    "training_duration": _training_duration,
    "absolute_present": _absolute_present,
    "absolute_episode_count": _absolute_episode_count,
    "return_metric_present": _return_metric_present,
    "confidence_level": _confidence_level,
}


def lint_protocol(log: ExperimentLog, config: ProtocolConfig = ProtocolConfig(),
                  policy_class: Optional[Mapping] = None) -> LintReport:
    """!
    Run every registered check.
    @param log ExperimentLog
    @param config ProtocolConfig Protocol thresholds.
    @param policy_class Mapping algorithm -> PolicyClass; algorithms default to unknown.
    @return LintReport
    """
    policy_class = dict(policy_class or {})
    checks = []
    for check_id, description in CHECK_REGISTRY.items():
        status, finding = CHECKS[check_id](log, config, policy_class)
        checks.append(LintCheck(check_id, description, status, finding))

    report = LintReport(tuple(checks))
    logger.info("Lint -> %s", ", ".join(f"{key} {value}" for key, value in report.summary.items()))
    return report


def load_policy_classes(document: Mapping) -> dict:
    """!
    Read an algorithm -> policy class map ("on_policy", "off_policy", "unknown").
    @param document Mapping parsed JSON object.
    @return dict algorithm -> PolicyClass
    """
    if not isinstance(document, Mapping):
        raise SchemaViolation("$", "expected an object mapping algorithm names to policy classes")
    classes = {}
    for algorithm, value in document.items():
        try:
            classes[algorithm] = PolicyClass(value)
        except ValueError:
            raise SchemaViolation(f"$.{algorithm}", f"unknown policy class {value!r}")
    return classes
