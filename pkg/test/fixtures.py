##
# @file fixtures.py
#
# @brief Small builders for experiment logs used across the unit tests.
##

# Internal imports
from src.model.ExperimentLog import ExperimentLog
from src.model.components.AbsoluteRecord import AbsoluteRecord
from src.model.components.IntervalRecord import IntervalRecord
from src.model.components.MetricDescriptor import RETURN_DESCRIPTOR
from src.model.components.RunRecord import RunRecord

# External imports
import numpy as np


def make_run(interval_returns: list, absolute_returns: list = None, steps: list = None,
             eval_interval: int = 10_000) -> RunRecord:
    """
    Build a run from one episode list per interval and an optional absolute episode list.
    """
    steps = steps if steps is not None else [eval_interval * i for i in range(len(interval_returns))]
    intervals = tuple(IntervalRecord(step, {"return": list(returns)}) for step, returns in zip(steps, interval_returns))
    absolute = AbsoluteRecord({"return": list(absolute_returns)}) if absolute_returns is not None else None
    return RunRecord(intervals, absolute)


def absolute_run(value: float, steps: list = None) -> RunRecord:
    """
    Run with a single interval at step 0 and a one-episode absolute block.
    """
    steps = steps or [0]
    return make_run([[value]] * len(steps), [value], steps)


def make_log(groups: dict, metrics: dict = None, metadata: dict = None) -> ExperimentLog:
    """
    groups: (env, task, algorithm) -> list of RunRecord (ids run_00, run_01, ...) or run_id -> RunRecord.
    """
    environments = {}
    for (env, task, algorithm), runs in groups.items():
        if not isinstance(runs, dict):
            runs = {f"run_{i:02d}": run for i, run in enumerate(runs)}
        environments.setdefault(env, {}).setdefault(task, {})[algorithm] = runs
    return ExperimentLog(environments, metrics if metrics is not None else {"return": RETURN_DESCRIPTOR}, metadata or {})


def random_log(rng: np.random.Generator, scale: float = 10.0) -> ExperimentLog:
    """
    Random log: 1-2 environments, 1-3 tasks each, 1-3 algorithms, 1-4 runs, 1-4 intervals,
    1-5 episodes and an absolute block on every run.
    """
    algorithms = [f"alg_{a}" for a in range(rng.integers(1, 4))]
    runs = int(rng.integers(1, 5))
    intervals = int(rng.integers(1, 5))
    episodes = int(rng.integers(1, 6))

    groups = {}
    for e in range(rng.integers(1, 3)):
        for t in range(rng.integers(1, 4)):
            for algorithm in algorithms:
                groups[(f"env_{e}", f"task_{t}", algorithm)] = [
                    make_run([rng.normal(0.0, scale, episodes).tolist() for _ in range(intervals)],
                             rng.normal(0.0, scale, 2 * episodes).tolist())
                    for _ in range(runs)
                ]
    return make_log(groups, metadata={"framework": "fixture"})
