##
# @file SyntheticLogGenerator.py
#
# @brief Generates protocol-shaped experiment logs from a SynthSpec.
# Episode returns are Normal around a monotone learning curve that ends at the task mean;
# absolute blocks are drawn around the final mean. Every (env, task, algorithm) group
# has its own generator seeded from the spec seed and the group identifiers.
#
# @section libraries_SyntheticLogGenerator Libraries/Modules
# - numpy (https://numpy.org)
#   - Seeded normal draws.
##

# Internal imports
from src.aggregate.StratifiedBootstrap import derive_stream_key
from src.model.ExperimentLog import ExperimentLog
from src.model.components.AbsoluteRecord import AbsoluteRecord
from src.model.components.IntervalRecord import IntervalRecord
from src.model.components.MetricDescriptor import RETURN_DESCRIPTOR
from src.model.components.RunRecord import RunRecord
from src.synth.SynthSpec import ScoreModel, SynthSpec

# External imports
import logging
import numpy as np

logger = logging.getLogger(__name__)

## Rate of the saturating learning curve.
SATURATION_RATE: float = 5.0


def curve_fraction(curve: str, progress: np.ndarray) -> np.ndarray:
    """!
    Fraction of the final mean reached at each training progress value in [0, 1].
    linear: p; saturating: (1 - exp(-5p)) / (1 - exp(-5)).
    """
    if curve == "linear":
        return progress
    return (1.0 - np.exp(-SATURATION_RATE * progress)) / (1.0 - np.exp(-SATURATION_RATE))


def _draw(rng: np.random.Generator, mean: float, model: ScoreModel, size: int) -> list:
    if model.std == 0:
        return np.full(size, mean).tolist()
    return rng.normal(mean, model.std, size).tolist()


def generate_synthetic_log(spec: SynthSpec) -> ExperimentLog:
    """!
    Generate a log with the shape described by the spec. Deterministic for a fixed seed.
    @param spec SynthSpec
    @return ExperimentLog
    """
    steps = spec.eval_interval * np.arange(spec.intervals)
    progress = np.arange(spec.intervals) / (spec.intervals - 1) if spec.intervals > 1 else np.ones(1)

    environments = {}
    for env, tasks in spec.environments:
        for task in tasks:
            for algorithm in spec.algorithms:
                model = algorithm.model_for(env, task)
                means = model.mean * curve_fraction(algorithm.curve, progress)
                rng = np.random.default_rng(derive_stream_key(spec.seed, "synth", env, task, algorithm.name))

                runs = {}
                for k in range(spec.runs):
                    intervals = [IntervalRecord(int(step), {"return": _draw(rng, float(mean), model, spec.eval_episodes)})
                                 for step, mean in zip(steps, means)]
                    absolute = AbsoluteRecord({"return": _draw(rng, model.mean, model, spec.absolute_episodes)})
                    runs[f"seed_{k}"] = RunRecord(tuple(intervals), absolute)
                environments.setdefault(env, {}).setdefault(task, {})[algorithm.name] = runs

    logger.info("Generated synthetic log -> %d groups, seed %d",
                sum(len(tasks) for _, tasks in spec.environments) * len(spec.algorithms), spec.seed)
    return ExperimentLog(environments, {"return": RETURN_DESCRIPTOR},
                         {"generator": "synthetic", "seed": str(spec.seed)})
