##
# @file SynthSpec.py
#
# @brief Description of a synthetic experiment: environments, algorithms with their
# per-task score models, and the protocol shape of the generated log.
#
# JSON example (configuration/synth_spec.json):
# {"environments": [{"name": "smac", "tasks": ["3m", "8m"]}],
#  "algorithms": [{"name": "qmix", "mean": 10.0, "std": 2.0, "curve": "saturating",
#                  "tasks": {"smac/8m": {"mean": 12.0, "std": 1.0}}}],
#  "runs": 10, "intervals": 201, "eval_interval": 10000, "eval_episodes": 32,
#  "absolute_episodes": 320, "seed": 42}
#
# @section libraries_SynthSpec Libraries/Modules
# - jsonschema (https://python-jsonschema.readthedocs.io)
#   - Structure of spec documents.
##

# Internal imports
from src.Errors import InvalidSpec, MalformedJson

# External imports
from dataclasses import dataclass, field
from jsonschema import Draft7Validator
from os.path import exists
from typing import Mapping
import json
import logging
import math

logger = logging.getLogger(__name__)

## Learning-curve shapes.
CURVES = ("linear", "saturating")

_MODEL_PROPERTIES = {"mean": {"type": "number"}, "std": {"type": "number", "minimum": 0}}

SYNTH_SPEC_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["environments", "algorithms"],
    "additionalProperties": False,
    "properties": {
        "environments": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "tasks"],
                "additionalProperties": False,
                "properties": {"name": {"type": "string"}, "tasks": {"type": "array", "items": {"type": "string"}}},
            },
        },
        "algorithms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name"],
                "additionalProperties": False,
                "properties": dict(_MODEL_PROPERTIES, **{
                    "name": {"type": "string"},
                    "curve": {"enum": list(CURVES)},
                    "tasks": {"type": "object", "additionalProperties": {
                        "type": "object", "additionalProperties": False, "properties": _MODEL_PROPERTIES}},
                }),
            },
        },
        "runs": {"type": "integer"},
        "intervals": {"type": "integer"},
        "eval_interval": {"type": "integer"},
        "eval_episodes": {"type": "integer"},
        "absolute_episodes": {"type": "integer"},
        "seed": {"type": "integer"},
    },
}


@dataclass(frozen=True)
class ScoreModel:
    """!
    Normal(mean, std) episode returns at the end of training.
    """

    mean: float = 1.0
    std: float = 0.1

    def __post_init__(self) -> None:
        if not (math.isfinite(self.mean) and math.isfinite(self.std)):
            raise InvalidSpec("score_model", "mean and std must be finite")
        if self.std < 0:
            raise InvalidSpec("score_model.std", "std must be non-negative")


@dataclass(frozen=True)
class SynthAlgorithm:
    """!
    One algorithm: a default score model, per-task overrides keyed by "env/task" or task name,
    and the shape of its learning curve.
    """

    name: str
    model: ScoreModel = ScoreModel()
    curve: str = "saturating"
    tasks: Mapping[str, ScoreModel] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not self.name:
            raise InvalidSpec("algorithms.name", "algorithm names must be non-empty")
        if self.curve not in CURVES:
            raise InvalidSpec(f"algorithms.{self.name}.curve", f"curve must be one of {', '.join(CURVES)}")

    def model_for(self, env: str, task: str) -> ScoreModel:
        return self.tasks.get(f"{env}/{task}", self.tasks.get(task, self.model))


@dataclass(frozen=True)
class SynthSpec:
    """!
    environments: ((name, (task, ...)), ...). Protocol-shaped defaults: 10 runs, 201 intervals
    every 10000 steps (final step 2,000,000), 32 episodes per interval and 320 absolute episodes.
    """

    environments: tuple
    algorithms: tuple
    runs: int = 10
    intervals: int = 201
    eval_interval: int = 10_000
    eval_episodes: int = 32
    absolute_episodes: int = 320
    seed: int = 42

    def __post_init__(self) -> None:
        environments = tuple((name, tuple(tasks)) for name, tasks in self.environments)
        object.__setattr__(self, "environments", environments)
        object.__setattr__(self, "algorithms", tuple(self.algorithms))

        for name in ("runs", "intervals", "eval_interval", "eval_episodes", "absolute_episodes"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise InvalidSpec(name, "must be a positive integer")
        if len(environments) == 0 or any(len(tasks) == 0 for _, tasks in environments):
            raise InvalidSpec("environments", "at least one environment with at least one task is required")
        if len({name for name, _ in environments}) != len(environments):
            raise InvalidSpec("environments", "environment names must be unique")
        if any(len(set(tasks)) != len(tasks) or not all(tasks) for _, tasks in environments):
            raise InvalidSpec("environments", "task names must be unique and non-empty per environment")
        if len(self.algorithms) == 0:
            raise InvalidSpec("algorithms", "at least one algorithm is required")
        if len({algorithm.name for algorithm in self.algorithms}) != len(self.algorithms):
            raise InvalidSpec("algorithms", "algorithm names must be unique")

    @property
    def final_step(self) -> int:
        return self.eval_interval * (self.intervals - 1)


def synth_spec_from_dict(document: Mapping) -> SynthSpec:
    errors = sorted(Draft7Validator(SYNTH_SPEC_SCHEMA).iter_errors(document), key=lambda e: len(e.absolute_path))
    if errors:
        path = "$" + "".join(f"[{p}]" if isinstance(p, int) else f".{p}" for p in errors[0].absolute_path)
        raise InvalidSpec(path, errors[0].message)

    algorithms = []
    for entry in document["algorithms"]:
        default = ScoreModel(float(entry.get("mean", 1.0)), float(entry.get("std", 0.1)))
        overrides = {key: ScoreModel(float(model.get("mean", default.mean)), float(model.get("std", default.std)))
                     for key, model in entry.get("tasks", {}).items()}
        algorithms.append(SynthAlgorithm(entry["name"], default, entry.get("curve", "saturating"), overrides))

    options = {key: document[key] for key in ("runs", "intervals", "eval_interval", "eval_episodes",
                                               "absolute_episodes", "seed") if key in document}
    return SynthSpec([(entry["name"], entry["tasks"]) for entry in document["environments"]], algorithms, **options)


def load_synth_spec(filepath: str) -> SynthSpec:
    if not exists(filepath):
        raise FileNotFoundError(f"no such file: {filepath}")

    with open(filepath, "r", encoding="utf-8") as spec_file:
        try:
            document = json.load(spec_file)
        except json.JSONDecodeError as error:
            raise MalformedJson("$", f"line {error.lineno} column {error.colno}: {error.msg}")

    spec = synth_spec_from_dict(document)
    logger.info("Loaded synthetic spec -> %s", filepath)
    logger.info("    Environments -> %s", ", ".join(name for name, _ in spec.environments))
    logger.info("    Algorithms   -> %s", ", ".join(algorithm.name for algorithm in spec.algorithms))
    return spec
