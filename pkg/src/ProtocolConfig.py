##
# @file ProtocolConfig.py
#
# @brief Evaluation protocol parameters with the standardised defaults.
# A protocol config can be loaded from a .JSON file whose keys mirror the field names.
#
# @section libraries_ProtocolConfig Libraries/Modules
# - json standard library
#   - Reading protocol config files.
# - logging standard library
#   - Report which file was loaded.
##

# Internal imports
from src.Errors import InvariantViolation, SchemaViolation

# External imports
from dataclasses import dataclass, asdict, fields
from os.path import exists
import json
import logging

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProtocolConfig:
    """!
    Evaluation protocol parameters.
    Defaults: train off-policy algorithms for 2M timesteps (on-policy 10x longer),
    R = 10 independent runs, E = 32 evaluation episodes every 10000 timesteps
    and an absolute metric over 10 x E = 320 episodes, reported with 95% CIs.
    """

    ## Training budget of off-policy algorithms (timesteps).
    timesteps_off_policy: int = 2_000_000

    ## Training budget of on-policy algorithms (timesteps).
    timesteps_on_policy: int = 20_000_000

    ## Independent training runs per (task, algorithm).
    runs: int = 10

    ## Evaluation episodes per interval (E).
    eval_episodes: int = 32

    ## Timesteps between two evaluation intervals.
    eval_interval: int = 10_000

    ## Episodes of the absolute metric.
    absolute_episodes: int = 320

    ## Confidence level of every interval estimate.
    ci_level: float = 0.95

    ## Bootstrap replicates.
    bootstrap_replicates: int = 2000

    ## Optimality-gap threshold.
    gamma: float = 1.0

    ## Seed of every randomised computation.
    seed: int = 42

    def __post_init__(self) -> None:
        for name in ("timesteps_off_policy", "timesteps_on_policy", "runs", "eval_episodes",
                     "eval_interval", "absolute_episodes", "bootstrap_replicates"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value <= 0:
                raise InvariantViolation(name, "must be a positive integer")
        if isinstance(self.seed, bool) or not isinstance(self.seed, int):
            raise InvariantViolation("seed", "must be an integer")
        if not 0.0 < float(self.ci_level) < 1.0:
            raise InvariantViolation("ci_level", "must lie in (0, 1)")
        object.__setattr__(self, "ci_level", float(self.ci_level))
        object.__setattr__(self, "gamma", float(self.gamma))

    def to_dict(self) -> dict:
        return asdict(self)


def protocol_config_from_dict(document: dict, source: str = "$") -> ProtocolConfig:
    """!
    Build a ProtocolConfig from a JSON object; missing keys keep their defaults.
    @param document dict Parsed JSON object.
    @param source str Path prefix used in error messages.
    @return ProtocolConfig
    """
    if not isinstance(document, dict):
        raise SchemaViolation(source, "protocol config must be a JSON object")

    known = {f.name: f.type for f in fields(ProtocolConfig)}
    values = {}
    for key, value in document.items():
        if key not in known:
            raise SchemaViolation(f"{source}.{key}", "unknown protocol config key")
        expected = float if known[key] is float else int
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise SchemaViolation(f"{source}.{key}", "expected a number")
        if expected is int and not float(value).is_integer():
            raise SchemaViolation(f"{source}.{key}", "expected an integer")
        values[key] = expected(value)

    try:
        return ProtocolConfig(**values)
    except InvariantViolation as error:
        raise error.prefixed(source)


def load_protocol_config(filepath: str) -> ProtocolConfig:
    """!
    Take in a filepath to a .JSON file and load the protocol config.
    @param filepath str Path to the .JSON protocol config.
    @return ProtocolConfig
    """
    if not exists(filepath):
        raise FileNotFoundError(f"no such file: {filepath}")

    with open(filepath, encoding="utf-8") as json_file:
        try:
            document = json.load(json_file)
        except json.JSONDecodeError as error:
            raise SchemaViolation(filepath, f"invalid JSON: {error}")

    config = protocol_config_from_dict(document)
    logger.info("Loaded protocol config file -> %s", filepath)
    logger.info("    Runs          -> %d", config.runs)
    logger.info("    Eval episodes -> %d", config.eval_episodes)
    logger.info("    Eval interval -> %d", config.eval_interval)
    return config
