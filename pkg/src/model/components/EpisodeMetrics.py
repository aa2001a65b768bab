##
# @file EpisodeMetrics.py
#
# @brief Validation and freezing of "metric name -> per-episode values" maps.
# Shared by IntervalRecord and AbsoluteRecord.
#
# @section libraries_EpisodeMetrics Libraries/Modules
# - math standard library
#   - isfinite checks on episode values.
##

# Internal imports
from src.Errors import InvariantViolation

# External imports
from types import MappingProxyType
from typing import Mapping, Sequence
import math


def freeze_episode_metrics(metrics: Mapping[str, Sequence[float]], equal_length: bool = True) -> Mapping[str, tuple]:
    """!
    Validate a metric map and return a read-only copy with tuple values.
    Paths in raised errors are relative to the record ("metrics.<name>[i]").
    @param metrics Mapping[str, Sequence[float]]
    @param equal_length bool Require every list to have the same length.
    @return read-only Mapping[str, tuple[float, ...]]
    """
    if not isinstance(metrics, Mapping):
        raise InvariantViolation("metrics", "metrics must be a mapping of metric name to episode values")

    frozen = {}
    length = None
    for name, values in metrics.items():
        if not isinstance(name, str) or not name:
            raise InvariantViolation("metrics", "metric names must be non-empty strings")

        path = "metrics." + name
        if isinstance(values, (str, bytes)) or not isinstance(values, Sequence):
            raise InvariantViolation(path, "episode values must be a list of numbers")
        if len(values) == 0:
            raise InvariantViolation(path, "metric lists must be non-empty")

        episodes = []
        for i, value in enumerate(values):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise InvariantViolation(f"{path}[{i}]", "episode value must be a number")
            value = float(value)
            if not math.isfinite(value):
                raise InvariantViolation(f"{path}[{i}]", "episode value must be finite")
            episodes.append(value)

        if equal_length and length is not None and len(episodes) != length:
            raise InvariantViolation(path, f"all metric lists at one record must have equal length ({len(episodes)} != {length})")
        length = len(episodes)
        frozen[name] = tuple(episodes)

    return MappingProxyType(frozen)
