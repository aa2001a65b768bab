##
# @file LogValidator.py
#
# @brief Soft checks of an ExperimentLog against a ProtocolConfig.
# Findings are collected in a ValidationReport; nothing here raises.
##

# Internal imports
from src.ProtocolConfig import ProtocolConfig
from src.model.ExperimentLog import ExperimentLog, iter_groups

# External imports
from dataclasses import dataclass


@dataclass(frozen=True)
class ValidationReport:
    """!
    errors and warnings are ordered (json_path, message) pairs.
    """

    errors: tuple = ()
    warnings: tuple = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "errors", tuple(tuple(item) for item in self.errors))
        object.__setattr__(self, "warnings", tuple(tuple(item) for item in self.warnings))

    @property
    def is_valid(self) -> bool:
        return len(self.errors) == 0

    def to_dict(self) -> dict:
        return {
            "is_valid": self.is_valid,
            "errors": [{"path": path, "message": message} for path, message in self.errors],
            "warnings": [{"path": path, "message": message} for path, message in self.warnings],
        }

    def to_text(self) -> str:
        lines = [f"valid: {'yes' if self.is_valid else 'no'} "
                 f"({len(self.errors)} errors, {len(self.warnings)} warnings)"]
        lines += [f"error   {path}: {message}" for path, message in self.errors]
        lines += [f"warning {path}: {message}" for path, message in self.warnings]
        return "\n".join(lines) + "\n"


def validate_log(log: ExperimentLog, config: ProtocolConfig = ProtocolConfig()) -> ValidationReport:
    """!
    Soft-validate a log: episode counts, absolute blocks and metric-name consistency.
    @param log ExperimentLog
    @param config ProtocolConfig Expected episode counts.
    @return ValidationReport
    """
    errors = []
    warnings = []

    if "return" not in log.metrics:
        errors.append(("$.metrics", "the \"return\" metric descriptor is not declared"))

    for env, task, algorithm, runs in iter_groups(log):
        group_path = f"$.environments.{env}.{task}.{algorithm}"
        reference = {}

        for run_id, run in runs.items():
            run_path = f"{group_path}.{run_id}"
            for i, interval in enumerate(run.intervals):
                path = f"{run_path}.intervals[{i}]"
                if interval.episode_count != config.eval_episodes:
                    warnings.append((path, f"episode count {interval.episode_count} ≠ {config.eval_episodes}"))

                names = tuple(sorted(interval.metrics))
                if i not in reference:
                    reference[i] = (run_id, names)
                elif reference[i][1] != names:
                    warnings.append((f"{path}.metrics",
                                     f"metric names {list(names)} differ from run {reference[i][0]} "
                                     f"{list(reference[i][1])}"))

            if run.absolute is None:
                warnings.append((run_path,
                                 "missing absolute block: the absolute metric needs "
                                 f"{config.absolute_episodes} episodes of the best joint policy"))
                continue
            for name, episodes in run.absolute.metrics.items():
                if len(episodes) != config.absolute_episodes:
                    warnings.append((f"{run_path}.absolute.metrics.{name}",
                                     f"absolute episode count {len(episodes)} ≠ {config.absolute_episodes}"))

    return ValidationReport(errors, warnings)
