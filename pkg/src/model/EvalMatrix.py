##
# @file EvalMatrix.py
#
# @brief R x M matrix (runs x tasks) of scores for one algorithm and one metric.
# This is the unit on which all aggregate statistics and bootstrap resampling operate.
#
# @section libraries_EvalMatrix Libraries/Modules
# - numpy (https://numpy.org)
#   - Read-only score storage.
##

# Internal imports
from src.Errors import InvariantViolation

# External imports
from dataclasses import dataclass
import numpy as np

## Tolerance for the [0, 1] check of normalised matrices.
NORMALISED_TOLERANCE: float = 1e-9


@dataclass(frozen=True, eq=False)
class EvalMatrix:
    """!
    R x M matrix of scores, column t belongs to tasks[t] = (env, task).
    """

    algorithm: str
    metric: str
    tasks: tuple
    values: np.ndarray
    normalised: bool = True

    def __post_init__(self) -> None:
        tasks = tuple((str(env), str(task)) for env, task in self.tasks)
        values = np.array(self.values, dtype=np.float64)
        if values.ndim != 2:
            raise InvariantViolation("values", "the evaluation matrix must be two dimensional (runs x tasks)")
        if values.shape[1] != len(tasks):
            raise InvariantViolation("values", f"matrix has {values.shape[1]} columns but {len(tasks)} tasks are listed")
        if len(set(tasks)) != len(tasks):
            raise InvariantViolation("tasks", "tasks must be unique")
        if not np.all(np.isfinite(values)):
            raise InvariantViolation("values", "matrix entries must be finite")
        if self.normalised and values.size > 0:
            if values.min() < -NORMALISED_TOLERANCE or values.max() > 1.0 + NORMALISED_TOLERANCE:
                raise InvariantViolation("values", "normalised matrix entries must lie in [0, 1]")

        values.setflags(write=False)
        object.__setattr__(self, "tasks", tasks)
        object.__setattr__(self, "values", values)

    @property
    def runs(self) -> int:
        return self.values.shape[0]

    @property
    def shape(self) -> tuple:
        return self.values.shape

    def column(self, index: int) -> np.ndarray:
        """!
        Return the scores of one task.
        @param index int Task index.
        @return np.ndarray
        """
        return self.values[:, index]

    def task_labels(self) -> list:
        return [f"{env}/{task}" for env, task in self.tasks]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EvalMatrix):
            return NotImplemented
        return (self.algorithm == other.algorithm and self.metric == other.metric and
                self.tasks == other.tasks and self.normalised == other.normalised and
                np.array_equal(self.values, other.values))
