##
# @file Oracles.py
#
# @brief Brute-force reference implementations for differential testing.
# They share no code with the statistics they check.
##

# Internal imports
from src.Errors import EmptyInput, TaskListMismatch

# External imports
import math


def _pairwise_sum(values: list) -> float:
    if len(values) <= 8:
        total = 0.0
        for value in values:
            total += value
        return total
    middle = len(values) // 2
    return _pairwise_sum(values[:middle]) + _pairwise_sum(values[middle:])


def oracle_iqm(scores) -> float:
    """!
    Interquartile mean by explicit slicing: sort, drop n // 4 values per tail, pairwise-sum the rest.
    @param scores Sequence[float]
    @return float
    """
    ordered = sorted(float(score) for score in scores)
    if len(ordered) == 0:
        raise EmptyInput("scores", "at least one score is required")
    k = len(ordered) // 4
    kept = ordered[k:len(ordered) - k]
    return _pairwise_sum(kept) / len(kept)


def oracle_probability_of_improvement(x_columns, y_columns) -> float:
    """!
    Probability of improvement by enumerating every (x_i, y_j) pair of every task.
    @param x_columns Sequence[Sequence[float]] One list of run scores per task.
    @param y_columns Sequence[Sequence[float]]
    @return float
    """
    x_columns = [list(column) for column in x_columns]
    y_columns = [list(column) for column in y_columns]
    if len(x_columns) != len(y_columns):
        raise TaskListMismatch("tasks", f"{len(x_columns)} tasks against {len(y_columns)}")
    if len(x_columns) == 0:
        raise EmptyInput("tasks", "at least one task is required")

    per_task = []
    for x_column, y_column in zip(x_columns, y_columns):
        if len(x_column) == 0 or len(y_column) == 0:
            raise EmptyInput("tasks", "every task needs at least one run")
        wins = 0.0
        for x in x_column:
            for y in y_column:
                if x > y:
                    wins += 1.0
                elif x == y:
                    wins += 0.5
        per_task.append(wins / (len(x_column) * len(y_column)))
    return math.fsum(per_task) / len(per_task)
