##
# @file Datatypes.py
#
# @brief Small enumerations shared between the model, the statistics and the reports.
##

# External imports
from enum import Enum


## Which samples define the min/max of a task.
class Pooling(str, Enum):
    ABSOLUTE_ONLY = "absolute_only"
    INTERVALS_ONLY = "intervals_only"
    GLOBAL = "global"


## Point statistics over pooled scores.
class Statistic(str, Enum):
    IQM = "iqm"
    MEAN = "mean"
    MEDIAN = "median"
    OPTIMALITY_GAP = "optimality_gap"


## How a confidence interval was obtained.
class CIMethod(str, Enum):
    NORMAL = "normal"
    STRATIFIED_BOOTSTRAP = "stratified_bootstrap"
    DEGENERATE = "degenerate"


## Sampled curve families.
class CurveKind(str, Enum):
    PERFORMANCE_PROFILE = "performance_profile"
    SAMPLE_EFFICIENCY = "sample_efficiency"
    INTERVAL_SERIES = "interval_series"


## Outcome of a single protocol check.
class LintStatus(str, Enum):
    PASS = "pass"
    WARN = "warn"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


## Training regime of an algorithm, decides the training budget.
class PolicyClass(str, Enum):
    ON_POLICY = "on_policy"
    OFF_POLICY = "off_policy"
    UNKNOWN = "unknown"


## Text formats of rendered tables and report cards.
class TableFormat(str, Enum):
    MARKDOWN = "markdown"
    LATEX = "latex"
