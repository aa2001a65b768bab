##
# @file Errors.py
#
# @brief Exception hierarchy shared by every part of the evaluation toolkit.
# Every error carries the path (JSON path, flag or identifier) that caused it.
#
# @section libraries_Errors Libraries/Modules
# - None
##


class EvaluationError(Exception):
    """!
    Base class of all toolkit errors.
    """

    def __init__(self, path: str, message: str) -> None:
        """!
        Constructor.
        @param path str JSON path, flag or identifier at fault.
        @param message str Human readable description.
        """
        super().__init__(f"{path}: {message}" if path else message)

        ## Location of the offending value.
        self.path: str = path

        ## Description without the path prefix.
        self.message: str = message

    def prefixed(self, prefix: str) -> "EvaluationError":
        """!
        Return a copy of this error anchored below the given path.
        @param prefix str Path of the enclosing document node.
        @return EvaluationError of the same type.
        """
        if not self.path:
            path = prefix
        elif self.path.startswith("["):
            path = prefix + self.path
        else:
            path = prefix + "." + self.path
        return type(self)(path, self.message)


class MalformedJson(EvaluationError):
    pass


class SchemaViolation(EvaluationError):
    pass


class InvariantViolation(EvaluationError):
    pass


class DuplicateRun(EvaluationError):
    pass


class UnknownMetric(EvaluationError):
    pass


class UnknownTask(EvaluationError):
    pass


class UnknownAlgorithm(EvaluationError):
    pass


class MissingAbsolute(EvaluationError):
    pass


class EmptyPool(EvaluationError):
    pass


class RaggedRuns(EvaluationError):
    pass


class EmptyInput(EvaluationError):
    pass


class TaskListMismatch(EvaluationError):
    pass


class StepGridMismatch(EvaluationError):
    pass


class MixedCurveKinds(EvaluationError):
    pass


class InvalidSpec(EvaluationError):
    pass


class ClampWarning(UserWarning):
    """!
    A value outside its task bounds was clamped into [0, 1].
    """


class DegenerateBoundsWarning(UserWarning):
    """!
    Task bounds with max == min; normalised values collapse to 0.0.
    """
