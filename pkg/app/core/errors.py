"""Error taxonomy shared by the interpolation kernels, the harness and the CLI.

ValueError subclasses describe bad input (CLI exit code 1); ArithmeticError
subclasses describe numerical failures (CLI exit code 2).
"""


class InterpolationError(Exception):
    pass


class InvalidDegreeError(InterpolationError, ValueError):
    pass


class DomainError(InterpolationError, ValueError):
    pass


class InvalidIntervalError(InterpolationError, ValueError):
    pass


class InvalidKindError(InterpolationError, ValueError):
    pass


class DegenerateNodesError(InterpolationError, ValueError):
    pass


class WrongNodeFamilyError(InterpolationError, ValueError):
    pass


class InvalidBenchmarkError(InterpolationError, ValueError):
    pass


class InvalidRangeError(InterpolationError, ValueError):
    pass


class NonfiniteWeightError(InterpolationError, ArithmeticError):
    pass


class NotReachedError(InterpolationError, ArithmeticError):
    def __init__(self, message: str, best_error: float, n_max: int):
        super().__init__(message)
        self.best_error = best_error
        self.n_max = n_max


class DataFileError(InterpolationError, ValueError):
    pass
