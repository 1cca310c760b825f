"""Exception types shared across the package."""


class BipIntervalError(Exception):
    pass


class InvalidArgument(BipIntervalError, ValueError):
    pass


class ParseError(BipIntervalError, ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GenerationFailed(BipIntervalError, RuntimeError):
    pass


class PreconditionFailed(BipIntervalError, ValueError):
    pass


class ConstructionFailed(BipIntervalError, RuntimeError):
    pass


class OutOfRange(BipIntervalError, ValueError):
    pass


class BudgetExceeded(BipIntervalError, RuntimeError):
    """Search gave up before reaching a verdict.

    ``stats`` holds whatever counters the search had accumulated; ``bracket``
    is set by callers that know a (lower, upper) interval for the answer.
    """

    def __init__(self, message, stats=None, bracket=None):
        super().__init__(message)
        self.stats = dict(stats or {})
        self.bracket = bracket
