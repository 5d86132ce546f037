"""Exception types raised across the package."""


class FuzzyNumberError(ValueError):
    """Invalid fuzzy-number input (bad breakpoints, inverted core, ...)."""


class DegenerateInputError(ValueError):
    """A coefficient is undefined for the given input, e.g. VB13 on a crisp number."""


class InfeasibleError(RuntimeError):
    """No mesh point satisfies the portfolio thresholds."""

    def __init__(self, message: str, evaluated_points: int, elapsed: float = 0.0):
        super().__init__(message)
        self.evaluated_points = evaluated_points
        self.elapsed = elapsed


class AssetFileError(ValueError):
    """An asset file could not be parsed; ``location`` points at the offending field."""

    def __init__(self, message: str, location: str = ""):
        super().__init__(f"{location}: {message}" if location else message)
        self.location = location
