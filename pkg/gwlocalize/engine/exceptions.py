class LocalizationError(Exception):
    """Base class for every failure raised by the engine."""


class InvalidInput(LocalizationError, ValueError):
    pass


class NonGenericWeights(LocalizationError, ZeroDivisionError):
    """A zero weight showed up where an Euler class had to be inverted."""

    def __init__(self, message, seed=None):
        super().__init__(message)
        self.seed = seed


class UnsupportedInsertions(LocalizationError, NotImplementedError):
    pass


class WeightDependence(LocalizationError):
    """Evaluations at different weight assignments disagreed."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
