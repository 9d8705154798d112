"""Exception types shared across the package."""


class RCAbstractError(Exception):
    """Base class for all package errors."""


class ContractViolationError(RCAbstractError, ValueError):
    """An argument violated an operation's precondition (shape, sign, range)."""


class DivergenceError(RCAbstractError, RuntimeError):
    """A simulated state blew up or became non-finite.

    step_index is the integration step at which the guard fired; context
    carries optional extra information (e.g. the shift value of the
    offending training segment).
    """

    def __init__(self, message: str, step_index: int, context: dict | None = None):
        super().__init__(message)
        self.step_index = step_index
        self.context = context or {}


class NumericalFailureError(RCAbstractError, RuntimeError):
    """An iterative numerical procedure failed; carries the last estimate."""

    def __init__(self, message: str, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class DegenerateBasisError(NumericalFailureError):
    """Gram-Schmidt hit a numerically dependent vector; index is 1-based."""

    def __init__(self, message: str, index: int):
        super().__init__(message)
        self.index = index


class RankDeficiencyError(RCAbstractError, RuntimeError):
    """The readout normal matrix is singular; regularize with beta > 0."""


class ConfigError(RCAbstractError, ValueError):
    """A run configuration is malformed (unknown key, bad value, bad type)."""
