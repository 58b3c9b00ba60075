"""Exception hierarchy shared by the model, solvers and the command line."""


class ModelError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ModelError, ValueError):
    """An argument lies outside the domain where a formula is defined."""


class StarvationSignal(ModelError):
    """Subsistence pressure is at or above one: the population cannot be fed."""


class SolverError(ModelError, ArithmeticError):
    """A numerical root search failed to bracket or converge."""


class InvariantError(ModelError, AssertionError):
    """A solved equilibrium violates one of its accounting identities."""


class ConfigError(ModelError, ValueError):
    """A run configuration or calibration could not be accepted."""


class SimulationError(ModelError):
    """Wraps a failure raised while solving a given period of a simulation."""

    def __init__(self, period, cause):
        self.period = period
        self.cause = cause
        super().__init__(f"period {period}: {type(cause).__name__}: {cause}")
