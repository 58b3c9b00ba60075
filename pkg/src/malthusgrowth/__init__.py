"""Two-sector Malthusian growth model with endogenous fertility and land-supply shocks."""

from .calibration import BASELINE, CalibrationInput, build_parameters, validate
from .equilibrium import RootFindConfig, advance, malthus_map, malthusian_fertility_root, solve_period
from .errors import (
    ConfigError,
    DomainError,
    InvariantError,
    ModelError,
    SimulationError,
    SolverError,
    StarvationSignal,
)
from .model import EconomyState, Parameters, PeriodOutcome, Regime
from .scenario import (
    ShockEvent,
    ShockSchedule,
    Trajectory,
    compare_economies,
    equivalent_population_shock,
    growth_statistics,
    simulate,
)
from .steady_state import SteadyStateReport, steady_state_report

__version__ = "0.1.0"

__all__ = [
    "BASELINE",
    "CalibrationInput",
    "ConfigError",
    "DomainError",
    "EconomyState",
    "InvariantError",
    "ModelError",
    "Parameters",
    "PeriodOutcome",
    "Regime",
    "RootFindConfig",
    "ShockEvent",
    "ShockSchedule",
    "SimulationError",
    "SolverError",
    "StarvationSignal",
    "SteadyStateReport",
    "Trajectory",
    "advance",
    "build_parameters",
    "compare_economies",
    "equivalent_population_shock",
    "growth_statistics",
    "malthus_map",
    "malthusian_fertility_root",
    "simulate",
    "solve_period",
    "steady_state_report",
    "validate",
]
