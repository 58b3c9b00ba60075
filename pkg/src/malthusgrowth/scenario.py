"""Multi-period simulations with timed land and population shocks."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .equilibrium import DEFAULT_ROOT_CONFIG, advance, solve_period
from .errors import DomainError, ModelError, SimulationError

DEFAULT_BASE_YEAR = 1500


@dataclass(frozen=True)
class ShockEvent:
    period: int
    land_multiplier: float = 1.0
    population_multiplier: float = 1.0


@dataclass(frozen=True)
class ShockSchedule:
    """Multiplicative shocks applied at the start of the listed periods."""

    events: tuple = ()

    def __post_init__(self):
        events = tuple(self.events)
        object.__setattr__(self, "events", events)
        last = -1
        for e in events:
            if e.period <= last:
                raise DomainError(f"shock periods must be strictly increasing, got {e.period} after {last}")
            if not (e.land_multiplier > 0 and e.population_multiplier > 0):
                raise DomainError(f"shock multipliers must be positive: {e}")
            last = e.period

    @classmethod
    def land_shock(cls, period, multiplier):
        return cls((ShockEvent(period, land_multiplier=multiplier),))

    @classmethod
    def population_shock(cls, period, multiplier):
        return cls((ShockEvent(period, population_multiplier=multiplier),))

    def at(self, t):
        for e in self.events:
            if e.period == t:
                return e
        return None


@dataclass(frozen=True)
class TrajectoryRow:
    pre_shock: object  # EconomyState at the start of the period
    shock: object  # ShockEvent or None
    state: object  # EconomyState actually solved
    outcome: object  # PeriodOutcome


@dataclass
class Trajectory:
    """Solved periods of one simulation plus the normalized series used for plots.

    ``halted`` is true when a starvation period drove the population to zero
    before the requested horizon.
    """

    rows: list
    years_per_period: float = 25.0
    base_year: int = DEFAULT_BASE_YEAR
    halted: bool = False
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __len__(self):
        return len(self.rows)

    def _series(self, name, fn):
        if name not in self._cache:
            self._cache[name] = np.array([fn(r) for r in self.rows], dtype=float)
        return self._cache[name]

    @property
    def t(self):
        return np.array([r.state.t for r in self.rows], dtype=int)

    @property
    def year(self):
        return self.base_year + self.years_per_period * self.t

    @property
    def regimes(self):
        return [r.outcome.regime for r in self.rows]

    @property
    def population(self):
        return self._series("N", lambda r: r.state.n_pop)

    @property
    def fertility(self):
        return self._series("n", lambda r: r.outcome.n_fert)

    @property
    def income(self):
        return self._series("y", lambda r: r.outcome.income)

    @property
    def intermediates_pc(self):
        return self._series("x", lambda r: r.outcome.x_int / r.state.n_pop)

    @property
    def ell_a_emp(self):
        return self._series("ell_emp", lambda r: r.outcome.ell_a_emp)

    @property
    def ell_a_pc(self):
        return self._series("ell_pc", lambda r: r.outcome.ell_a_pc)

    @property
    def income_index(self):
        return self.income / self.income[0]

    @property
    def intermediates_index(self):
        return self.intermediates_pc / self.intermediates_pc[0]

    @property
    def population_index(self):
        return self.population / self.population[0]

    def first_period(self, regime):
        """First period in the given regime, or ``None``."""
        for r in self.rows:
            if r.outcome.regime is regime:
                return r.state.t
        return None


def apply_shock(s, event):
    if event is None:
        return s
    return replace(
        s,
        z_land=s.z_land * event.land_multiplier,
        n_pop=s.n_pop * event.population_multiplier,
    )


def simulate(initial, schedule, horizon, p, cfg=DEFAULT_ROOT_CONFIG, base_year=DEFAULT_BASE_YEAR):
    """Solve ``horizon`` consecutive periods starting from ``initial``.

    Shocks scheduled for period ``t`` hit before period ``t`` is solved.
    """
    if horizon < 1:
        raise DomainError(f"horizon must be at least 1, got {horizon}")
    p.check()
    rows = []
    s = initial
    halted = False
    for _ in range(horizon):
        event = schedule.at(s.t)
        solved = apply_shock(s, event)
        try:
            o = solve_period(solved, p, cfg)
        except ModelError as exc:
            raise SimulationError(s.t, exc) from exc
        rows.append(TrajectoryRow(s, event, solved, o))
        s = advance(solved, o, p)
        if s.n_pop == 0:
            halted = len(rows) < horizon
            break
    return Trajectory(rows, years_per_period=p.years_per_period, base_year=base_year, halted=halted)


def equivalent_population_shock(land_multiplier):
    """Population multiplier with the same per-household effect as a land multiplier."""
    if not land_multiplier > 0:
        raise DomainError(f"land multiplier must be positive, got {land_multiplier!r}")
    return 1.0 / land_multiplier


@dataclass(frozen=True)
class EconomyComparison:
    crossing_period: object  # int or None
    income_ratio: np.ndarray  # y_1 / y_2 per period
    regimes_1: tuple
    regimes_2: tuple


def compare_economies(traj_1, traj_2):
    """Compare two equally long trajectories.

    The crossing period is the first period in which the population ranking
    is the reverse of the ranking at the first period where the two
    populations differ.
    """
    if len(traj_1) != len(traj_2):
        raise DomainError(f"horizons differ: {len(traj_1)} vs {len(traj_2)}")
    diff = traj_2.population - traj_1.population
    crossing = None
    leader = 0.0
    for t, d in zip(traj_1.t, diff):
        if leader == 0.0:
            leader = float(np.sign(d))
        elif np.sign(d) == -leader:
            crossing = int(t)
            break
    return EconomyComparison(
        crossing_period=crossing,
        income_ratio=traj_1.income / traj_2.income,
        regimes_1=tuple(traj_1.regimes),
        regimes_2=tuple(traj_2.regimes),
    )


def growth_statistics(traj, from_t, to_t):
    """Annualized growth of per-household income between two periods."""
    t = traj.t
    if not (from_t < to_t):
        raise DomainError(f"need from_t < to_t, got {from_t}, {to_t}")
    if from_t < t[0] or to_t > t[-1]:
        raise DomainError(f"window {from_t}..{to_t} outside simulated periods {t[0]}..{t[-1]}")
    y = traj.income
    i, j = from_t - t[0], to_t - t[0]
    years = traj.years_per_period * (to_t - from_t)
    return (y[j] / y[i]) ** (1.0 / years) - 1.0
