"""Default parameterization and the joint restrictions a calibration must meet."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, fields

from .errors import ConfigError, DomainError
from .model import EconomyState, Parameters, subsistence_pressure
from .steady_state import (
    escape_threshold,
    malthus_growth,
    malthus_ss_population,
    regime_ratio,
)

SHOCK_PERIOD = 10
# rounded as published; see ghost_acre_multiplier() for the unrounded value
ECONOMY_1_LAND_MULTIPLIER = 2.74


def ghost_acre_multiplier(coal_acres=15e6, imports_acres=25e6, base_acres=23e6):
    """Land supply after the shock, counting coal and import land equivalents."""
    return 1.0 + (coal_acres + imports_acres) / base_acres


@dataclass(frozen=True)
class CalibrationInput:
    """Primitive calibration targets; every dependent constant is derived from these."""

    annual_malthus_pop_growth: float = 0.0035
    annual_manufacturing_growth: float = 0.02
    gamma: float = 0.20
    eta_divisor: float = 1.02
    theta_z: float = 0.16
    theta_x: float = 0.60
    c_bar_a: float = 0.25
    c_bar_m: float = 1.35
    a_a0: float = 1.0
    a_m0: float = 1.0
    z0: float = 1.0
    years_per_period: float = 25.0

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, data):
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown calibration fields: {sorted(unknown)}")
        values = {}
        for name, value in data.items():
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise ConfigError(f"calibration field {name!r} must be a number, got {value!r}")
            values[name] = float(value)
        return cls(**values)


BASELINE = CalibrationInput()


def _check_input(c):
    bad = [f.name for f in fields(c) if not (math.isfinite(getattr(c, f.name)) and getattr(c, f.name) > 0)]
    if bad:
        raise ConfigError(f"calibration fields must be positive and finite: {bad}")
    if c.theta_z + c.theta_x >= 1:
        raise ConfigError(
            f"theta_z + theta_x must be below one, got {c.theta_z + c.theta_x!r}"
        )


def build_parameters(c=BASELINE):
    """Derive model parameters and the initial state from calibration targets.

    The farm productivity growth factor is set so that the Malthusian steady
    state grows at the target annual rate, and the economy starts at its
    detrended Malthusian steady-state population.
    """
    _check_input(c)
    theta_l = 1.0 - c.theta_z - c.theta_x
    years = c.years_per_period
    p = Parameters(
        theta_z=c.theta_z,
        theta_x=c.theta_x,
        theta_l=theta_l,
        g_a=(1.0 + c.annual_malthus_pop_growth) ** (c.theta_z / theta_l * years),
        g_m=(1.0 + c.annual_manufacturing_growth) ** years,
        gamma=c.gamma,
        eta=c.gamma / c.eta_divisor,
        c_bar_a=c.c_bar_a,
        c_bar_m=c.c_bar_m,
        years_per_period=years,
    )
    problems = p.problems()
    if problems:
        raise ConfigError("; ".join(problems))
    try:
        n0 = malthus_ss_population(p, c.a_m0, c.a_a0, c.z0)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    return p, EconomyState(a_a=c.a_a0, a_m=c.a_m0, n_pop=n0, z_land=c.z0, t=0)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    value: object
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def ok(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self):
        return [c for c in self.checks if not c.passed]


def validate(p, s0):
    """Run every calibration check and report each one, without raising."""
    checks = []
    shares = (p.theta_z, p.theta_x, p.theta_l)
    simplex = min(shares) > 0 and abs(sum(shares) - 1.0) <= 1e-12
    checks.append(Check("share_simplex", simplex, sum(shares), f"shares {shares}"))

    mu_ok = simplex and abs(p.theta_x / p.theta_l * (1.0 - p.mu) - p.mu) <= 1e-12
    checks.append(Check("mu_consistency", mu_ok, p.mu if simplex else math.nan))

    if not simplex:
        for name in ("malthus_exists", "escape_feasible", "childcare_feasible", "initial_fed"):
            checks.append(Check(name, False, math.nan, "skipped: shares invalid"))
        return ValidationReport(tuple(checks))

    try:
        ratio, exists = regime_ratio(p, s0.a_m)
        checks.append(Check("malthus_exists", exists, ratio, "escape/steady-state ratio < 1"))
    except DomainError as exc:
        checks.append(Check("malthus_exists", True, 0.0, str(exc)))

    try:
        _, n_tilde_esc = escape_threshold(p, s0.a_m, s0.a_a, s0.z_land)
        checks.append(Check("escape_feasible", n_tilde_esc > 0, n_tilde_esc))
    except DomainError as exc:
        checks.append(Check("escape_feasible", False, math.nan, str(exc)))

    eta_n = p.eta * malthus_growth(p)
    checks.append(Check("childcare_feasible", eta_n < 1, eta_n, "eta * n_ss < 1"))

    k0 = subsistence_pressure(s0, p) if s0.n_pop > 0 else 0.0
    checks.append(Check("initial_fed", k0 < 1, k0, "subsistence pressure at t = 0 below one"))
    return ValidationReport(tuple(checks))
