"""Closed-form steady-state levels, regime thresholds and cross-economy comparisons.

All population levels here are *detrended*: a population ``N_t`` is compared
with ``N_tilde * n_ss**t``.  Because agricultural productivity grows at
``g_a`` and ``n_ss = g_a**(theta_l/theta_z)``, detrending removes every time
dependence of the Malthusian state, so the thresholds are constants.

The escape-to-steady-state ratio is reported as a ratio of *levels*, i.e.
with the ``1/theta_z`` power applied to the ratio of the bracketed terms.
Only the level ratio reproduces the calibrated value of roughly 0.41; the
bracket ratio itself is about 0.87.  The condition "ratio < 1" is the same
either way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .equilibrium import fertility_residual
from .errors import DomainError
from .model import EconomyState, subsistence_pressure

ESCAPE_RESIDUAL_TOL = 1e-10


@dataclass(frozen=True)
class SteadyStateReport:
    n_ss: float
    n_tilde_ss: float
    n_escape: float
    n_tilde_escape: float
    n_tilde_starve: float
    escape_ratio: float
    escape_land_multiplier: float
    sustainability_bound: float
    malthus_exists: bool

    @property
    def starve_ratio(self):
        return self.n_tilde_starve / self.n_tilde_ss


@dataclass(frozen=True)
class SteadyStateComparison:
    """Farm productivity of two economies, each at its own Malthusian steady state.

    Suffix ``_b`` is the first economy, ``_c`` the second.
    """

    labor_productivity_b: float
    labor_productivity_c: float
    land_productivity_b: float
    land_productivity_c: float
    n_tilde_ss_b: float
    n_tilde_ss_c: float

    @property
    def labor_productivity_ratio(self):
        return self.labor_productivity_c / self.labor_productivity_b

    @property
    def land_productivity_ratio(self):
        return self.land_productivity_c / self.land_productivity_b


def malthus_growth(p):
    """Gross population growth per period in the Malthusian steady state."""
    return p.g_a ** (p.theta_l / p.theta_z)


def _level_scale(p, a_m, a_a0, z):
    return (p.mu**p.theta_x / p.c_bar_a) * z**p.theta_z * a_m**p.theta_x * a_a0**p.theta_l


def malthus_ss_population(p, a_m, a_a0, z):
    n_ss = malthus_growth(p)
    labor_left = 1.0 - p.eta * n_ss
    if labor_left <= 0:
        raise DomainError(f"childcare absorbs all labor at n_ss: eta * n_ss = {p.eta * n_ss!r}")
    bracket = labor_left ** (1.0 - p.theta_z) * _level_scale(p, a_m, a_a0, z)
    return bracket ** (1.0 / p.theta_z)


def escape_fertility(p, a_m):
    """Fertility at the income where households begin to buy manufactures."""
    return p.gamma * p.c_bar_m / ((1.0 - p.gamma) * p.eta * a_m)


def escape_threshold(p, a_m, a_a0, z):
    """Return ``(n_escape, N_tilde_escape)``.

    Below ``N_tilde_escape`` income exceeds the level at which households
    start consuming manufactures and the economy leaves the Malthusian state.
    """
    n_esc = escape_fertility(p, a_m)
    labor_left = 1.0 - p.eta * n_esc
    if labor_left <= 0:
        raise DomainError(
            f"no non-Malthusian region: escape fertility {n_esc!r} needs all labor for childcare"
        )
    # theta_x / mu == 1 - theta_z
    bracket = (
        (1.0 - p.theta_z * p.eta * n_esc)
        - (p.theta_x / p.mu) * (p.gamma / (1.0 - p.gamma)) * (p.c_bar_m / a_m)
    ) * _level_scale(p, a_m, a_a0, z) / labor_left**p.theta_z
    n_tilde = bracket ** (1.0 / p.theta_z)

    k = subsistence_pressure(EconomyState(a_a=a_a0, a_m=a_m, n_pop=n_tilde, z_land=z), p)
    residual = fertility_residual(n_esc, k, p)
    if abs(residual) > ESCAPE_RESIDUAL_TOL * max(1.0, n_esc):
        raise DomainError(f"escape pair violates the Malthusian fertility equation: {residual!r}")
    return n_esc, n_tilde


def starvation_population(p, a_m, a_a0, z):
    """Detrended population at which subsistence pressure reaches one."""
    return _level_scale(p, a_m, a_a0, 1.0) ** (1.0 / p.theta_z) * z


def regime_ratio(p, a_m):
    """Return ``(N_tilde_escape / N_tilde_ss, malthus_exists)``.

    The ratio does not depend on land or on initial farm productivity, so
    both are set to one.
    """
    _, n_esc = escape_threshold(p, a_m, 1.0, 1.0)
    ratio = n_esc / malthus_ss_population(p, a_m, 1.0, 1.0)
    return ratio, ratio < 1.0


def sustainability_bound(p):
    """Largest per-period population growth that still shrinks the farm labor share."""
    return (p.g_m**p.theta_x * p.g_a**p.theta_l) ** (1.0 / p.theta_z)


def steady_state_report(p, a_m=1.0, a_a0=1.0, z=1.0):
    """Collect every steady-state quantity into one :class:`SteadyStateReport`.

    When no non-Malthusian region exists the escape fields are ``nan``, the
    multiplier is ``inf`` and the Malthusian state exists trivially.
    """
    n_ss = malthus_growth(p)
    n_tilde_ss = malthus_ss_population(p, a_m, a_a0, z)
    try:
        n_esc, n_tilde_esc = escape_threshold(p, a_m, a_a0, z)
    except DomainError:
        n_esc = n_tilde_esc = ratio = math.nan
        multiplier = math.inf
        exists = True
    else:
        ratio, exists = regime_ratio(p, a_m)
        multiplier = 1.0 / ratio
    return SteadyStateReport(
        n_ss=n_ss,
        n_tilde_ss=n_tilde_ss,
        n_escape=n_esc,
        n_tilde_escape=n_tilde_esc,
        n_tilde_starve=starvation_population(p, a_m, a_a0, z),
        escape_ratio=ratio,
        escape_land_multiplier=multiplier,
        sustainability_bound=sustainability_bound(p),
        malthus_exists=exists,
    )


def compare_steady_states(p, a_a0_b, a_a0_c, a_m, z_b, z_c):
    """Farm labor and land productivity of two economies in Malthusian steady state.

    In steady state farm labor is ``(1 - eta n_ss) N`` and farm output is
    ``c_bar_a N``, so output per farmer is the same everywhere while output
    per unit of land scales with the steady-state population density.
    """
    if not regime_ratio(p, a_m)[1]:
        raise DomainError("no Malthusian steady state for this parameterization")
    for a_a0, z in ((a_a0_b, z_b), (a_a0_c, z_c)):
        if not (a_a0 > 0 and z > 0):
            raise DomainError(f"productivity and land must be positive, got {(a_a0, z)}")
    labor = p.c_bar_a / (1.0 - p.eta * malthus_growth(p))
    n_b = malthus_ss_population(p, a_m, a_a0_b, z_b)
    n_c = malthus_ss_population(p, a_m, a_a0_c, z_c)
    return SteadyStateComparison(
        labor_productivity_b=labor,
        labor_productivity_c=labor,
        land_productivity_b=p.c_bar_a * n_b / z_b,
        land_productivity_c=p.c_bar_a * n_c / z_c,
        n_tilde_ss_b=n_b,
        n_tilde_ss_c=n_c,
    )
