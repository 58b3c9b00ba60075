"""Regime selection, one-period equilibrium and the law of motion."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InvariantError, SolverError, StarvationSignal
from .model import (
    EconomyState,
    PeriodOutcome,
    Regime,
    agricultural_output,
    agricultural_price,
    household_demand,
    household_income,
    intermediate_inputs,
    required_farm_labor,
    subsistence_pressure,
)

# relative tolerance for the accounting identities checked on every solve
IDENTITY_RTOL = 1e-9
BRACKET_SHRINK = 1e-12


@dataclass(frozen=True)
class RootFindConfig:
    abs_tol: float = 1e-12
    max_iter: int = 200

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainError(f"abs_tol must be positive, got {self.abs_tol}")
        if self.max_iter < 1:
            raise DomainError(f"max_iter must be at least 1, got {self.max_iter}")


DEFAULT_ROOT_CONFIG = RootFindConfig()


def fertility_residual(n, k, p):
    """``(1 - K (1 - eta n)**theta_z) / eta - n``; zero at Malthusian fertility."""
    return (1.0 - k * (1.0 - p.eta * n) ** p.theta_z) / p.eta - n


def bisect(f, lo, hi, abs_tol, max_iter):
    """Root of ``f`` on ``[lo, hi]`` by bisection.

    Stops once ``|f(mid)| < abs_tol`` or the bracket can no longer be split
    in binary64.  Raises :class:`SolverError` when the endpoints do not
    bracket a sign change or ``max_iter`` is exhausted first.
    """
    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0:
        return lo
    if f_hi == 0:
        return hi
    if (f_lo > 0) == (f_hi > 0):
        raise SolverError(f"no sign change on [{lo!r}, {hi!r}]: f = ({f_lo!r}, {f_hi!r})")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        f_mid = f(mid)
        if abs(f_mid) < abs_tol or mid in (lo, hi):
            return mid
        if (f_mid > 0) == (f_lo > 0):
            lo, f_lo = mid, f_mid
        else:
            hi = mid
    raise SolverError(f"bisection did not converge in {max_iter} iterations")


def malthusian_fertility_root(k, p, cfg=DEFAULT_ROOT_CONFIG):
    """Fertility that keeps everyone fed when nobody works in manufacturing.

    Solves ``n = (1 - K (1 - eta n)**theta_z) / eta`` on ``[0, 1/eta)``.
    The degenerate root ``n = 1/eta`` (no labor supply at all) is cut out
    of the bracket.
    """
    if not (math.isfinite(k) and k > 0):
        raise DomainError(f"subsistence pressure must be positive, got {k!r}")
    if k >= 1:
        raise StarvationSignal(f"subsistence pressure {k!r} >= 1")
    hi = (1.0 - BRACKET_SHRINK) / p.eta
    return bisect(lambda n: fertility_residual(n, k, p), 0.0, hi, cfg.abs_tol, cfg.max_iter)


def _close(a, b, rtol=IDENTITY_RTOL):
    return abs(a - b) <= rtol * max(abs(a), abs(b), 1e-300)


def _check_identities(o, s, p):
    n_pop = s.n_pop
    supply = (1.0 - p.eta * o.n_fert) * n_pop
    if not _close(o.l_a + o.l_m, supply):
        raise InvariantError(f"labor market does not clear: {o.l_a + o.l_m!r} vs {supply!r}")
    food = o.c_a * n_pop if o.regime is Regime.STARVATION else p.c_bar_a * n_pop
    if not _close(food, o.y_agr):
        raise InvariantError(f"farm market does not clear: {food!r} vs {o.y_agr!r}")
    if not _close(o.c_m * n_pop + o.x_int, o.y_man):
        raise InvariantError(
            f"manufacturing market does not clear: {o.c_m * n_pop + o.x_int!r} vs {o.y_man!r}"
        )


def _outcome(regime, s, p, n, l_a, l_m, p_a, income, c_a, c_m):
    x = intermediate_inputs(l_a, s, p)
    y_agr = agricultural_output(s.z_land, x, s.a_a, l_a, p)
    supply = (1.0 - p.eta * n) * s.n_pop
    return PeriodOutcome(
        regime=regime,
        n_fert=n,
        l_a=l_a,
        l_m=l_m,
        ell_a_emp=l_a / supply,
        ell_a_pc=l_a / s.n_pop,
        p_a=p_a,
        wage=s.a_m,
        rent_pc=income - s.a_m,
        income=income,
        c_a=c_a,
        c_m=c_m,
        x_int=x,
        y_agr=y_agr,
        y_man=s.a_m * (l_m + p.mu * l_a),
    )


def solve_period(s, p, cfg=DEFAULT_ROOT_CONFIG):
    """Solve the static equilibrium of state ``s``.

    Regimes are tested in the order starvation, non-Malthusian, Malthusian.
    In the non-Malthusian branch farm labor is the required farm labor,
    which does not depend on fertility, so that branch needs no solver.
    """
    if not s.n_pop > 0:
        raise DomainError(f"cannot solve a period with population {s.n_pop!r}")
    p.check()
    k = subsistence_pressure(s, p)
    w = s.a_m

    if k >= 1:
        # everyone farms, no children, food rationed by the price
        l_a = s.n_pop
        p_a = agricultural_price(l_a, s, p)
        y = household_income(p_a, l_a, s, p)
        x = intermediate_inputs(l_a, s, p)
        c_a = agricultural_output(s.z_land, x, s.a_a, l_a, p) / s.n_pop
        o = _outcome(Regime.STARVATION, s, p, 0.0, l_a, 0.0, p_a, y, c_a, 0.0)
        _check_identities(o, s, p)
        return o

    l_req = required_farm_labor(s, p)
    p_a = agricultural_price(l_req, s, p)
    y = household_income(p_a, l_req, s, p)

    if y > p_a * p.c_bar_a + p.gamma / (1.0 - p.gamma) * p.c_bar_m:
        c_a, c_m, n = household_demand(y, p_a, w, p)
        if not c_m > 0:
            raise InvariantError(f"non-Malthusian branch produced c_m = {c_m!r}")
        l_m = c_m * s.n_pop / s.a_m
        o = _outcome(Regime.NON_MALTHUSIAN, s, p, n, l_req, l_m, p_a, y, c_a, c_m)
        _check_identities(o, s, p)
        return o

    n = malthusian_fertility_root(k, p, cfg)
    l_a = (1.0 - p.eta * n) * s.n_pop
    p_a = agricultural_price(l_a, s, p)
    y = household_income(p_a, l_a, s, p)
    o = _outcome(Regime.MALTHUSIAN, s, p, n, l_a, 0.0, p_a, y, p.c_bar_a, 0.0)
    _check_identities(o, s, p)
    return o


def advance(s, o, p):
    """State at the start of the next period; land is carried over unchanged."""
    g_m = p.g_m if o.l_m > 0 else 1.0
    return EconomyState(
        a_a=p.g_a * s.a_a,
        a_m=g_m * s.a_m,
        n_pop=o.n_fert * s.n_pop,
        z_land=s.z_land,
        t=s.t + 1,
    )


def malthus_map(n_tilde, a_m, a_a0, z, p, cfg=DEFAULT_ROOT_CONFIG):
    """Next-period detrended population along the Malthusian locus.

    Detrending by ``n_ss**t`` turns the agricultural productivity trend into
    a constant, so the map evaluates the state at ``t = 0`` productivity.
    """
    s = EconomyState(a_a=a_a0, a_m=a_m, n_pop=n_tilde, z_land=z)
    n = malthusian_fertility_root(subsistence_pressure(s, p), p, cfg)
    return n / p.g_a ** (p.theta_l / p.theta_z) * n_tilde
