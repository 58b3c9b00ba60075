"""Domain types and the closed-form building blocks of the two-sector economy.

Agriculture combines land, intermediate inputs bought from manufacturing and
farm labor with Cobb-Douglas shares.  Manufacturing is linear in labor, and
farmers spend a fixed fraction ``mu`` of their time producing manufactured
goods at home.  The manufactured good is the numeraire, so the wage always
equals manufacturing productivity.

Nothing in this module decides which regime the economy is in; see
:mod:`malthusgrowth.equilibrium` for that.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError

SHARE_TOL = 1e-12


class Regime(str, enum.Enum):
    STARVATION = "Starvation"
    MALTHUSIAN = "Malthusian"
    NON_MALTHUSIAN = "NonMalthusian"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Parameters:
    """Exogenous constants of the model.

    Construction does not validate; call :meth:`check` (the solvers do) or
    :func:`malthusgrowth.calibration.validate` for a non-raising report.

    Attributes
    ----------
    theta_z, theta_x, theta_l : float
        Land, intermediate-input and labor shares in agriculture.
    g_a : float
        Gross agricultural productivity growth per period.
    g_m : float
        Gross manufacturing productivity growth per period, applied only in
        periods with full-time manufacturing workers.
    gamma : float
        Utility weight on children.
    eta : float
        Time cost of raising one child, as a fraction of adult labor.
    c_bar_a : float
        Subsistence agricultural consumption.
    c_bar_m : float
        Taste shifter on manufacturing consumption.
    years_per_period : float
        Calendar years in one model period.
    """

    theta_z: float
    theta_x: float
    theta_l: float
    g_a: float
    g_m: float
    gamma: float
    eta: float
    c_bar_a: float
    c_bar_m: float
    years_per_period: float = 25.0

    @property
    def mu(self):
        """Part-time manufacturing fraction of farmers, pinned by the shares."""
        return self.theta_x / (self.theta_x + self.theta_l)

    def problems(self):
        """Return a list of human-readable violations (empty when valid)."""
        out = []
        for name, value in vars(self).items():
            if not math.isfinite(value):
                out.append(f"{name} must be finite, got {value!r}")
        if out:
            return out
        shares = (self.theta_z, self.theta_x, self.theta_l)
        if min(shares) <= 0:
            out.append(f"shares must be positive, got {shares}")
        if abs(sum(shares) - 1.0) > SHARE_TOL:
            out.append(f"shares must sum to one, got {sum(shares)!r}")
        if not 0 < self.eta < 1:
            out.append(f"eta must lie in (0, 1), got {self.eta}")
        if not 0 < self.gamma < 1:
            out.append(f"gamma must lie in (0, 1), got {self.gamma}")
        if self.c_bar_a <= 0:
            out.append(f"c_bar_a must be positive, got {self.c_bar_a}")
        if self.c_bar_m <= 0:
            out.append(f"c_bar_m must be positive, got {self.c_bar_m}")
        if self.g_a < 1:
            out.append(f"g_a must be at least 1, got {self.g_a}")
        if self.g_m <= 0:
            out.append(f"g_m must be positive, got {self.g_m}")
        if self.years_per_period <= 0:
            out.append(f"years_per_period must be positive, got {self.years_per_period}")
        return out

    def check(self):
        problems = self.problems()
        if problems:
            raise DomainError("invalid parameters: " + "; ".join(problems))
        return self


@dataclass(frozen=True)
class EconomyState:
    """State variables at the start of a period (before it is solved)."""

    a_a: float
    a_m: float
    n_pop: float
    z_land: float
    t: int = 0

    def __post_init__(self):
        for name in ("a_a", "a_m", "z_land"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise DomainError(f"{name} must be positive and finite, got {value!r}")
        if not (math.isfinite(self.n_pop) and self.n_pop >= 0):
            raise DomainError(f"n_pop must be non-negative and finite, got {self.n_pop!r}")
        if self.t < 0:
            raise DomainError(f"t must be non-negative, got {self.t}")


@dataclass(frozen=True)
class PeriodOutcome:
    """Static equilibrium of one period.

    Prices and incomes are in units of the manufactured good.  ``ell_a_emp``
    is farm labor over labor supply net of childcare; ``ell_a_pc`` is farm
    labor per adult.
    """

    regime: Regime
    n_fert: float
    l_a: float
    l_m: float
    ell_a_emp: float
    ell_a_pc: float
    p_a: float
    wage: float
    rent_pc: float
    income: float
    c_a: float
    c_m: float
    x_int: float
    y_agr: float
    y_man: float


def _require_nonneg(**values):
    for name, value in values.items():
        if not math.isfinite(value) or value < 0:
            raise DomainError(f"{name} must be finite and non-negative, got {value!r}")


def agricultural_output(z, x, a_a, l_a, p):
    """Farm output ``Z**theta_z * X**theta_x * (A_a * L_a)**theta_l``."""
    _require_nonneg(z=z, x=x, a_a=a_a, l_a=l_a)
    return z**p.theta_z * x**p.theta_x * (a_a * l_a) ** p.theta_l


def subsistence_pressure(s, p):
    """Dimensionless pressure ``K`` of feeding the population at subsistence.

    ``K ** (1 / (1 - theta_z))`` is the fraction of adults who must farm so
    that everyone eats ``c_bar_a`` when farmers buy the cost-minimizing
    amount of intermediates.  ``K >= 1`` means even the whole adult
    population cannot do it.
    """
    return (
        (p.c_bar_a / p.mu**p.theta_x)
        * (s.n_pop / s.z_land) ** p.theta_z
        / (s.a_m**p.theta_x * s.a_a**p.theta_l)
    )


def required_farm_labor(s, p):
    """Farm labor that produces exactly ``c_bar_a * N`` with ``X = mu * A_m * L_a``."""
    k = subsistence_pressure(s, p)
    return k ** (1.0 / (1.0 - p.theta_z)) * s.n_pop


def agricultural_price(l_a, s, p):
    """Price of the farm good implied by the intermediate-input first-order condition."""
    if not (math.isfinite(l_a) and l_a > 0):
        raise DomainError(f"farm labor must be positive, got {l_a!r}")
    mu = p.mu
    return (
        (mu ** (1.0 - p.theta_x) / p.theta_x)
        * s.a_m ** (1.0 - p.theta_x)
        * (l_a / s.z_land) ** p.theta_z
        / s.a_a**p.theta_l
    )


def intermediate_inputs(l_a, s, p):
    return p.mu * s.a_m * l_a


def household_income(p_a, l_a, s, p):
    """Wage plus the household's equal share of land rent.

    The rent is ``theta_z * p_a * Y_a / N`` with ``Y_a`` produced by ``l_a``
    farmers.  When ``l_a`` is the required farm labor this reduces to
    ``A_m + theta_z * p_a * c_bar_a``; when everyone farms and still falls
    short it reduces to ``A_m / (1 - theta_z)``.
    """
    if p_a == 0 or l_a == 0:
        return s.a_m
    y_a = agricultural_output(s.z_land, intermediate_inputs(l_a, s, p), s.a_a, l_a, p)
    return s.a_m + p.theta_z * p_a * y_a / s.n_pop


def household_demand(y, p_a, w, p):
    """Optimal ``(c_a, c_m, n)`` for income ``y``, farm price ``p_a`` and wage ``w``.

    Ties at a case threshold resolve to the lower case.
    """
    if not (y > 0 and p_a > 0 and w > 0):
        raise DomainError(f"income, price and wage must be positive, got {(y, p_a, w)}")
    food_bill = p_a * p.c_bar_a
    if y <= food_bill:
        return y / p_a, 0.0, 0.0
    surplus = y - food_bill
    if surplus <= p.gamma / (1.0 - p.gamma) * p.c_bar_m:
        return p.c_bar_a, 0.0, surplus / (p.eta * w)
    c_m = (1.0 - p.gamma) * surplus - p.gamma * p.c_bar_m
    n = p.gamma * (surplus + p.c_bar_m) / (p.eta * w)
    return p.c_bar_a, c_m, n


def household_utility(c_a, c_m, n, p):
    """Hierarchical utility: food first, then manufactures and children.

    Reaching ``c_bar_a`` exactly already counts as satiated, so the upper
    branch applies at ``c_a == c_bar_a``.  This is what makes the demand in
    :func:`household_demand` an attained maximum rather than a supremum.
    Returns ``-inf`` for a satiated household with no children.
    """
    if not c_a > 0:
        raise DomainError(f"c_a must be positive, got {c_a!r}")
    if c_a < p.c_bar_a:
        return math.log(c_a)
    if n <= 0:
        return -math.inf
    return (
        math.log(p.c_bar_a)
        + (1.0 - p.gamma) * math.log(c_m + p.c_bar_m)
        + p.gamma * math.log(n)
    )


def utility_rank(c_a, c_m, n, p):
    """Lexicographic key ``(satiated, utility)`` for comparing bundles.

    Any bundle that reaches subsistence food is preferred to every bundle
    that does not, regardless of the numeric utility in each branch.
    """
    return (c_a >= p.c_bar_a, household_utility(c_a, c_m, n, p))
