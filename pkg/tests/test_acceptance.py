"""Acceptance gate: one test per criterion, each reported in the terminal summary."""

from dataclasses import replace

import numpy as np
import pytest

from malthusgrowth.config import preset
from malthusgrowth.equilibrium import malthusian_fertility_root
from malthusgrowth.harness import run_config, with_param
from malthusgrowth.model import Regime, household_demand
from malthusgrowth.scenario import (
    ShockSchedule,
    compare_economies,
    equivalent_population_shock,
    growth_statistics,
    simulate,
)
from malthusgrowth.steady_state import (
    compare_steady_states,
    malthus_growth,
    malthus_ss_population,
    regime_ratio,
    starvation_population,
)
from oracles import brute_force_demand_violations, grid_scan_root
from test_properties import identity_gaps

PER_HOUSEHOLD = ("fertility", "income", "ell_a_emp", "ell_a_pc", "income_index", "intermediates_index")


@pytest.fixture(scope="module")
def economy_1():
    return run_config(preset("economy1"))


@pytest.fixture(scope="module")
def economy_2():
    return run_config(preset("economy2"))


def annual(gross, years=25.0):
    return gross ** (1.0 / years) - 1.0


def test_01_malthusian_baseline(economy_2, criterion):
    p, traj = economy_2
    all_malthusian = all(r is Regime.MALTHUSIAN for r in traj.regimes)
    flat = float(np.max(np.abs(traj.income_index - 1.0)))
    growth = annual(traj.population[1:] / traj.population[:-1])
    gap = float(np.max(np.abs(growth - 0.0035)))
    passed = len(traj) == 26 and all_malthusian and flat <= 1e-9 and gap <= 1e-6
    criterion("1 Malthusian baseline", passed, f"max|y_index-1|={flat:.1e} max|g_N-0.35%|={gap:.1e}")
    assert passed


def test_02_escape_event(economy_1, criterion):
    _, traj = economy_1
    regimes = traj.regimes
    passed = regimes[:10] == [Regime.MALTHUSIAN] * 10 and regimes[10:] == [Regime.NON_MALTHUSIAN] * 16
    criterion("2 escape event", passed, f"first NonMalthusian t={traj.first_period(Regime.NON_MALTHUSIAN)}")
    assert passed


def test_03_growth_rate(economy_1, criterion):
    _, traj = economy_1
    g = growth_statistics(traj, 10, 20)
    passed = abs(g - 0.0197) <= 0.0015
    criterion("3 growth rate t=10..20", passed, f"{100 * g:.4f}% per year (target 1.97 +- 0.15)")
    assert passed


def test_04_structural_transformation(economy_1, criterion):
    _, traj = economy_1
    at_12, at_20 = traj.ell_a_emp[12], traj.ell_a_emp[20]
    passed = abs(at_12 - 0.47) <= 0.03 and abs(at_20 - 0.025) <= 0.01
    criterion(
        "4 farm employment share",
        passed,
        f"ell_a_emp t=12 {at_12:.4f}, t=20 {at_20:.4f} (per-adult {traj.ell_a_pc[12]:.4f}, {traj.ell_a_pc[20]:.4f})",
    )
    assert passed


def test_05_thresholds(params, criterion):
    escape, _ = regime_ratio(params, 1.0)
    starve = starvation_population(params, 1, 1, 1) / malthus_ss_population(params, 1, 1, 1)
    # boundary where the escape ratio reaches one; regime_ratio is decreasing in c_bar_m
    lo, hi = 0.1, 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        ratio, _ = regime_ratio(replace(params, c_bar_m=mid), 1.0)
        lo, hi = (mid, hi) if ratio > 1 else (lo, mid)
    boundary = 0.5 * (lo + hi)
    passed = abs(escape - 0.407) <= 0.005 and abs(starve - 3.54) <= 0.01 and abs(boundary - 0.856) <= 0.002
    criterion(
        "5 thresholds", passed,
        f"escape {escape:.5f}, starve {starve:.5f}, c_bar_m boundary {boundary:.5f}",
    )
    assert passed


def test_06_population_crossing(economy_1, economy_2, criterion):
    c = compare_economies(economy_1[1], economy_2[1])
    passed = c.crossing_period == 24
    criterion("6 population crossing", passed, f"t={c.crossing_period}")
    assert passed


def test_07_fertility_and_intermediates_shape(economy_1, criterion):
    _, traj = economy_1
    n = traj.fertility
    peak = 10 + int(np.argmax(n[10:]))
    drops = bool(n[peak + 1] < n[peak])
    rebound = bool(n[20] > n[19])
    x = traj.intermediates_index
    dip = bool(x[10] < x[9] and x[11] > x[10])
    passed = drops and rebound and dip
    criterion(
        "7 fertility and intermediates shape", passed,
        f"peak t={peak}, n19={n[19]:.6f} n20={n[20]:.6f}, x9={x[9]:.4f} x10={x[10]:.4f}",
    )
    assert passed


def test_08_escape_multiplier(criterion):
    def escapes(m):
        _, traj = run_config(with_param(preset("economy1"), "land_multiplier", m))
        return traj.regimes[10] is Regime.NON_MALTHUSIAN

    lo, hi = 1.0, 4.0
    for _ in range(50):
        mid = 0.5 * (lo + hi)
        lo, hi = (lo, mid) if escapes(mid) else (mid, hi)
    passed = escapes(2.46) and not escapes(2.45) and 2.45 < hi < 2.46
    criterion("8 escape multiplier", passed, f"threshold {hi:.6f}; 2.45 stays, 2.46 escapes")
    assert passed


def test_09_land_population_equivalence(economy_1, s0, params, criterion):
    _, land = economy_1
    pop = simulate(s0, ShockSchedule.population_shock(10, equivalent_population_shock(2.74)), 26, params)
    worst = 0.0
    for name in PER_HOUSEHOLD:
        a, b = getattr(land, name), getattr(pop, name)
        worst = max(worst, float(np.max(np.abs(a - b) / np.abs(a))))
    p_land = np.array([r.outcome.p_a for r in land.rows])
    p_pop = np.array([r.outcome.p_a for r in pop.rows])
    worst = max(worst, float(np.max(np.abs(p_land - p_pop) / p_land)))
    passed = worst <= 1e-9 and land.regimes == pop.regimes
    criterion("9 land/population equivalence", passed, f"max relative gap {worst:.1e}")
    assert passed


def _demand_draws(params, count, rng):
    """Income/price draws cycling through the hungry, Malthusian and escape demand cases."""
    draws = []
    for i in range(count):
        p_a = rng.uniform(0.3, 3.0)
        w = rng.uniform(0.3, 3.0)
        floor = p_a * params.c_bar_a
        kink = floor + params.gamma / (1 - params.gamma) * params.c_bar_m
        y = (rng.uniform(0.2, 0.95) * floor, rng.uniform(floor, kink), rng.uniform(1.05, 4.0) * kink)[i % 3]
        draws.append((y, p_a, w))
    return draws


def test_10_property_suites(params, s0, economy_1, economy_2, criterion):
    rng = np.random.default_rng(123)

    violations = 0
    for y, p_a, w in _demand_draws(params, 25, rng):
        demand = household_demand(y, p_a, w, params)
        v, _ = brute_force_demand_violations(y, p_a, w, demand, params, size=200)
        violations += v

    root_gap = 0.0
    for k in rng.uniform(0.01, 0.99, 50):
        n = malthusian_fertility_root(k, params)
        root_gap = max(root_gap, abs(n - grid_scan_root(k, params.eta, params.theta_z)))

    identity_gap = 0.0
    for _, traj in (economy_1, economy_2):
        for row in traj.rows:
            gaps = identity_gaps(row.outcome, row.state, params)
            identity_gap = max(identity_gap, max(abs(g) for g in gaps.values()))

    c = compare_steady_states(params, 1.0, 2.0, 1.0, 1.0, 1.0)
    land_gap = abs(c.land_productivity_ratio / 2.0 ** (params.theta_l / params.theta_z) - 1)
    labor_equal = c.labor_productivity_b == c.labor_productivity_c

    passed = violations == 0 and root_gap < 2e-6 and identity_gap <= 1e-9 and labor_equal and land_gap <= 1e-9
    criterion(
        "10 property suites", passed,
        f"demand violations {violations}, max|dn| {root_gap:.1e}, identities {identity_gap:.1e}, "
        f"labor productivity equal {labor_equal}, land ratio gap {land_gap:.1e}",
    )
    assert passed


def test_growth_factor_is_consistent(params):
    # the baseline calibration targets 0.35% annual Malthusian population growth
    assert annual(malthus_growth(params)) == pytest.approx(0.0035, abs=1e-12)
