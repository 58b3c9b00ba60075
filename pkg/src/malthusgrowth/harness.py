"""Running configs, CSV serialization, report rendering and parameter sweeps."""

from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import fields, replace

from .calibration import SHOCK_PERIOD, CalibrationInput, build_parameters, validate
from .errors import ConfigError, DomainError
from .model import Regime
from .scenario import ShockEvent, ShockSchedule, compare_economies, growth_statistics, simulate
from .steady_state import steady_state_report

CSV_COLUMNS = (
    "t", "year", "regime", "N", "n", "ell_a_emp", "ell_a_pc", "L_a", "L_m",
    "p_a", "y", "y_index", "c_a", "c_m", "x_index", "A_a", "A_m", "Z",
)
SHOCK_PARAMS = ("land_multiplier", "population_multiplier")
SWEEP_PARAMS = tuple(f.name for f in fields(CalibrationInput)) + SHOCK_PARAMS
SWEEP_COLUMNS = (
    "index", "param", "value", "final_regime", "escaped", "escape_period", "growth",
    "n_ss", "escape_ratio", "escape_land_multiplier", "malthus_exists", "valid",
)


def fmt(x):
    """17 significant digits: enough to round-trip any binary64 value."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if x is None:
        return ""
    return format(float(x), ".17g")


def run_config(config):
    """Build parameters from ``config`` and simulate it; returns ``(params, trajectory)``."""
    p, s0 = build_parameters(config.calibration)
    traj = simulate(s0, config.shocks, config.horizon, p, base_year=config.base_year)
    return p, traj


def trajectory_rows(traj):
    y_index, x_index = traj.income_index, traj.intermediates_index
    for i, r in enumerate(traj.rows):
        s, o = r.state, r.outcome
        year = traj.year[i]
        year = int(year) if float(year).is_integer() else float(year)
        yield (
            s.t, year, o.regime.value, s.n_pop, o.n_fert, o.ell_a_emp, o.ell_a_pc,
            o.l_a, o.l_m, o.p_a, o.income, y_index[i], o.c_a, o.c_m, x_index[i],
            s.a_a, s.a_m, s.z_land,
        )


def trajectory_csv(traj):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in trajectory_rows(traj):
        w.writerow([v if isinstance(v, str) else fmt(v) for v in row])
    return buf.getvalue()


def write_text(path, text):
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ConfigError(f"cannot write {path}: {exc}") from exc


def steady_state_lines(config):
    """``key = value`` lines describing the steady state of ``config``'s calibration."""
    c = config.calibration
    p, s0 = build_parameters(c)
    rep = steady_state_report(p, c.a_m0, c.a_a0, c.z0)
    years = p.years_per_period

    def annual(g):
        return g ** (1.0 / years) - 1.0 if g > 0 and math.isfinite(g) else math.nan

    lines = [
        "# Malthusian steady state and regime thresholds",
        f"# per-period factors cover {fmt(years)} years; *_annual are net annual rates",
        f"n_ss = {fmt(rep.n_ss)}",
        f"n_ss_annual = {fmt(annual(rep.n_ss))}",
        f"n_tilde_ss = {fmt(rep.n_tilde_ss)}",
        f"n_escape = {fmt(rep.n_escape)}",
        f"n_escape_annual = {fmt(annual(rep.n_escape))}",
        f"n_tilde_escape = {fmt(rep.n_tilde_escape)}",
        f"n_tilde_starve = {fmt(rep.n_tilde_starve)}",
        f"escape_ratio = {fmt(rep.escape_ratio)}",
        f"n_tilde_starve/n_tilde_ss = {fmt(rep.starve_ratio)}",
        f"escape_land_multiplier = {fmt(rep.escape_land_multiplier)}",
        f"malthus_exists = {fmt(rep.malthus_exists)}",
        f"malthus_boundary_c_bar_m_over_a_m = {fmt((1 - p.gamma) * p.eta * rep.n_ss / p.gamma)}",
        f"sustainability_bound = {fmt(rep.sustainability_bound)}",
        f"sustainability_bound_annual = {fmt(annual(rep.sustainability_bound))}",
        f"long_run_fertility = {fmt(p.gamma / p.eta)}",
        f"long_run_fertility_annual = {fmt(annual(p.gamma / p.eta))}",
        f"g_a = {fmt(p.g_a)}",
        f"g_m = {fmt(p.g_m)}",
        f"eta = {fmt(p.eta)}",
        f"mu = {fmt(p.mu)}",
    ]
    for check in validate(p, s0).checks:
        lines.append(f"check.{check.name} = {'pass' if check.passed else 'fail'} ({fmt(check.value)})")
    return lines


def compare_lines(traj_1, traj_2):
    cmp = compare_economies(traj_1, traj_2)
    if cmp.crossing_period is None:
        lines = ["no crossing"]
    else:
        lines = [f"population crossing at t={cmp.crossing_period}"]
    lines.append("t,regime_1,regime_2,N_1,N_2,income_ratio")
    for i, t in enumerate(traj_1.t):
        lines.append(
            f"{t},{cmp.regimes_1[i].value},{cmp.regimes_2[i].value},"
            f"{fmt(traj_1.population[i])},{fmt(traj_2.population[i])},{fmt(cmp.income_ratio[i])}"
        )
    return lines


def with_param(config, name, value):
    """Copy of ``config`` with one calibration field or shock multiplier replaced.

    Shock multipliers replace the first land (or population) shock in the
    schedule, adding one at the default shock period if there is none.
    """
    if name not in SWEEP_PARAMS:
        raise ConfigError(f"unknown parameter {name!r}; valid names: {', '.join(SWEEP_PARAMS)}")
    if name not in SHOCK_PARAMS:
        return replace(config, calibration=replace(config.calibration, **{name: float(value)}))
    events = list(config.shocks.events)
    for i, e in enumerate(events):
        if getattr(e, name) != 1.0:
            events[i] = replace(e, **{name: float(value)})
            break
    else:
        target = next((i for i, e in enumerate(events) if e.period == SHOCK_PERIOD), None)
        if target is None:
            events.append(ShockEvent(SHOCK_PERIOD, **{name: float(value)}))
            events.sort(key=lambda e: e.period)
        else:
            events[target] = replace(events[target], **{name: float(value)})
    try:
        schedule = ShockSchedule(tuple(events))
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
    return replace(config, shocks=schedule)


def sweep_cell(config, name, value, index=0):
    """Summary of one sweep cell as a dict keyed by :data:`SWEEP_COLUMNS`."""
    cell = with_param(config, name, value)
    p, traj = run_config(cell)
    c = cell.calibration
    rep = steady_state_report(p, c.a_m0, c.a_a0, c.z0)
    escape = traj.first_period(Regime.NON_MALTHUSIAN)
    t0, t1 = cell.growth_window
    try:
        growth = growth_statistics(traj, t0, t1)
    except DomainError:
        growth = math.nan
    return {
        "index": index,
        "param": name,
        "value": float(value),
        "final_regime": traj.regimes[-1].value,
        "escaped": escape is not None,
        "escape_period": escape,
        "growth": growth,
        "n_ss": rep.n_ss,
        "escape_ratio": rep.escape_ratio,
        "escape_land_multiplier": rep.escape_land_multiplier,
        "malthus_exists": rep.malthus_exists,
        "valid": validate(p, traj.rows[0].pre_shock).ok,
    }


def _cell_args(args):
    return sweep_cell(*args)


def sweep(config, name, grid, jobs=1):
    """Evaluate every grid value independently; rows come back in grid order."""
    grid = list(grid)
    if not grid:
        raise ConfigError("sweep grid is empty")
    if name not in SWEEP_PARAMS:
        raise ConfigError(f"unknown parameter {name!r}; valid names: {', '.join(SWEEP_PARAMS)}")
    args = [(config, name, v, i) for i, v in enumerate(grid)]
    if jobs <= 1:
        return [_cell_args(a) for a in args]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_cell_args, args))


def sweep_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_COLUMNS)
    for row in rows:
        w.writerow([v if isinstance(v, str) else fmt(v) for v in (row[k] for k in SWEEP_COLUMNS)])
    return buf.getvalue()
