"""
Malthusian steady state and its thresholds
==========================================

Build the baseline calibration and look at where the regimes begin and end.
"""

from malthusgrowth import build_parameters, steady_state_report, validate

params, start = build_parameters()
print(params)

# every consistency check should pass for the baseline numbers
report = validate(params, start)
for check in report.checks:
    print(f"{check.name:20s} {'ok' if check.passed else 'FAILED'}  {check.detail}")

###############################################################################
# Detrended populations bracket the steady state: below the escape level
# households buy manufactures, above the starvation level they cannot eat.

ss = steady_state_report(params)
print("steady-state population   ", ss.n_tilde_ss)
print("escape / steady state     ", ss.escape_ratio)
print("starvation / steady state ", ss.starve_ratio)
print("land multiplier to escape ", ss.escape_land_multiplier)

# annualized population growth in the steady state
print("annual growth", ss.n_ss ** (1 / params.years_per_period) - 1)
