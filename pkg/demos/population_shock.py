"""
Losing people is like gaining land
==================================

Cutting population by 1/2.74 leaves every per-household series where a
2.74-fold land shock would put it.
"""

import numpy as np

from malthusgrowth import ShockSchedule, build_parameters, equivalent_population_shock, simulate

params, start = build_parameters()
factor = equivalent_population_shock(2.74)
print(f"population multiplier {factor:.5f} ({100 * (1 - factor):.1f}% lost)")

land = simulate(start, ShockSchedule.land_shock(10, 2.74), 26, params)
plague = simulate(start, ShockSchedule.population_shock(10, factor), 26, params)

for name in ("income", "fertility", "ell_a_emp"):
    a, b = getattr(land, name), getattr(plague, name)
    print(f"{name:10s} max relative gap {np.max(np.abs(a - b) / np.abs(a)):.1e}")

# levels differ: the plague economy is smaller but equally rich
print(land.population[-1] / plague.population[-1])
