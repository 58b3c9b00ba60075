"""
How much land is enough?
========================

Sweep the size of the land shock and the taste shifter on manufactures.
"""

from malthusgrowth.config import preset
from malthusgrowth.harness import sweep

for row in sweep(preset("economy1"), "land_multiplier", [1.5, 2.0, 2.45, 2.46, 2.74, 3.5]):
    print(f"land x{row['value']:<5} escaped={row['escaped']!s:5} period={row['escape_period']}")

###############################################################################
# A weak taste for manufactures puts the escape threshold above the steady
# state, so the Malthusian steady state no longer exists.

for row in sweep(preset("table1"), "c_bar_m", [0.5, 0.8, 0.86, 1.0, 1.35]):
    print(f"c_bar_m={row['value']:<5} ratio={row['escape_ratio']:.4f} malthus_exists={row['malthus_exists']}")
