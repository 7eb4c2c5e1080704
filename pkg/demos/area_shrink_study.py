"""Area-shrinking study: keep 20x20 cells and 16 turbines, shrink the cell
edge, re-optimize at every size, and fit a cubic to the power-vs-edge curve.

The farm area falls with the square of the edge while the optimized power
falls far more slowly, so a large share of the area can be given up for a
small power sacrifice.
"""

from windlayout import GAParams, TurbineSpec, weibull_rose
from windlayout.study import fit_poly3, power_drop_at_budget, shrink_sweep

spec = TurbineSpec()
scenario = weibull_rose()  # case-4 style wind
params = GAParams(max_generations=120, chaos_seed=0.1357)

edges = [200.0, 180.0, 160.0, 145.0, 130.0, 115.0, 100.0]
sweep = shrink_sweep(edges, scenario, spec, params, repeats=2)

print("edge (m)  area fraction  power fraction  stderr (kW)")
for p in sweep:
    print(f"{p.edge:>8.0f}  {p.area_fraction:>13.4f}  {p.power_fraction:>14.5f}  {p.stderr:>10.1f}")

fit = fit_poly3([(p.edge, p.power_fraction) for p in sweep])
print(f"\ncubic fit coefficients (high to low): {[f'{c:.3e}' for c in fit.coefficients]}")
print(f"fit residual norm: {fit.residual_norm:.2e}")

for budget in (0.01, 0.02, 0.05):
    edge, saving = power_drop_at_budget(sweep, budget)
    print(f"allowed power drop {budget:.0%}: edge {edge:.0f} m, area saving {saving:.1%}")
