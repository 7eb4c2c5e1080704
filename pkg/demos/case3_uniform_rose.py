"""Case 3: 12 m/s wind uniformly distributed over twelve 30-degree sectors.

With every direction in play the wake impact cannot be avoided completely;
the optimizer trades the directions off against each other and settles a few
points short of 100%.
"""

from windlayout import FarmEvaluator, GAParams, TurbineSpec, build_grid, run_aga, uniform_directions

spec = TurbineSpec()
grid = build_grid(4000.0, 20)
scenario = uniform_directions(v=12.0, sectors=12)

params = GAParams(max_generations=200, chaos_seed=0.1357)
best, trace = run_aga(params, grid, scenario, spec, n_turbines=16)

print("generation  best eta (every 20th)")
for t in trace[::20]:
    print(f"{t.generation:>10}  {t.best_eta:.6f}")

result = FarmEvaluator(grid.points, scenario, spec).evaluate(best.occupied)
print(f"\nbest efficiency:  {result.efficiency:.4%}")
print(f"expected power:   {result.total_power / 1000.0:.2f} MW")
print(f"per-turbine expected power spread: "
      f"{result.per_turbine_power.min():.0f} .. {result.per_turbine_power.max():.0f} kW")
