"""Convergence comparison on case 1: worst-turbine relocation vs replacing
that step with freshly generated random individuals.

Run with the mutation slots zeroed, the two loops differ in exactly one
operator. Relocation reaches 100% in a few generations; the ablated loop has
to wait for a lucky random draw and stalls below it.
"""

from windlayout import GAParams, TurbineSpec, build_grid, single_bin
from windlayout.study import convergence_comparison

spec = TurbineSpec()
grid = build_grid(4000.0, 20)
scenario = single_bin(theta=0.0, v=12.0)

params = GAParams(population=120, elites=12, relocations=96, aliens=12,
                  target_efficiency=1.0, max_generations=60)
pairs = convergence_comparison(grid, scenario, spec, params,
                               seeds=[0.1357, 0.4242, 0.8765], n_turbines=16)

for pair in pairs:
    aga, conv = pair["aga"], pair["conventional"]
    print(f"\nseed {pair['seed']:.4f}")
    print("generation  relocation  ablated")
    horizon = max(len(aga), len(conv))
    for g in range(0, horizon, 5):
        a = aga[min(g, len(aga) - 1)].best_eta
        c = conv[min(g, len(conv) - 1)].best_eta
        print(f"{g:>10}  {a:.6f}    {c:.6f}")
    print(f"relocation reached 1.0 at generation {aga[-1].generation}; "
          f"ablated best after {conv[-1].generation} generations: {conv[-1].best_eta:.4f}")
