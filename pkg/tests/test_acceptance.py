"""Acceptance gate: every criterion at its stated tolerance.

Each test prints one PASS/FAIL line (run with ``pytest -s`` to see them all);
the assertion carries the same information for plain runs.
"""

import math
import time

import numpy as np

from windlayout.cli import main
from windlayout.geometry import circle_overlap_area
from windlayout.optimizer import (
    ChaosStream,
    GAParams,
    chaotic_layout,
    initialize_population,
    mutate_twice,
    run_aga,
    run_conventional_ga,
)
from windlayout.oracle import exhaustive_best, mc_overlap, straight_line_eval
from windlayout.power import FarmEvaluator
from windlayout.scenario import (
    build_grid,
    case_scenario,
    single_bin,
    uniform_directions,
    weibull_rose,
)
from windlayout.study import power_drop_at_budget, shrink_sweep

TARGET = 1.0 - 1e-9  # full efficiency up to accumulated rounding


def report(number, ok, detail):
    line = f"ACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    assert ok, line


def seeds_avoiding_fixed_points(count):
    seeds = np.linspace(0.03, 0.97, count)
    assert all(min(abs(s - f) for f in (0.25, 0.5, 0.75)) > 1e-6 for s in seeds)
    return [float(s) for s in seeds]


def generations_to_target(trace):
    for t in trace:
        if t.best_eta >= TARGET:
            return t.generation
    return None


def test_criterion_1_case1_reaches_full_efficiency(spec, default_grid):
    scenario = case_scenario("case1")
    hits, worst_time = 0, 0.0
    gens = []
    for seed in seeds_avoiding_fixed_points(10):
        params = GAParams(target_efficiency=1.0, max_generations=30, chaos_seed=seed)
        t0 = time.perf_counter()
        _, trace = run_aga(params, default_grid, scenario, spec, 16)
        worst_time = max(worst_time, time.perf_counter() - t0)
        reached = generations_to_target(trace)
        gens.append(reached)
        if reached is not None and reached <= 30:
            hits += 1
    ok = hits >= 8 and worst_time <= 60.0
    report(1, ok, f"case1 eta=1.0 in <=30 gens for {hits}/10 seeds "
                  f"(gens={gens}, slowest seed {worst_time:.1f}s <= 60s)")


def test_criterion_2_case2_full_efficiency_with_wakes(spec, default_grid):
    scenario = case_scenario("case2")
    params = GAParams(target_efficiency=1.0, max_generations=10)
    best, trace = run_aga(params, default_grid, scenario, spec, 16)
    reached = generations_to_target(trace)
    result = FarmEvaluator(default_grid.points, scenario, spec).evaluate(best.occupied)
    # waked pairs are allowed as long as no turbine drops off the rated
    # plateau, which is the testable content of "u_i >= rated speed"
    all_rated = bool(np.all(result.per_turbine_power == spec.rated_power))
    waked = int(np.sum(result.per_turbine_speed < 20.0))
    ok = reached is not None and reached <= 10 and all_rated
    report(2, ok, f"case2 eta=1.0 at generation {reached} (<=10), "
                  f"{waked} waked turbines all still at rated power: {all_rated}, "
                  f"min u_i={result.per_turbine_speed.min():.2f} m/s")


def test_criterion_3_case3_efficiency_band(spec, default_grid):
    params = GAParams(max_generations=200)
    _, trace = run_aga(params, default_grid, case_scenario("case3"), spec, 16)
    eta = trace[-1].best_eta
    ok = eta >= 0.965
    report(3, ok, f"case3 best eta={eta:.4f} >= 0.965 within 200 generations")


def test_criterion_4_case4_efficiency_band(spec, default_grid):
    params = GAParams(max_generations=200)
    _, trace = run_aga(params, default_grid, case_scenario("case4"), spec, 16)
    eta = trace[-1].best_eta
    ok = eta >= 0.965
    report(4, ok, f"case4 best eta={eta:.4f} >= 0.965 within 200 generations")


def test_criterion_5_relocation_ablation(spec, default_grid):
    # Operator-isolating configuration: the mutation slots are zeroed so the
    # paired runs differ only in relocation vs random replacement, the
    # mechanism under comparison. Both arms share the identical split.
    scenario = case_scenario("case1")
    wins, stuck = 0, 0
    for seed in seeds_avoiding_fixed_points(20):
        params = GAParams(population=120, elites=12, relocations=96, aliens=12,
                          target_efficiency=1.0, max_generations=100, chaos_seed=seed)
        _, aga_trace = run_aga(params, default_grid, scenario, spec, 16)
        _, conv_trace = run_conventional_ga(params, default_grid, scenario, spec, 16)
        aga_gens = generations_to_target(aga_trace)
        conv_gens = generations_to_target(conv_trace)
        if aga_gens is not None and (conv_gens is None or aga_gens < conv_gens):
            wins += 1
        if conv_gens is None:
            stuck += 1
    ok = wins >= 18 and stuck >= 10
    report(5, ok, f"AGA strictly faster in {wins}/20 paired seeds (need >=18); "
                  f"ablated GA stuck below eta=1 within 100 gens in {stuck}/20 (need >=10)")


def test_criterion_6_shrink_study(spec):
    scenario = case_scenario("case4")
    params = GAParams(max_generations=150)
    edges = [200.0, 180.0, 160.0, 145.0, 130.0, 115.0, 100.0]
    sweep = shrink_sweep(edges, scenario, spec, params, repeats=3)
    at_145 = next(p for p in sweep if p.edge == 145.0)
    area_exact = at_145.area_fraction == (145.0 / 200.0) ** 2
    area_value = abs(at_145.area_fraction - 0.525625) < 1e-12
    drop_145 = 1.0 - at_145.power_fraction
    edge, saving = power_drop_at_budget(sweep, 0.05)
    ok = area_exact and area_value and drop_145 <= 0.02 and saving >= 0.50
    report(6, ok, f"edge 145 m: area_fraction={at_145.area_fraction!r} (=0.525625 exactly), "
                  f"power drop {100 * drop_145:.2f}% <= 2%; "
                  f"5% budget -> edge {edge:.0f} m, area saving {100 * saving:.0f}% >= 50%")


def test_criterion_7_oracle_equivalence(spec, default_grid):
    rng = np.random.default_rng(7)
    matches = 0
    for _ in range(10):
        cells = int(rng.integers(3, 6))  # 16, 25 or 36 candidate points
        edge = float(rng.uniform(90, 140))
        small = build_grid(cells * edge, cells)
        scenario = uniform_directions(float(rng.uniform(8, 13)), 12)
        _, opt_eta = exhaustive_best(small, 3, scenario, spec)
        params = GAParams(population=60, elites=6, relocations=18, aliens=6,
                          max_generations=500, target_efficiency=opt_eta,
                          chaos_seed=0.1357)
        _, trace = run_aga(params, small, scenario, spec, 3)
        if trace[-1].best_eta >= opt_eta - 1e-12:
            matches += 1

    scenario = case_scenario("case3")
    evaluator = FarmEvaluator(default_grid.points, scenario, spec)
    worst = 0.0
    for _ in range(50):
        idx = np.sort(rng.choice(default_grid.count, size=16, replace=False))
        fast = evaluator.evaluate(idx)
        slow = straight_line_eval(default_grid.points[idx], scenario, spec)
        worst = max(
            worst,
            abs(fast.total_power - slow.total_power) / slow.total_power,
            abs(fast.efficiency - slow.efficiency) / slow.efficiency,
            float(np.max(np.abs(fast.per_turbine_power - slow.per_turbine_power)
                         / slow.per_turbine_power)),
        )
    ok = matches >= 9 and worst <= 1e-9
    report(7, ok, f"AGA reached the exhaustive optimum on {matches}/10 small instances "
                  f"(need >=9); evaluator vs straight-line max rel dev {worst:.2e} <= 1e-9")


def test_criterion_8_geometry_cross_checks(rng):
    failures = 0
    for _ in range(100):
        r = float(rng.uniform(10, 200))
        R = float(rng.uniform(10, 200))
        d = float(rng.uniform(0, r + R + 30))
        est, se = mc_overlap(r, R, d, 10**4, seed=int(rng.integers(2**31)))
        if abs(circle_overlap_area(r, R, d) - est) > max(3.0 * se, 1e-9):
            failures += 1

    eps, worst_jump = 1e-6, 0.0
    for _ in range(200):
        r = float(rng.uniform(20, 150))
        R = float(rng.uniform(20, 150))
        for boundary in (r + R, abs(r - R)):
            lo = circle_overlap_area(r, R, max(boundary - eps, 0.0))
            hi = circle_overlap_area(r, R, boundary + eps)
            worst_jump = max(worst_jump, abs(hi - lo))
    ok = failures == 0 and worst_jump <= 1e-3
    report(8, ok, f"overlap within 3 standard errors on 100/{100 - failures} random triples; "
                  f"worst regime-boundary jump {worst_jump:.2e} m^2 <= 1e-3")


def test_criterion_9_byte_identical_outputs(tmp_path):
    out_a, out_b = str(tmp_path / "a"), str(tmp_path / "b")
    assert main(["optimize", "--out", out_a]) == 0  # default config: case 1
    assert main(["optimize", "--out", out_b]) == 0
    same = all(
        (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()
        for name in ("layout.csv", "trace.jsonl")
    )
    report(9, same, "two default-config runs wrote byte-identical layout.csv and trace.jsonl")


def test_criterion_10_property_suites(spec, rng):
    trials = 10**4

    # cardinality invariance of every operator that produces layouts
    stream = ChaosStream(0.2718)
    violations = 0
    layout = chaotic_layout(stream, 60, 9)
    for i in range(trials):
        op = i % 3
        if op == 0:
            layout = mutate_twice(layout, stream)
        elif op == 1:
            layout = chaotic_layout(stream, 60, 9)
        else:
            fresh = initialize_population(
                GAParams(population=1, elites=1, relocations=0, aliens=0), 60, 9, stream
            )[0]
            layout = fresh
        if layout.n != 9 or len(set(layout.occupied)) != 9:
            violations += 1
    cardinality_ok = violations == 0

    # elitism monotonicity over >= 10^4 generation steps
    grid = build_grid(900.0, 3)
    scenario = single_bin(0.0, 12.0)
    steps, regressions = 0, 0
    seed_stream = ChaosStream(0.6180)
    while steps < trials:
        params = GAParams(population=10, elites=2, relocations=3, aliens=2,
                          max_generations=100, chaos_seed=seed_stream.next())
        runner = run_aga if steps % 2 == 0 else run_conventional_ga
        _, trace = runner(params, grid, scenario, spec, 3)
        best = [t.best_eta for t in trace]
        regressions += sum(1 for a, b in zip(best, best[1:]) if b < a - 1e-15)
        steps += len(best) - 1
    elitism_ok = regressions == 0

    # u_i <= v for random layouts, directions and speeds
    from windlayout.wake import effective_speeds

    speed_violations = 0
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        pos = rng.uniform(0, 2500, size=(n, 2))
        v = float(rng.uniform(0, 26))
        u = effective_speeds(pos, float(rng.uniform(0, 360)), v, spec)
        if not np.all(u <= v + 1e-12):
            speed_violations += 1
    speeds_ok = speed_violations == 0

    # scenario constructors always normalise their weights
    weight_violations = 0
    for i in range(trials):
        kind = i % 3
        if kind == 0:
            sc = single_bin(float(rng.uniform(0, 360)), float(rng.uniform(0, 30)))
        elif kind == 1:
            sc = uniform_directions(float(rng.uniform(1, 25)), int(rng.integers(1, 30)))
        else:
            sc = weibull_rose(float(rng.uniform(1.3, 3.0)), float(rng.uniform(6, 14)),
                              [0.0, 5.0, 10.0, 15.0, 20.0, 30.0])
        if abs(math.fsum(w for _, _, w in sc.bins) - 1.0) > 1e-9:
            weight_violations += 1
    weights_ok = weight_violations == 0

    ok = cardinality_ok and elitism_ok and speeds_ok and weights_ok
    report(10, ok, f"10^4-trial suites: cardinality ok={cardinality_ok}, "
                   f"elitism monotone over {steps} generation steps ok={elitism_ok}, "
                   f"u<=v ok={speeds_ok}, weight normalisation ok={weights_ok}")
