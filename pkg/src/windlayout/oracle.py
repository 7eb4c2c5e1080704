"""Independent brute-force checks used by tests and the verify command:
Monte-Carlo disc overlap, a naive re-evaluation of the speed/power chain, and
exhaustive search on small instances.

The evaluation path here deliberately shares nothing with the wake module
beyond the geometry primitives: plain Python loops, scalar math, formulas
written out inline."""

import itertools
import math

import numpy as np

from .geometry import circle_overlap_area, rotate_frame
from .optimizer import Layout
from .power import EvaluationResult


def mc_overlap(wake_radius: float, rotor_radius: float, offset: float, samples: int, seed: int = 0):
    """Monte-Carlo estimate of the wake/rotor disc intersection area.

    Rejection-samples the rotor disc uniformly and counts hits inside the
    wake disc; returns (area estimate, binomial standard error) in m**2.
    """
    if samples < 10**4:
        raise ValueError("use at least 1e4 samples")
    rng = np.random.default_rng(seed)
    radii = rotor_radius * np.sqrt(rng.random(samples))
    angles = 2.0 * np.pi * rng.random(samples)
    px = offset + radii * np.cos(angles)  # wake disc centred at the origin
    py = radii * np.sin(angles)
    frac = float(np.mean(px * px + py * py <= wake_radius * wake_radius))
    rotor_area = math.pi * rotor_radius**2
    stderr = rotor_area * math.sqrt(frac * (1.0 - frac) / samples)
    return rotor_area * frac, stderr


def _power_kw(spec, v: float) -> float:
    # piecewise curve written out again on purpose
    if v < spec.cut_in or v >= spec.cut_out:
        return 0.0
    if v >= spec.rated_speed:
        return spec.rated_power
    p = 0.0
    for c in spec.power_poly:
        p = p * v + c
    return min(max(p, 0.0), spec.rated_power)


def straight_line_eval(positions, scenario, spec, numerator: str = "standard") -> EvaluationResult:
    """Literal re-evaluation of the whole chain, one pair at a time."""
    pts = [(float(p[0]), float(p[1])) for p in np.asarray(positions, dtype=float)]
    n = len(pts)
    k = 0.5 / math.log(spec.hub_height / spec.surface_roughness)
    R = spec.rotor_radius
    rotor_area = math.pi * R * R
    root = math.sqrt(1.0 - spec.thrust_coefficient)
    numer = 1.0 + root if numerator == "paper_literal" else 1.0 - root

    speed_exp = [0.0] * n
    power_exp = [0.0] * n
    for theta, v, w in scenario.bins:
        rotated = [rotate_frame(p, theta) for p in pts]
        for i in range(n):
            sq_sum = 0.0
            for j in range(n):
                if i == j:
                    continue
                d = rotated[j].y - rotated[i].y
                if d <= 1e-6:  # strictly-downwind rule, same guard band
                    continue
                area = circle_overlap_area(R + k * d, R, abs(rotated[i].x - rotated[j].x))
                deficit = (numer / (1.0 + k * d / R) ** 2) * (area / rotor_area)
                sq_sum += deficit * deficit
            u = v * (1.0 - min(math.sqrt(sq_sum), 1.0))
            speed_exp[i] += w * u
            power_exp[i] += w * _power_kw(spec, u)

    total = sum(power_exp)
    unit = sum(w * _power_kw(spec, v) for _, v, w in scenario.bins)
    if unit <= 0.0:
        raise ValueError("denominator degenerate: no bin yields wake-free power")
    return EvaluationResult(
        np.array(speed_exp), np.array(power_exp), total, total / (n * unit)
    )


def exhaustive_best(grid, n: int, scenario, spec, numerator: str = "standard", cap: int = 10**6):
    """Globally best layout by enumerating every n-subset of the grid.

    Ties resolve to the lexicographically first index tuple. Instances whose
    subset count exceeds ``cap`` are rejected.
    """
    m = grid.count
    if math.comb(m, n) > cap:
        raise ValueError(f"C({m}, {n}) exceeds the enumeration cap {cap}")
    best_combo, best_eta = None, -1.0
    for combo in itertools.combinations(range(m), n):
        eta = straight_line_eval(grid.points[list(combo)], scenario, spec, numerator).efficiency
        if eta > best_eta:
            best_combo, best_eta = combo, eta
    return Layout(best_combo, m), best_eta
