"""Turbine power curve, expected farm output over a wind distribution, farm
efficiency, and the fixed-count cost curve."""

import math
from dataclasses import dataclass

import numpy as np

from .wake import TurbineSpec, squared_deficit_matrix


@dataclass(frozen=True)
class PowerCurve:
    """Piecewise power curve: zero below cut-in, rated plateau above rated
    speed, zero at/after cut-out, quartic fit in between (clamped to
    [0, p_max] since the fit slightly overshoots the plateau near rated)."""

    cut_in: float = 3.0
    rated_speed: float = 14.0
    cut_out: float = 25.0
    p_max: float = 5000.0  # kW
    poly: tuple = (-0.9114, 21.6654, -113.1189, 201.1211, -55.0267)


def curve_of(spec: TurbineSpec) -> PowerCurve:
    """Power curve carried by a turbine spec."""
    return PowerCurve(
        cut_in=spec.cut_in,
        rated_speed=spec.rated_speed,
        cut_out=spec.cut_out,
        p_max=spec.rated_power,
        poly=tuple(spec.power_poly),
    )


def power_values(curve: PowerCurve, speeds) -> np.ndarray:
    """Vectorised power output in kW for an array of wind speeds."""
    u = np.asarray(speeds, dtype=float)
    p = np.clip(np.polyval(curve.poly, u), 0.0, curve.p_max)
    p = np.where(u < curve.cut_in, 0.0, p)
    p = np.where(u >= curve.rated_speed, curve.p_max, p)
    if math.isfinite(curve.cut_out):
        p = np.where(u >= curve.cut_out, 0.0, p)
    return p


def power_at(curve: PowerCurve, v: float) -> float:
    """Power output in kW at a single wind speed."""
    if not (math.isfinite(v) and v >= 0.0):
        raise ValueError(f"wind speed must be finite and >= 0, got {v!r}")
    return float(power_values(curve, v))


def cost_curve(n_turbines: int) -> float:
    """Dimensionless installation cost for n turbines,
    n * (2/3 + 1/3 * exp(-0.00174 n**2)); approaches 2n/3 for large farms."""
    if n_turbines < 1:
        raise ValueError("n_turbines must be >= 1")
    n = float(n_turbines)
    return n * (2.0 / 3.0 + math.exp(-0.00174 * n * n) / 3.0)


@dataclass
class EvaluationResult:
    """Farm-level evaluation under a wind scenario.

    per_turbine_speed and per_turbine_power are expectations over the wind
    distribution (for a single-bin scenario they are just that bin's values).
    """

    per_turbine_speed: np.ndarray  # m/s
    per_turbine_power: np.ndarray  # kW
    total_power: float  # kW
    efficiency: float


class FarmEvaluator:
    """Scores layouts over a fixed candidate-point set.

    Pairwise wake tables are precomputed once per wind direction, so scoring
    an index subset costs only a submatrix gather plus the power curve. The
    per-direction deficit does not depend on wind speed, which lets one table
    serve every speed bin of that direction.
    """

    def __init__(self, points, scenario, spec: TurbineSpec, numerator: str = "standard"):
        self.points = np.asarray(points, dtype=float)
        self.scenario = scenario
        self.spec = spec
        self.curve = curve_of(spec)

        by_theta: dict = {}
        for theta, v, w in scenario.bins:
            by_theta.setdefault(theta, []).append((v, w))
        self._tables = []
        self._speeds = []
        self._weights = []
        for theta, pairs in by_theta.items():
            self._tables.append(squared_deficit_matrix(self.points, theta, spec, numerator))
            self._speeds.append(np.array([v for v, _ in pairs]))
            self._weights.append(np.array([w for _, w in pairs]))

        # stacked (T, ...) arrays when every direction carries the same number
        # of speed bins, which lets evaluate() run as a handful of array ops
        if len({len(s) for s in self._speeds}) == 1:
            self._stack = np.stack(self._tables)
            self._sp = np.stack(self._speeds)
            self._wt = np.stack(self._weights)
        else:
            self._stack = None

        # wake-free expected power of one turbine, the per-turbine efficiency
        # denominator
        self.unit_power = float(
            sum((w * power_values(self.curve, s)).sum() for s, w in zip(self._speeds, self._weights))
        )

    def _indices(self, indices) -> np.ndarray:
        if indices is None:
            return np.arange(len(self.points))
        idx = np.asarray(indices, dtype=int)
        if idx.ndim != 1 or len(idx) == 0:
            raise ValueError("indices must be a non-empty 1-d sequence")
        if len(np.unique(idx)) != len(idx):
            raise ValueError("indices must be distinct")
        return idx

    def directional_deficits(self, indices=None) -> list:
        """Combined (clamped) deficit per turbine for each wind direction."""
        idx = self._indices(indices)
        if self._stack is not None:
            sub = self._stack[:, idx[:, None], idx[None, :]]
            return list(np.minimum(np.sqrt(sub.sum(axis=2)), 1.0))
        return [
            np.minimum(np.sqrt(table[np.ix_(idx, idx)].sum(axis=1)), 1.0)
            for table in self._tables
        ]

    def evaluate(self, indices=None) -> EvaluationResult:
        """Full farm evaluation for the given candidate indices."""
        idx = self._indices(indices)
        n = len(idx)
        if self.unit_power <= 0.0:
            raise ValueError(
                "denominator degenerate: scenario has no expected wake-free power"
            )
        if self._stack is not None:
            sub = self._stack[:, idx[:, None], idx[None, :]]
            deficit = np.minimum(np.sqrt(sub.sum(axis=2)), 1.0)  # (T, n)
            u = self._sp[:, :, None] * (1.0 - deficit[:, None, :])  # (T, V, n)
            speed_exp = np.einsum("tv,tvn->n", self._wt, u)
            power_exp = np.einsum("tv,tvn->n", self._wt, power_values(self.curve, u))
        else:
            speed_exp = np.zeros(n)
            power_exp = np.zeros(n)
            for deficit, speeds, weights in zip(
                self.directional_deficits(idx), self._speeds, self._weights
            ):
                u = speeds[:, None] * (1.0 - deficit[None, :])
                speed_exp += weights @ u
                power_exp += weights @ power_values(self.curve, u)
        total = float(power_exp.sum())
        return EvaluationResult(speed_exp, power_exp, total, total / (n * self.unit_power))

    def per_turbine_power(self, indices=None) -> np.ndarray:
        """Expected power per turbine, kW, ordered like the given indices."""
        return self.evaluate(indices).per_turbine_power


def expected_farm_power(positions, scenario, spec: TurbineSpec, numerator: str = "standard"):
    """Expected farm power and efficiency of turbines at explicit positions.

    Evaluates sum over bins of f_w(theta, v) * sum_i p_g(u_i) for the given
    (n, 2) position array under the scenario's joint wind distribution.
    """
    return FarmEvaluator(positions, scenario, spec, numerator).evaluate()


def efficiency(result: EvaluationResult, n_turbines: int, scenario, curve: PowerCurve) -> float:
    """Farm efficiency: expected power over the wake-free expected power."""
    if n_turbines < 1:
        raise ValueError("n_turbines must be >= 1")
    denom = n_turbines * sum(w * power_at(curve, v) for _, v, w in scenario.bins)
    if denom <= 0.0:
        raise ValueError("denominator degenerate: no bin yields wake-free power")
    return result.total_power / denom
