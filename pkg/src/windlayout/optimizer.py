"""Layout search over a fixed number of turbines: elitist evolution with
worst-turbine relocation, alien injection and twice-toggle mutation, driven
entirely by a chaotic logistic-map stream; plus the relocation-ablated
baseline used for convergence comparisons."""

import json
from dataclasses import dataclass

import numpy as np

from .power import FarmEvaluator, expected_farm_power

# seeds that land on the logistic map's fixed points or the 0.5 -> 1 -> 0 chain
FORBIDDEN_SEEDS = (0.25, 0.5, 0.75)


class ChaosStream:
    """Deterministic randomness source x -> 4x(1-x).

    The map at full chaos has absorbing/fixed points (0, 1, 0.75); iterates
    landing within 1e-12 of them are nudged by 1e-9 back into the open
    interval so the orbit stays aperiodic.
    """

    __slots__ = ("state",)

    def __init__(self, x0: float):
        if not 0.0 < x0 < 1.0:
            raise ValueError("chaos seed must lie in (0, 1)")
        if x0 in FORBIDDEN_SEEDS:
            raise ValueError(f"chaos seed must avoid {FORBIDDEN_SEEDS}")
        self.state = float(x0)

    def next(self) -> float:
        """Advance the map and return the new state in (0, 1)."""
        x = 4.0 * self.state * (1.0 - self.state)
        if x < 1e-12:
            x += 1e-9
        elif x > 1.0 - 1e-12:
            x = min(x, 1.0) - 1e-9
        elif abs(x - 0.75) < 1e-12:
            x += 1e-9
        self.state = x
        return x

    def index(self, n: int) -> int:
        """Scaled draw rounded half-up, clamped into [0, n-1]."""
        if n < 1:
            raise ValueError("n must be >= 1")
        i = int(self.next() * n + 0.5)
        return n - 1 if i >= n else i


def chaos_next(stream: ChaosStream) -> float:
    """Functional alias for stream.next()."""
    return stream.next()


def chaos_position(stream: ChaosStream, m: int, exclude=frozenset()) -> int:
    """Draw a free cell index in [0, m-1], redrawing while it is excluded.

    Redraws are capped at 10*m; after that the remaining free cells are
    scanned in chaotic-offset order, so termination is guaranteed whenever
    any free cell exists.
    """
    if len(exclude) >= m:
        raise ValueError("exclude covers every cell; no free index exists")
    for _ in range(10 * m):
        idx = stream.index(m)
        if idx not in exclude:
            return idx
    start = stream.index(m)
    for k in range(m):
        idx = (start + k) % m
        if idx not in exclude:
            return idx
    raise RuntimeError("unreachable: a free cell existed")  # pragma: no cover


@dataclass(frozen=True)
class Layout:
    """A fixed-cardinality individual: occupied cell indices over m cells."""

    occupied: tuple
    m: int

    def __post_init__(self):
        occ = tuple(sorted(int(i) for i in self.occupied))
        if len(set(occ)) != len(occ):
            raise ValueError("occupied indices must be distinct")
        if occ and not (0 <= occ[0] and occ[-1] < self.m):
            raise ValueError("occupied indices must lie in [0, m)")
        object.__setattr__(self, "occupied", occ)

    @property
    def n(self) -> int:
        return len(self.occupied)

    def positions(self, grid) -> np.ndarray:
        """(n, 2) coordinates of the occupied cells on a grid."""
        return grid.points[list(self.occupied)]


@dataclass(frozen=True)
class GAParams:
    """Search-loop parameters; population splits follow the step structure
    elites / relocations / aliens, mutants filling the remainder."""

    population: int = 120
    elites: int = 12
    relocations: int = 36
    aliens: int = 12
    max_generations: int = 200
    target_efficiency: float | None = None
    chaos_seed: float = 0.1357
    mutation_parent: str = "elite_pool"  # or "best_only"

    def __post_init__(self):
        if min(self.population, self.relocations, self.aliens, self.max_generations) < 0:
            raise ValueError("counts must be non-negative")
        if self.elites < 1:
            raise ValueError("at least one elite is required")
        if self.elites + self.relocations + self.aliens > self.population:
            raise ValueError("elites + relocations + aliens must not exceed population")
        if not 0.0 < self.chaos_seed < 1.0 or self.chaos_seed in FORBIDDEN_SEEDS:
            raise ValueError(f"chaos_seed must lie in (0, 1) and avoid {FORBIDDEN_SEEDS}")
        if self.mutation_parent not in ("elite_pool", "best_only"):
            raise ValueError("mutation_parent must be 'elite_pool' or 'best_only'")


@dataclass(frozen=True)
class GenerationTrace:
    """Per-generation record backing the convergence figures."""

    generation: int
    best_eta: float
    mean_eta: float
    best_layout: Layout


def trace_records(trace) -> list:
    """Plain dict records for JSON-lines emission."""
    return [
        {
            "generation": t.generation,
            "best_eta": t.best_eta,
            "mean_eta": t.mean_eta,
            "best_layout": list(t.best_layout.occupied),
        }
        for t in trace
    ]


def trace_jsonl(trace) -> str:
    """JSON-lines text, one object per generation."""
    return "\n".join(json.dumps(rec) for rec in trace_records(trace)) + "\n"


def chaotic_layout(stream: ChaosStream, m: int, n: int) -> Layout:
    """Fresh individual with n distinct chaotically drawn cells."""
    if n > m:
        raise ValueError("cannot place more turbines than cells")
    occupied: set = set()
    while len(occupied) < n:
        occupied.add(chaos_position(stream, m, occupied))
    return Layout(tuple(occupied), m)


def initialize_population(params: GAParams, m: int, n: int, stream: ChaosStream | None = None) -> list:
    """Generate the initial population of fixed-cardinality layouts."""
    if stream is None:
        stream = ChaosStream(params.chaos_seed)
    return [chaotic_layout(stream, m, n) for _ in range(params.population)]


def worst_turbine(layout: Layout, grid, scenario, spec, numerator: str = "standard") -> int:
    """Occupied index with the lowest expected individual power; ties resolve
    to the lowest index."""
    powers = expected_farm_power(
        layout.positions(grid), scenario, spec, numerator
    ).per_turbine_power
    return layout.occupied[int(np.argmin(powers))]


def _relocated(layout: Layout, worst: int, stream: ChaosStream) -> Layout:
    rest = tuple(i for i in layout.occupied if i != worst)
    fresh = chaos_position(stream, layout.m, set(layout.occupied))
    return Layout(rest + (fresh,), layout.m)


def relocate_worst(
    layout: Layout, grid, scenario, spec, stream: ChaosStream, numerator: str = "standard"
) -> Layout:
    """Move the least productive turbine to a chaotically drawn free cell.

    The new cell excludes the entire current occupancy, so the move is a real
    relocation; with no free cell (n == m) the layout is returned unchanged.
    """
    if layout.n == layout.m:
        return layout
    return _relocated(layout, worst_turbine(layout, grid, scenario, spec, numerator), stream)


def mutate_twice(layout: Layout, stream: ChaosStream) -> Layout:
    """Toggle one occupied bit off and one free bit on (cardinality kept).

    The added cell excludes the full original occupancy, so the result always
    differs from the input in exactly two bits.
    """
    n, m = layout.n, layout.m
    if not 0 < n < m:
        raise ValueError("mutation needs at least one occupied and one free cell")
    drop = layout.occupied[stream.index(n)]
    add = chaos_position(stream, m, set(layout.occupied))
    rest = tuple(i for i in layout.occupied if i != drop)
    return Layout(rest + (add,), m)


def _evolve(params, grid, scenario, spec, n_turbines, numerator, relocation):
    m = len(grid.points)
    if n_turbines > m:
        raise ValueError("cannot place more turbines than candidate cells")
    evaluator = FarmEvaluator(grid.points, scenario, spec, numerator)
    stream = ChaosStream(params.chaos_seed)
    population = initialize_population(params, m, n_turbines, stream)
    cache: dict = {}

    def fitness(layout):
        eta = cache.get(layout.occupied)
        if eta is None:
            eta = evaluator.evaluate(layout.occupied).efficiency
            cache[layout.occupied] = eta
        return eta

    trace = []
    generation = 0
    while True:
        effs = np.array([fitness(layout) for layout in population])
        order = np.argsort(-effs, kind="stable")
        best = population[order[0]]
        best_eta = float(effs[order[0]])
        trace.append(GenerationTrace(generation, best_eta, float(effs.mean()), best))

        target = params.target_efficiency
        if target is not None and best_eta >= target - 1e-12:
            break
        if generation >= params.max_generations:
            break

        elites = [population[i] for i in order[: params.elites]]
        nxt = list(elites)
        for i in range(params.relocations):
            if relocation:
                parent = elites[i % len(elites)]
                if parent.n == m:
                    nxt.append(parent)
                    continue
                powers = evaluator.per_turbine_power(parent.occupied)
                worst = parent.occupied[int(np.argmin(powers))]
                nxt.append(_relocated(parent, worst, stream))
            else:
                # ablated baseline: plain chaotic individuals instead
                nxt.append(chaotic_layout(stream, m, n_turbines))
        for _ in range(params.aliens):
            nxt.append(chaotic_layout(stream, m, n_turbines))
        for _ in range(params.population - len(nxt)):
            if params.mutation_parent == "best_only":
                parent = elites[0]
            else:
                parent = elites[stream.index(len(elites))]
            nxt.append(mutate_twice(parent, stream) if parent.n < m else parent)
        population = nxt
        generation += 1

    return trace[-1].best_layout, trace


def run_aga(params: GAParams, grid, scenario, spec, n_turbines: int, numerator: str = "standard"):
    """Run the adapted search loop; returns (best layout, trace).

    Per generation: evaluate and rank, copy the elites, breed relocation
    descendants from them, inject fresh chaotic aliens, and fill the rest of
    the population with two-bit mutants; stop at the generation budget or
    when the best efficiency reaches the target.
    """
    return _evolve(params, grid, scenario, spec, n_turbines, numerator, relocation=True)


def run_conventional_ga(
    params: GAParams, grid, scenario, spec, n_turbines: int, numerator: str = "standard"
):
    """Ablated baseline: identical loop with the relocation step replaced by
    freshly generated chaotic individuals."""
    return _evolve(params, grid, scenario, spec, n_turbines, numerator, relocation=False)
