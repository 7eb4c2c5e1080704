"""Wake-aware wind farm layout optimization on a discrete candidate grid."""

from .geometry import Point, circle_overlap_area, rotate_frame
from .wake import (
    TurbineSpec,
    WakeGraphEntry,
    build_wake_sets,
    decay_factor,
    effective_speeds,
    pairwise_deficit,
    wake_radius,
)
from .power import (
    EvaluationResult,
    FarmEvaluator,
    PowerCurve,
    cost_curve,
    curve_of,
    efficiency,
    expected_farm_power,
    power_at,
)
from .optimizer import (
    ChaosStream,
    GAParams,
    GenerationTrace,
    Layout,
    chaos_next,
    chaos_position,
    initialize_population,
    mutate_twice,
    relocate_worst,
    run_aga,
    run_conventional_ga,
    worst_turbine,
)
from .scenario import (
    Grid,
    WindScenario,
    build_grid,
    case_scenario,
    single_bin,
    solution_space_size,
    uniform_directions,
    uniform_layout,
    weibull_rose,
)
from .study import (
    ComparisonRecord,
    PolyFit,
    ShrinkSweepPoint,
    compare_uniform_vs_aga,
    convergence_comparison,
    fit_poly3,
    power_drop_at_budget,
    shrink_sweep,
)
from .oracle import exhaustive_best, mc_overlap, straight_line_eval

__version__ = "0.1.0"
