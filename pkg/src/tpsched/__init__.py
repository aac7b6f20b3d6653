"""Transfer-price schedules that split optimal output between a cost-plus
tranche and a negotiated remainder.

The library calibrates a net-average-revenue curve to its optimum (p, q),
finds the fraction x of the optimal output that a cost-plus price t can
cover without pushing the buying division below its net marginal revenue,
and reports the share n of total net revenue left to negotiation.  Linear,
quadratic and exponential curves solve in closed form; point-sampled
curves are interpolated and solved numerically.  A variable-cost
adjustment maps real contribution targets into the dimensionless model
and back.
"""

from .curves import (
    CalibratedCurve,
    CurveSpec,
    Family,
    InterpolatingPolynomial,
    Polynomial,
    calibrate,
    compute_barycentric_weights,
    lagrange_nar,
    nmr_from_nar,
    unit_curve,
)
from .errors import (
    DuplicateAbscissaError,
    InfeasibleContributionError,
    NegativeEffectiveContributionError,
    NoOptimumError,
    ScenarioError,
    ScheduleDomainError,
    VariableCostTooHighError,
)
from .figures import render_curve_figure, render_sweep_figure
from .solver import (
    BOUNDARY_TOL,
    C_MAX_EXPONENTIAL,
    C_MAX_LINEAR,
    C_MAX_QUADRATIC,
    X_PEAK_EXPONENTIAL,
    X_PEAK_LINEAR,
    X_PEAK_QUADRATIC,
    Schedule,
    ScheduleRequest,
    adjust_for_variable_cost,
    max_feasible_c,
    negotiation_share,
    quadratic_roots,
    solve_exponential_x,
    solve_general_x,
    solve_linear_x,
    solve_quadratic_x,
    solve_schedule,
    transfer_price,
)
from .tables import (
    SweepRow,
    SweepTable,
    format_fixed,
    reference_table,
    render_csv,
    render_json,
    render_text,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_TOL",
    "C_MAX_EXPONENTIAL",
    "C_MAX_LINEAR",
    "C_MAX_QUADRATIC",
    "CalibratedCurve",
    "CurveSpec",
    "DuplicateAbscissaError",
    "Family",
    "InfeasibleContributionError",
    "InterpolatingPolynomial",
    "NegativeEffectiveContributionError",
    "NoOptimumError",
    "Polynomial",
    "ScenarioError",
    "Schedule",
    "ScheduleDomainError",
    "ScheduleRequest",
    "SweepRow",
    "SweepTable",
    "VariableCostTooHighError",
    "X_PEAK_EXPONENTIAL",
    "X_PEAK_LINEAR",
    "X_PEAK_QUADRATIC",
    "adjust_for_variable_cost",
    "calibrate",
    "compute_barycentric_weights",
    "format_fixed",
    "lagrange_nar",
    "max_feasible_c",
    "negotiation_share",
    "nmr_from_nar",
    "quadratic_roots",
    "reference_table",
    "render_csv",
    "render_curve_figure",
    "render_json",
    "render_sweep_figure",
    "render_text",
    "solve_exponential_x",
    "solve_general_x",
    "solve_linear_x",
    "solve_quadratic_x",
    "solve_schedule",
    "sweep",
    "transfer_price",
    "unit_curve",
]
