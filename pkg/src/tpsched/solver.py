"""Cost-plus schedule solvers over calibrated curves.

The selling division quotes a cost-plus price t for a fraction x of the
optimal output q and the divisions negotiate the remainder.  Requiring the
quoted tranche to sit on the buyer's net marginal revenue pins
t * (x*q) = c * p * q, a rectangular hyperbola through the NMR curve, so x
solves the dimensionless equation

    x * nmr(x*q) / p = c

where c is the seller's contribution per unit as a share of p.  The rate a
curve can support peaks strictly inside (0, 1); above that ceiling no
cost-plus price covers the target and the request is infeasible.

Closed forms exist per family: the linear equation is a quadratic in x,
the quadratic family reduces to a depressed cubic solved trigonometrically
and the exponential family bisects a single transcendental equation.  A
family-blind bracketed solver covers sampled curves and doubles as an
independent check on the closed forms.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

from .curves import CalibratedCurve, Family
from .errors import (
    InfeasibleContributionError,
    NegativeEffectiveContributionError,
    ScenarioError,
    VariableCostTooHighError,
)
from .roots import bisect_descending, refine_peak

# Contribution-rate ceilings and the covered fractions where they occur.
# For the quadratic family the two coincide at 1/sqrt(3).
X_PEAK_LINEAR = 0.5
C_MAX_LINEAR = 0.5
X_PEAK_QUADRATIC = 1.0 / math.sqrt(3.0)
C_MAX_QUADRATIC = 1.0 / math.sqrt(3.0)
X_PEAK_EXPONENTIAL = (3.0 - math.sqrt(5.0)) / 2.0
C_MAX_EXPONENTIAL = (
    X_PEAK_EXPONENTIAL
    * (1.0 - X_PEAK_EXPONENTIAL)
    * math.exp(1.0 - X_PEAK_EXPONENTIAL)
)

# |c - c_max| at or below this counts as sitting on the feasibility boundary
BOUNDARY_TOL = 1e-9

_SOLVE_GRID = 4096
_X_TOL = 1e-12

_C_MAX_CLOSED = {
    Family.LINEAR: C_MAX_LINEAR,
    Family.QUADRATIC: C_MAX_QUADRATIC,
    Family.EXPONENTIAL: C_MAX_EXPONENTIAL,
}
_X_PEAK_CLOSED = {
    Family.LINEAR: X_PEAK_LINEAR,
    Family.QUADRATIC: X_PEAK_QUADRATIC,
    Family.EXPONENTIAL: X_PEAK_EXPONENTIAL,
}


def _check_rate(c: float, c_max: float, family: Family, inclusive: bool) -> None:
    if c < 0.0:
        raise ScenarioError("contribution rate c cannot be negative")
    over = c > c_max if inclusive else c >= c_max
    if over:
        raise InfeasibleContributionError(
            f"c = {c:.6g} is not attainable on a {family.value} curve"
            f" (maximum {c_max:.6g})"
        )


def solve_linear_x(c: float) -> float:
    """Covered fraction on a linear curve: the larger root of 2x(1-x) = c."""
    _check_rate(c, C_MAX_LINEAR, Family.LINEAR, inclusive=True)
    return 0.5 + math.sqrt(max(0.25 - 0.5 * c, 0.0))


def quadratic_roots(c: float) -> tuple[float, float, float]:
    """All three real roots of x**3 - x + 2c/3 = 0.

    Solved trigonometrically via theta = arccos(-c*sqrt(3)).  For feasible
    c the returned triple (x1, x2, x3) obeys x2 < 0 <= x3 < x1 <= 1: x1 is
    the covered fraction, x3 a crossing below the peak that covers less
    output for the same contribution, x2 lies outside the model.
    """
    _check_rate(c, C_MAX_QUADRATIC, Family.QUADRATIC, inclusive=False)
    theta = math.acos(-c * math.sqrt(3.0))
    radius = 2.0 / math.sqrt(3.0)
    x1 = min(radius * math.cos(theta / 3.0), 1.0)
    x2 = radius * math.cos((theta + 2.0 * math.pi) / 3.0)
    x3 = radius * math.cos((theta + 4.0 * math.pi) / 3.0)
    return x1, x2, x3


def solve_quadratic_x(c: float) -> float:
    """Covered fraction on a quadratic curve: largest root of the cubic."""
    if c == 0.0:
        return 1.0
    return quadratic_roots(c)[0]


def solve_exponential_x(c: float) -> float:
    """Covered fraction on an exponential curve.

    Largest root of x(1-x)exp(1-x) = c, found by bisection on the branch
    right of the peak where the left side descends from c_max to 0.
    """
    _check_rate(c, C_MAX_EXPONENTIAL, Family.EXPONENTIAL, inclusive=False)
    if c == 0.0:
        return 1.0

    def supported(x: float) -> float:
        return x * (1.0 - x) * math.exp(1.0 - x)

    return bisect_descending(supported, X_PEAK_EXPONENTIAL, 1.0, tol=1e-15, target=c)


@lru_cache(maxsize=64)
def _peak_rate(curve: CalibratedCurve) -> tuple[float, float]:
    """Peak of x*nmr(x*q)/p over (0, 1]: (x_peak, c_max), found numerically."""

    def rate(x: float) -> float:
        return x * curve.nmr(x * curve.q) / curve.p

    step = 1.0 / _SOLVE_GRID
    grid = [i * step for i in range(1, _SOLVE_GRID + 1)]
    values = [rate(x) for x in grid]
    top = max(range(len(values)), key=values.__getitem__)
    lo = max(grid[top] - step, 0.5 * step)
    hi = min(grid[top] + step, 1.0)
    return refine_peak(rate, lo, hi, tol=_X_TOL)


def max_feasible_c(curve: CalibratedCurve) -> float:
    """Largest contribution rate the curve supports at any coverage."""
    closed = _C_MAX_CLOSED.get(curve.family)
    if closed is not None:
        return closed
    return _peak_rate(curve)[1]


def _peak_x(curve: CalibratedCurve) -> float:
    closed = _X_PEAK_CLOSED.get(curve.family)
    if closed is not None:
        return closed
    return _peak_rate(curve)[0]


def solve_general_x(curve: CalibratedCurve, c: float) -> float:
    """Covered fraction on any calibrated curve, by bracketed bisection.

    Works family-blind from the curve's nmr callable: locate the peak of
    x*nmr(x*q)/p on a fine grid, then bisect on [x_peak, 1] where the
    supported rate descends monotonically to zero.
    """
    if c < 0.0:
        raise ScenarioError("contribution rate c cannot be negative")
    if c == 0.0:
        return 1.0

    def rate(x: float) -> float:
        return x * curve.nmr(x * curve.q) / curve.p

    x_peak, c_peak = _peak_rate(curve)
    if c > c_peak:
        if c - c_peak <= BOUNDARY_TOL:
            return x_peak
        raise InfeasibleContributionError(
            f"c = {c:.6g} is not attainable on this curve (maximum {c_peak:.6g})"
        )
    if rate(1.0) >= c:
        # residual noise in a sampled curve's q can leave the rate at x = 1
        # marginally above zero
        return 1.0
    return bisect_descending(rate, x_peak, 1.0, tol=_X_TOL, target=c)


def negotiation_share(curve: CalibratedCurve, x: float) -> float:
    """Share n of total net revenue p*q left to negotiation at coverage x.

    n*p*q is the net revenue earned between x*q and q, so in general
    n = 1 - x*nar(x*q)/p; each closed-form family reduces to a polynomial
    or exponential expression in x alone.
    """
    if not 0.0 < x <= 1.0:
        raise ScenarioError("covered fraction x must lie in (0, 1]")
    if curve.family is Family.LINEAR:
        n = (1.0 - x) ** 2
    elif curve.family is Family.QUADRATIC:
        n = 1.0 - 1.5 * x + 0.5 * x**3
    elif curve.family is Family.EXPONENTIAL:
        n = 1.0 - x * math.exp(1.0 - x)
    else:
        n = 1.0 - x * curve.nar(x * curve.q) / curve.p
    return max(n, 0.0)


def transfer_price(c: float, p: float, x: float) -> float:
    """Cost-plus price t satisfying t*(x*q) = c*p*q, i.e. t = c*p/x."""
    if x <= 0.0:
        raise ScenarioError("covered fraction x must be positive")
    return c * p / x


def adjust_for_variable_cost(c_real: float, p: float, vc_a: float) -> float:
    """Map a contribution rate on full value p to one on value net of vc_a.

    With a seller variable cost vc_a per unit the hyperbola construction
    applies to p - vc_a, so the working rate becomes
    (p*c_real - vc_a) / (p - vc_a); with vc_a = 0 the rate is unchanged.
    """
    if vc_a == 0.0:
        return c_real
    if vc_a < 0.0:
        raise ScenarioError("variable cost cannot be negative")
    if vc_a >= p:
        raise VariableCostTooHighError(
            f"variable cost {vc_a:.6g} leaves nothing of the unit value {p:.6g}"
        )
    if p * c_real < vc_a:
        raise NegativeEffectiveContributionError(
            f"contribution {c_real:.6g} of unit value {p:.6g} does not recover"
            f" the variable cost {vc_a:.6g}"
        )
    return (p * c_real - vc_a) / (p - vc_a)


@dataclass(frozen=True)
class ScheduleRequest:
    """One pricing request: a calibrated curve plus the commercial terms."""

    curve: CalibratedCurve
    c_real: float = 0.0
    vc_a: float = 0.0


@dataclass(frozen=True)
class Schedule:
    """A solved transfer-price schedule.

    The cost-plus price t covers the output f = x*q; the remaining
    (1-x)*q is left to negotiation and carries the share n of total net
    revenue, n_adjusted once the seller's variable cost is taken back out.
    """

    c_effective: float
    x: float
    f: float
    t: float
    n: float
    n_adjusted: float
    at_feasibility_boundary: bool = False


_ANALYTIC_SOLVERS = {
    Family.LINEAR: solve_linear_x,
    Family.QUADRATIC: solve_quadratic_x,
    Family.EXPONENTIAL: solve_exponential_x,
}


def solve_schedule(request: ScheduleRequest) -> Schedule:
    """Solve one request end to end.

    Applies the variable-cost adjustment, dispatches to the family solver
    (closed form where one exists, bracketed bisection otherwise) and
    assembles price, coverage and negotiation share.  A rate within
    BOUNDARY_TOL of the ceiling settles on the tangent point and is
    flagged; anything above it raises.
    """
    curve = request.curve
    if not 0.0 <= request.c_real < 1.0:
        raise ScenarioError("contribution rate c_real must lie in [0, 1)")
    if request.vc_a < 0.0:
        raise ScenarioError("variable cost cannot be negative")
    if request.vc_a >= curve.p:
        raise VariableCostTooHighError(
            f"variable cost {request.vc_a:.6g} leaves nothing of the unit"
            f" value {curve.p:.6g}"
        )
    c_eff = adjust_for_variable_cost(request.c_real, curve.p, request.vc_a)
    c_max = max_feasible_c(curve)
    boundary = abs(c_eff - c_max) <= BOUNDARY_TOL
    if boundary:
        x = _peak_x(curve)
    elif c_eff > c_max:
        raise InfeasibleContributionError(
            f"c_effective = {c_eff:.6g} is not attainable on a"
            f" {curve.family.value} curve (maximum {c_max:.6g})"
        )
    elif c_eff == 0.0:
        x = 1.0
    else:
        analytic = _ANALYTIC_SOLVERS.get(curve.family)
        x = analytic(c_eff) if analytic else solve_general_x(curve, c_eff)
    spread = curve.p - request.vc_a
    t = c_eff * spread / x + request.vc_a
    n = negotiation_share(curve, x)
    return Schedule(
        c_effective=c_eff,
        x=x,
        f=x * curve.q,
        t=t,
        n=n,
        n_adjusted=n * (1.0 - request.vc_a / curve.p),
        at_feasibility_boundary=boundary,
    )
