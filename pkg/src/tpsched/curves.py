"""Net revenue curve families and their calibration.

A curve describes the buying division's net average revenue (NAR) for an
intermediate product: revenue per unit, net of the buyer's own further
processing costs, when f units are transferred in total.  Calibration
locates the output q at which net marginal revenue (NMR) falls to zero and
the unit value p = NAR(q) there.  Everything downstream works in units of
p and q, so a curve's only job is to supply nar(f), nmr(f) and that pair.

Three shapes calibrate in closed form:

    linear       nar(f) = a - b*f          q = a/(2b),        p = a/2
    quadratic    nar(f) = a - b*f**2       q = sqrt(a/(3b)),  p = 2a/3
    exponential  nar(f) = a*exp(-f/b)      q = b,             p = a/e

A fourth accepts raw (f, nar) samples, interpolates them and finds the
optimum numerically.
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

from .errors import DuplicateAbscissaError, NoOptimumError, ScenarioError
from .roots import bisect_descending


class Family(str, Enum):
    """Supported curve shapes."""

    LINEAR = "linear"
    QUADRATIC = "quadratic"
    EXPONENTIAL = "exponential"
    POINTS = "points"


MIN_POINTS = 3
MAX_POINTS = 13  # interpolation degree is capped at 12

_OPTIMUM_GRID = 1024
_VALIDITY_SAMPLES = 256


# ---------------------------------------------------------------------------
# polynomials


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with coefficients in ascending powers of f."""

    coeffs: tuple[float, ...]

    def __call__(self, f: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * f + c
        return acc

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> float:
        """Coefficient of f**power, 0.0 beyond the stored degree."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0.0

    def derivative(self) -> "Polynomial":
        if len(self.coeffs) <= 1:
            return Polynomial((0.0,))
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs))[1:])


@dataclass(frozen=True)
class InterpolatingPolynomial:
    """Lagrange interpolant through fixed nodes.

    Evaluation uses the barycentric form, which is stable at the degrees
    allowed here and exact at the nodes; the expanded monomial coefficients
    are kept alongside for symbolic work.
    """

    nodes: tuple[float, ...]
    values: tuple[float, ...]
    weights: tuple[float, ...]
    coeffs: tuple[float, ...]

    def __call__(self, f: float) -> float:
        num = 0.0
        den = 0.0
        for node, value, weight in zip(self.nodes, self.values, self.weights):
            if f == node:
                return value
            ratio = weight / (f - node)
            num += ratio * value
            den += ratio
        return num / den

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, power: int) -> float:
        """Coefficient of f**power, 0.0 beyond the stored degree."""
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0.0


def compute_barycentric_weights(nodes: Sequence[float]) -> tuple[float, ...]:
    """Weights w_j = 1 / prod_{k != j} (x_j - x_k)."""
    weights = []
    for j, xj in enumerate(nodes):
        prod = 1.0
        for k, xk in enumerate(nodes):
            if k != j:
                prod *= xj - xk
        weights.append(1.0 / prod)
    return tuple(weights)


def _monomial_coefficients(
    nodes: Sequence[float], values: Sequence[float]
) -> tuple[float, ...]:
    # Newton divided differences, then expansion of the Newton form.
    count = len(nodes)
    table = list(values)
    for order in range(1, count):
        for i in range(count - 1, order - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (nodes[i] - nodes[i - order])
    coeffs = [table[count - 1]]
    for i in range(count - 2, -1, -1):
        # multiply by (f - nodes[i]), then add the next divided difference
        shifted = [0.0] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] -= nodes[i] * c
        shifted[0] += table[i]
        coeffs = shifted
    return tuple(coeffs)


def lagrange_nar(points: Sequence[tuple[float, float]]) -> InterpolatingPolynomial:
    """Interpolating NAR polynomial through (f, nar) samples.

    Takes between 3 and 13 samples with distinct abscissae.  The result
    reproduces each sample ordinate exactly and is evaluable anywhere.
    """
    if not MIN_POINTS <= len(points) <= MAX_POINTS:
        raise ScenarioError(
            f"need between {MIN_POINTS} and {MAX_POINTS} curve samples,"
            f" got {len(points)}"
        )
    ordered = sorted((float(f), float(v)) for f, v in points)
    nodes = tuple(f for f, _ in ordered)
    for left, right in zip(nodes, nodes[1:]):
        if left == right:
            raise DuplicateAbscissaError(f"repeated sample abscissa f = {left!r}")
    values = tuple(v for _, v in ordered)
    return InterpolatingPolynomial(
        nodes=nodes,
        values=values,
        weights=compute_barycentric_weights(nodes),
        coeffs=_monomial_coefficients(nodes, values),
    )


def nmr_from_nar(nar) -> Polynomial:
    """Net marginal revenue d(f*nar(f))/df for a polynomial NAR.

    If nar(f) = sum_i c_i f**i then f*nar(f) shifts every coefficient up
    one power, so nmr(f) = sum_i (i+1) c_i f**i.
    """
    return Polynomial(tuple((i + 1) * c for i, c in enumerate(nar.coeffs)))


# ---------------------------------------------------------------------------
# declaring a curve


@dataclass(frozen=True)
class CurveSpec:
    """Parameters describing one NAR curve before calibration.

    Closed-form families take the positive pair (a, b); the points family
    instead takes raw (f, nar) samples.  Exactly one parameterisation must
    be present.
    """

    family: Family
    a: float | None = None
    b: float | None = None
    points: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self):
        try:
            family = Family(self.family)
        except ValueError:
            raise ScenarioError(f"unknown curve family {self.family!r}") from None
        object.__setattr__(self, "family", family)
        if family is Family.POINTS:
            if self.points is None:
                raise ScenarioError("points family needs (f, nar) samples")
            if self.a is not None or self.b is not None:
                raise ScenarioError("points family takes samples, not (a, b)")
            clean = tuple((float(f), float(v)) for f, v in self.points)
            if not MIN_POINTS <= len(clean) <= MAX_POINTS:
                raise ScenarioError(
                    f"need between {MIN_POINTS} and {MAX_POINTS} curve samples,"
                    f" got {len(clean)}"
                )
            if any(f <= 0.0 for f, _ in clean):
                raise ScenarioError("sample abscissae must be positive")
            object.__setattr__(self, "points", clean)
        else:
            if self.points is not None:
                raise ScenarioError(f"{family.value} curve does not take samples")
            if self.a is None or self.b is None:
                raise ScenarioError(f"{family.value} curve needs both a and b")
            if self.a <= 0.0 or self.b <= 0.0:
                raise ScenarioError("curve parameters a and b must be positive")

    @classmethod
    def from_pq(cls, family, p: float, q: float) -> "CurveSpec":
        """Closed-form spec whose calibration lands on the optimum (p, q)."""
        family = Family(family)
        if p <= 0.0 or q <= 0.0:
            raise ScenarioError("p and q must be positive")
        if family is Family.LINEAR:
            return cls(family, a=2.0 * p, b=p / q)
        if family is Family.QUADRATIC:
            return cls(family, a=1.5 * p, b=0.5 * p / (q * q))
        if family is Family.EXPONENTIAL:
            return cls(family, a=math.e * p, b=q)
        raise ScenarioError("a points curve fixes its own optimum; pass samples")


@dataclass(frozen=True)
class CalibratedCurve:
    """A NAR curve together with its revenue-maximising point.

    q solves nmr(q) = 0 and p is nar(q); both callables accept any f > 0.
    warnings carries non-fatal validity flags (currently "not-decreasing"
    when sampled NAR values fail the positive and non-increasing check).
    """

    family: Family
    p: float
    q: float
    nar: Callable[[float], float]
    nmr: Callable[[float], float]
    warnings: tuple[str, ...] = ()


def calibrate(spec: CurveSpec) -> CalibratedCurve:
    """Locate a curve's optimum and package it for the solvers.

    Closed-form families calibrate analytically.  The points family is
    interpolated; its q is the largest zero of the interpolant's NMR
    within the sampled output range.
    """
    if spec.family is Family.LINEAR:
        a, b = spec.a, spec.b
        p, q = a / 2.0, a / (2.0 * b)

        def nar(f: float) -> float:
            return a - b * f

        def nmr(f: float) -> float:
            return a - 2.0 * b * f

    elif spec.family is Family.QUADRATIC:
        a, b = spec.a, spec.b
        p, q = a / 1.5, math.sqrt(a / (3.0 * b))

        def nar(f: float) -> float:
            return a - b * f * f

        def nmr(f: float) -> float:
            return a - 3.0 * b * f * f

    elif spec.family is Family.EXPONENTIAL:
        a, b = spec.a, spec.b
        p, q = a / math.e, b

        def nar(f: float) -> float:
            return a * math.exp(-f / b)

        def nmr(f: float) -> float:
            return a * math.exp(-f / b) * (1.0 - f / b)

    else:
        nar = lagrange_nar(spec.points)
        nmr = nmr_from_nar(nar)
        q = _locate_optimal_output(nmr, nar.nodes[-1])
        p = nar(q)
        if p <= 0.0:
            raise NoOptimumError("curve value at its revenue optimum is not positive")

    return CalibratedCurve(
        family=spec.family,
        p=p,
        q=q,
        nar=nar,
        nmr=nmr,
        warnings=_validity_warnings(nar, p, q),
    )


def unit_curve(family) -> CalibratedCurve:
    """Calibrated closed-form curve scaled so that p = q = 1."""
    return calibrate(CurveSpec.from_pq(family, 1.0, 1.0))


def _locate_optimal_output(nmr: Polynomial, f_max: float) -> float:
    """Largest output in (0, f_max] where NMR crosses zero from above."""
    grid = [f_max * i / _OPTIMUM_GRID for i in range(1, _OPTIMUM_GRID + 1)]
    values = [nmr(f) for f in grid]
    for i in range(_OPTIMUM_GRID - 2, -1, -1):
        if values[i] > 0.0 >= values[i + 1]:
            return bisect_descending(nmr, grid[i], grid[i + 1], tol=1e-12 * f_max)
    # The crossing can sit exactly on the last sample, in which case float
    # noise decides its sign; do not read that as "no optimum".
    scale = max(abs(v) for v in values)
    if values[-1] > 0.0 and values[-1] <= 1e-9 * scale:
        return f_max
    raise NoOptimumError(
        "net marginal revenue has no zero inside the sampled output range"
    )


def _validity_warnings(
    nar: Callable[[float], float], p: float, q: float
) -> tuple[str, ...]:
    # NAR should be positive and non-increasing over (0, q]; a violation is
    # economically suspect but does not stop the solver.
    slack = 1e-9 * p
    previous = None
    for i in range(1, _VALIDITY_SAMPLES + 1):
        value = nar(q * i / _VALIDITY_SAMPLES)
        if value <= 0.0:
            return ("not-decreasing",)
        if previous is not None and value > previous + slack:
            return ("not-decreasing",)
        previous = value
    return ()
