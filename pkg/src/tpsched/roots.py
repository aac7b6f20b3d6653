"""Scalar root and peak location by interval methods."""

import math
from typing import Callable


def bisect_descending(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float,
    target: float = 0.0,
    max_iter: int = 200,
) -> float:
    """Root of fn(x) = target on [lo, hi] where fn descends through it.

    Assumes fn(lo) >= target >= fn(hi).  Returns the midpoint of the final
    bracket, which is at most tol wide.
    """
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if fn(mid) > target:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def refine_peak(
    fn: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    max_iter: int = 200,
) -> tuple[float, float]:
    """Maximum of a unimodal fn on [lo, hi] by golden-section search.

    Returns (argmax, max).
    """
    inv_phi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - inv_phi * (b - a)
    d = a + inv_phi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - inv_phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + inv_phi * (b - a)
            fd = fn(d)
    x = 0.5 * (a + b)
    return x, fn(x)
