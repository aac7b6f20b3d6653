"""Shared test data and oracles.

The reference tables are stored as printed strings so that one source
feeds both the numeric comparisons and the byte-for-byte CSV checks.
"""

# (c, x, n) as printed: linear table, x at 2 decimals
LINEAR_TABLE = (
    ("0.50", "0.50", "0.250"),
    ("0.48", "0.60", "0.160"),
    ("0.46", "0.64", "0.129"),
    ("0.42", "0.70", "0.090"),
    ("0.38", "0.74", "0.065"),
    ("0.32", "0.80", "0.040"),
    ("0.26", "0.85", "0.024"),
    ("0.18", "0.90", "0.010"),
    ("0.09", "0.95", "0.002"),
    ("0.00", "1.00", "0.000"),
)

# quadratic table, x at 3 decimals
QUADRATIC_TABLE = (
    ("0.57", "0.630", "0.180"),
    ("0.55", "0.677", "0.140"),
    ("0.50", "0.742", "0.091"),
    ("0.45", "0.786", "0.064"),
    ("0.40", "0.822", "0.045"),
    ("0.35", "0.852", "0.031"),
    ("0.30", "0.879", "0.021"),
    ("0.25", "0.903", "0.014"),
    ("0.20", "0.925", "0.008"),
    ("0.15", "0.946", "0.004"),
    ("0.10", "0.965", "0.002"),
    ("0.05", "0.983", "0.000"),
    ("0.00", "1.000", "0.000"),
)

# exponential table, x at 3 decimals
EXPONENTIAL_TABLE = (
    ("0.43", "0.446", "0.224"),
    ("0.42", "0.480", "0.193"),
    ("0.40", "0.527", "0.154"),
    ("0.38", "0.565", "0.127"),
    ("0.36", "0.597", "0.107"),
    ("0.34", "0.626", "0.090"),
    ("0.32", "0.654", "0.076"),
    ("0.30", "0.680", "0.064"),
    ("0.28", "0.704", "0.053"),
    ("0.26", "0.728", "0.044"),
    ("0.24", "0.751", "0.037"),
    ("0.22", "0.773", "0.030"),
    ("0.20", "0.795", "0.024"),
    ("0.18", "0.817", "0.019"),
    ("0.16", "0.838", "0.015"),
    ("0.14", "0.858", "0.011"),
    ("0.12", "0.879", "0.008"),
    ("0.10", "0.899", "0.005"),
    ("0.08", "0.920", "0.003"),
    ("0.06", "0.940", "0.002"),
    ("0.04", "0.960", "0.001"),
    ("0.02", "0.980", "0.000"),
    ("0.00", "1.000", "0.000"),
)

REFERENCE_TABLES = {1: LINEAR_TABLE, 3: QUADRATIC_TABLE, 4: EXPONENTIAL_TABLE}


def table_csv(rows) -> str:
    """The expected CSV rendering of a printed reference table."""
    return "c,x,n\n" + "\n".join(",".join(row) for row in rows) + "\n"


def adaptive_simpson(func, a, b, tol=1e-9, max_depth=50):
    """Adaptive Simpson quadrature with Richardson correction.

    Independent of the library's own arithmetic; used to cross-check the
    closed-form negotiation shares against a numeric integral of NMR.
    """

    def simpson(lo, mid, hi, f_lo, f_mid, f_hi):
        return (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi)

    def recurse(lo, mid, hi, f_lo, f_mid, f_hi, whole, eps, depth):
        lmid = 0.5 * (lo + mid)
        rmid = 0.5 * (mid + hi)
        f_lmid = func(lmid)
        f_rmid = func(rmid)
        left = simpson(lo, lmid, mid, f_lo, f_lmid, f_mid)
        right = simpson(mid, rmid, hi, f_mid, f_rmid, f_hi)
        if depth >= max_depth or abs(left + right - whole) <= 15.0 * eps:
            return left + right + (left + right - whole) / 15.0
        return recurse(
            lo, lmid, mid, f_lo, f_lmid, f_mid, left, 0.5 * eps, depth + 1
        ) + recurse(mid, rmid, hi, f_mid, f_rmid, f_hi, right, 0.5 * eps, depth + 1)

    if a == b:
        return 0.0
    mid = 0.5 * (a + b)
    f_a, f_mid, f_b = func(a), func(mid), func(b)
    whole = simpson(a, mid, b, f_a, f_mid, f_b)
    return recurse(a, mid, b, f_a, f_mid, f_b, whole, tol, 0)
