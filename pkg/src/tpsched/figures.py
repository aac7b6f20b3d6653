"""Static matplotlib figures saved next to the delimited reports.

matplotlib is imported lazily with the Agg backend so that library users
who never plot do not pay for it.
"""

from .curves import CalibratedCurve
from .solver import Schedule
from .tables import SweepTable


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_curve_figure(
    curve: CalibratedCurve, schedule: Schedule, path, samples: int = 256
) -> None:
    """Draw the schedule geometry and save it to path.

    Shows NAR, NMR, the constant-contribution locus t = c*p*q/f and the
    settled point where the cost-plus tranche meets the buyer's NMR, with
    the covered rectangle sketched in.
    """
    plt = _pyplot()
    p, q = curve.p, curve.q
    c = schedule.c_effective
    fs = [q * i / samples for i in range(1, samples + 1)]
    nar = [curve.nar(f) for f in fs]
    nmr = [curve.nmr(f) for f in fs]
    top = 1.25 * max(nar)
    # price on the locus at the settled point, gross of any variable cost
    t_locus = c * p / schedule.x

    fig, ax = plt.subplots(figsize=(7.0, 4.4))
    ax.plot(fs, nar, color="tab:blue", label="net average revenue")
    ax.plot(fs, nmr, color="tab:green", label="net marginal revenue")
    if c > 0.0:
        locus = [(f, c * p * q / f) for f in fs if c * p * q / f <= top]
        ax.plot(
            [f for f, _ in locus],
            [t for _, t in locus],
            color="tab:red",
            linestyle="--",
            label="constant-contribution locus",
        )
    ax.plot([schedule.f, schedule.f], [0.0, t_locus], color="gray", linewidth=0.8)
    ax.plot([0.0, schedule.f], [t_locus, t_locus], color="gray", linewidth=0.8)
    ax.plot([schedule.f], [t_locus], marker="o", color="black")
    ax.annotate(
        "S", (schedule.f, t_locus), textcoords="offset points", xytext=(6, 6)
    )
    ax.axhline(0.0, color="black", linewidth=0.6)
    ax.set_xlim(0.0, 1.02 * q)
    ax.set_ylim(min(0.0, min(nmr)) * 1.05, top)
    ax.set_xlabel("transferred output f")
    ax.set_ylabel("value per unit")
    ax.set_title(f"{curve.family.value} curve, covered fraction x = {schedule.x:.3f}")
    ax.legend(loc="upper right", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_sweep_figure(table: SweepTable, path) -> None:
    """Plot covered fraction and negotiation share against the rate c."""
    plt = _pyplot()
    feasible = [row for row in table.rows if row.feasible]
    cs = [row.c for row in feasible]
    xs = [row.x for row in feasible]
    ns = [row.n for row in feasible]

    fig, (ax_x, ax_n) = plt.subplots(2, 1, sharex=True, figsize=(6.4, 5.6))
    ax_x.plot(cs, xs, marker="o", markersize=3, color="tab:blue")
    ax_x.set_ylabel("covered fraction x")
    ax_x.set_title(f"{table.family.value} sweep")
    ax_n.plot(cs, ns, marker="o", markersize=3, color="tab:orange")
    ax_n.set_ylabel("negotiation share n")
    ax_n.set_xlabel("contribution rate c")
    for ax in (ax_x, ax_n):
        ax.grid(alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
