"""Census report rendering: delimited rows and summary figures."""

from __future__ import annotations

import csv
import io

from .verify import EnumerationCensus

_COUNT_FIELDS = (
    "graphs_seen",
    "hypotheses_met",
    "packed",
    "extremal_g1",
    "extremal_g2",
    "violations",
    "budget_stops",
    "parse_errors",
)


def census_csv(census: EnumerationCensus) -> str:
    """Two-column delimited summary, exception graphs appended one per row."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["metric", "value"])
    writer.writerow(["n", "" if census.n is None else census.n])
    writer.writerow(["k", census.k])
    for name in _COUNT_FIELDS:
        writer.writerow([name, getattr(census, name)])
    for g6 in census.exception_list:
        writer.writerow(["exception", g6])
    return buf.getvalue()


def render_census_figure(census: EnumerationCensus, path: str) -> None:
    """Bar chart of the census verdict counts, written to an image file."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    labels = ["seen", "hyp. met", "packed", "G1", "G2", "violations"]
    values = [
        census.graphs_seen,
        census.hypotheses_met,
        census.packed,
        census.extremal_g1,
        census.extremal_g2,
        census.violations,
    ]
    fig, ax = plt.subplots(figsize=(6, 3.5))
    bars = ax.bar(labels, values, color="#4878a8")
    if census.violations:
        bars[-1].set_color("#c44e52")
    ax.set_ylabel("graphs")
    title = f"k={census.k}" if census.n is None else f"n={census.n}, k={census.k}"
    ax.set_title(f"verification census ({title})")
    ax.bar_label(bars)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
