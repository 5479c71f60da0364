"""Figure output for evaluation reports: accuracy bars with drop annotations,
written next to the delimited report records."""

from __future__ import annotations

from pathlib import Path

from matplotlib.backends.backend_agg import FigureCanvasAgg
from matplotlib.figure import Figure

from .harness import EvalReport


def render_report_figure(report: EvalReport, path: str | Path, title: str | None = None) -> None:
    rows = [report.original, *report.rows, report.average]
    names = [r.name.replace("_", "\n") for r in rows]
    accuracies = [r.accuracy for r in rows]
    colors = ["#4c72b0"] + ["#dd8452"] * len(report.rows) + ["#55a868"]

    fig = Figure(figsize=(max(8.0, 1.1 * len(rows)), 4.5))
    ax = fig.add_subplot(111)
    bars = ax.bar(range(len(rows)), accuracies, color=colors)
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels(names, fontsize=8)
    ax.set_ylabel("accuracy (%)")
    ax.set_ylim(0, 100)
    ax.set_title(title or "robustness across perturbed test sets")
    ax.axhline(report.original.accuracy, color="#4c72b0", linestyle=":", linewidth=1)

    for bar, row in zip(bars, rows):
        label = f"{row.accuracy:.1f}" if row.drop is None else f"{row.accuracy:.1f}\n({row.drop:+.1f}%)"
        ax.annotate(
            label,
            xy=(bar.get_x() + bar.get_width() / 2, bar.get_height()),
            xytext=(0, 3),
            textcoords="offset points",
            ha="center",
            va="bottom",
            fontsize=7,
        )

    fig.tight_layout()
    FigureCanvasAgg(fig).print_figure(str(path), dpi=150)
