"""Figure rendering for profile and bench reports.

matplotlib is imported lazily and forced onto the Agg backend so the CLI
works headless.  Each function writes one PNG and returns its path.
"""

from __future__ import annotations

from .stats import BenchReport, DepthProfile


def _pyplot():
    import matplotlib
    matplotlib.use("Agg", force=True)
    import matplotlib.pyplot as plt
    return plt


def render_profile_figure(prof: DepthProfile, path: str, title: str = "Search-path profile") -> str:
    """Histogram of sidesteps per string, with max/mean markers."""
    plt = _pyplot()
    values = [row.sidesteps for row in prof.rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    if values:
        bins = range(0, max(values) + 2)
        ax.hist(values, bins=bins, align="left", color="#4878a8", edgecolor="white")
        ax.axvline(prof.mean_sidesteps, color="#c44e52", linestyle="--",
                   label=f"mean = {prof.mean_sidesteps:.2f}")
        ax.axvline(prof.max_sidesteps, color="#55a868", linestyle=":",
                   label=f"max = {prof.max_sidesteps}")
        ax.legend()
    ax.set_xlabel("sidesteps on search path")
    ax.set_ylabel("strings")
    ax.set_title(f"{title} (n={prof.n})")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def render_bench_figure(report: BenchReport, path: str) -> str:
    """Bar chart of throughput per benchmark phase."""
    plt = _pyplot()
    names = [p.name for p in report.phases]
    rates = [p.ops_per_sec for p in report.phases]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    bars = ax.bar(names, rates, color="#4878a8")
    ax.bar_label(bars, fmt="%.0f", padding=2)
    ax.set_ylabel("ops/sec (median of runs)")
    w = report.workload
    ax.set_title(f"Throughput: n={w.count}, alphabet={w.alphabet_size}, "
                 f"len {w.length_min}..{w.length_max}")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path
