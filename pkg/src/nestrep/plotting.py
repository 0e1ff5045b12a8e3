"""Figures written next to the text reports (PNG/PDF/SVG by file suffix)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from .unary import chain_length_trace  # noqa: E402

STYLE = {
    "font.size": 9,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "savefig.dpi": 150,
    "savefig.bbox": "tight",
}


def _save(fig, path):
    fig.savefig(path)
    plt.close(fig)
    return path


def plot_bench(report, path):
    """Horizontal bars of mean time per string, annotated with the ratio to the baseline."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(6, 0.5 + 0.45 * max(len(report.entries), 1)))
        names = [e.name for e in report.entries]
        means = [e.mean_s * 1e6 for e in report.entries]
        colors = ["0.6" if n == report.baseline else "C0" for n in names]
        ax.barh(names, means, color=colors)
        ax.invert_yaxis()
        for i, e in enumerate(report.entries):
            ratio = report.ratio(e.name)
            if ratio is not None:
                ax.annotate(f"{ratio:.2f}x", (means[i], i), xytext=(3, 0),
                            textcoords="offset points", va="center")
        ax.set_xlabel("mean time per string [us]")
        ax.set_title(f"digit-run normalisation, {report.count} strings")
        return _save(fig, path)


def plot_reach(terms, path):
    """Largest solvable run length against the number of length-decreasing rules."""
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(4.5, 3))
        depths = list(range(1, len(terms) + 1))
        ax.semilogy(depths, terms, "o-", color="C0")
        for d, a in zip(depths, terms):
            ax.annotate(str(a), (d, a), xytext=(4, -10), textcoords="offset points")
        ax.set_xticks(depths)
        ax.set_xlabel("nested REPLACE calls")
        ax.set_ylabel("max run length reduced to 1")
        return _save(fig, path)


def plot_length_trace(chain, max_k, path):
    """Output length of each prefix of ``chain`` for inputs 1..max_k."""
    pairs = chain.unary_pairs()
    ks = list(range(1, max_k + 1))
    traces = [chain_length_trace(pairs, k) for k in ks]
    with plt.rc_context(STYLE):
        fig, ax = plt.subplots(figsize=(5, 3.2))
        for step in range(1, len(pairs) + 1):
            ell, r = pairs[step - 1]
            ax.plot(ks, [t[step] for t in traces], ".-", ms=3, label=f"after {ell}->{r}")
        ax.axhline(1, color="0.5", lw=0.8, ls=":")
        ax.set_yscale("log")
        ax.set_xlabel("input run length")
        ax.set_ylabel("length")
        ax.legend(frameon=False)
        return _save(fig, path)
