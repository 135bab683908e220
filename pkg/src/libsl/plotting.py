"""Render count tables as figures (matplotlib, written to files only)."""

from __future__ import annotations


def render_spectrum(rows: list[tuple[int, int]], path: str) -> None:
    """Plot (n, count) rows on a log count axis and save to `path`; the
    format follows the file extension (png, pdf, svg)."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = [n for n, _ in rows]
    counts = [c for _, c in rows]
    fig, ax = plt.subplots(figsize=(7, 4.5))
    ax.step(ns, counts, where="mid", color="#1f4e79", lw=1.5)
    ax.plot(ns, counts, "o", color="#1f4e79", ms=3.5)
    ax.set_yscale("log")
    ax.set_xlabel("cardinality n")
    ax.set_ylabel("non-isomorphic algebras")
    ax.set_title("Linearly ordered involutive bisemilattices")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
