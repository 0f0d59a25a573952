"""The five bound-comparison figures, rebuilt from an experiment CSV.

Each builder takes the parsed rows and returns a matplotlib Figure; the CLI
saves it.  Titles carry the point count so regenerated plots are not
mistaken for the original publication data.
"""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .reader import Row, usable

FIGURE_IDS = (
    "main",
    "bound-comparison",
    "conjecture",
    "frob-comparison",
    "iteration-comparison",
)


def _fig(title: str):
    fig, ax = plt.subplots(figsize=(8, 6))
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    return fig, ax


def _diagonal(ax, values) -> None:
    lo, hi = min(values), max(values)
    ax.plot([lo, hi], [lo, hi], "k--", linewidth=1, label="y = x")


def plot_main(rows: list[Row]):
    """New (dots) and known (plus signs) f-scale upper bounds against z."""
    data = usable(rows)
    fig, ax = _fig(f"New and known upper bounds ({len(data)} points)")
    z = [r.z for r in data]
    ax.plot(z, [r.f_new_upper for r in data], ".", label="new upper bound")
    ax.plot(z, [r.f_known_upper for r in data], "+", label="known upper bound")
    ax.set_xlabel("z = sqrt(abc)")
    ax.set_ylabel("f-scale bound")
    ax.legend()
    return fig


def plot_bound_comparison(rows: list[Row]):
    """Known upper bound as a function of the new upper bound."""
    data = usable(rows)
    fig, ax = _fig(f"Known vs new upper bound ({len(data)} points)")
    x = [r.f_new_upper for r in data]
    ax.plot(x, [r.f_known_upper for r in data], ".", label="triples")
    _diagonal(ax, x + [r.f_known_upper for r in data])
    ax.set_xlabel("new upper bound")
    ax.set_ylabel("known upper bound")
    ax.legend()
    return fig


def plot_conjecture(rows: list[Row]):
    """New bound against z with the sqrt(3)z and z^(5/4) reference curves.

    Both curves are recomputed from the z column on the spot.
    """
    data = usable(rows)
    fig, ax = _fig(f"New upper bound vs conjectured ceiling ({len(data)} points)")
    ax.plot([r.z for r in data], [r.f_new_upper for r in data], ".", label="new upper bound")
    zs = sorted(r.z for r in data)
    ax.plot(zs, [math.sqrt(3) * z for z in zs], "-", label="sqrt(3) z (lower bound)")
    ax.plot(zs, [z ** 1.25 for z in zs], "-", label="z^(5/4) (conjectured)")
    ax.set_xlabel("z = sqrt(abc)")
    ax.set_ylabel("f-scale value")
    ax.legend()
    return fig


def plot_frob_comparison(rows: list[Row]):
    """New upper bound against the true f values."""
    data = usable(rows)
    fig, ax = _fig(f"New upper bound vs exact f ({len(data)} points)")
    x = [r.f_exact for r in data]
    ax.plot(x, [r.f_new_upper for r in data], ".", label="triples")
    _diagonal(ax, x)
    ax.set_xlabel("exact f(a,b,c)")
    ax.set_ylabel("new upper bound")
    ax.legend()
    return fig


def plot_iteration_comparison(rows: list[Row]):
    """One-iteration bound against the two-iteration bound, diagonal drawn."""
    data = usable(rows)
    fig, ax = _fig(f"1 vs 2 iterations ({len(data)} points)")
    x = [r.f_new_upper_n1 for r in data]
    ax.plot(x, [r.f_new_upper for r in data], ".", label="triples")
    _diagonal(ax, x)
    ax.set_xlabel("bound with 1 iteration")
    ax.set_ylabel("bound with 2 iterations")
    ax.legend()
    return fig


_BUILDERS = {
    "main": plot_main,
    "bound-comparison": plot_bound_comparison,
    "conjecture": plot_conjecture,
    "frob-comparison": plot_frob_comparison,
    "iteration-comparison": plot_iteration_comparison,
}


def build_figure(figure_id: str, rows: list[Row]):
    try:
        builder = _BUILDERS[figure_id]
    except KeyError:
        raise ValueError(
            f"unknown figure id {figure_id!r}; expected one of {', '.join(FIGURE_IDS)}"
        ) from None
    if not usable(rows):
        raise ValueError("no usable data rows (all rows empty or error-marked)")
    return builder(rows)


def render(figure_id: str, csv_path, out_path) -> None:
    from .reader import read_rows

    fig = build_figure(figure_id, read_rows(csv_path))
    try:
        fig.savefig(out_path, dpi=120)
    finally:
        plt.close(fig)
