"""Scatter renderings of the spike-function samples.

Scatter, never lines: the sampled function is nowhere locally monotone, so
line interpolation would fabricate structure that is not there.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .data import read_xy_csv
from .spec import FigureSpec


def _panel(ax, points, spec: FigureSpec, label: str):
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    ax.scatter(xs, ys, s=spec.point_size, color="black", linewidths=0)
    ax.set_xlim(*spec.xlim)
    if spec.ylim is not None:
        ax.set_ylim(*spec.ylim)
    ax.set_xlabel("x")
    ax.set_title(label)


def build_fig1(spec: FigureSpec):
    """One panel per theta, side by side, shared y axis."""
    fig, axes = plt.subplots(
        1, len(spec.input_csv), figsize=(4 * len(spec.input_csv), 4), sharey=True
    )
    if len(spec.input_csv) == 1:
        axes = [axes]
    for ax, path, theta in zip(axes, spec.input_csv, spec.thetas):
        _panel(ax, read_xy_csv(path), spec, f"theta = {theta:g}")
    axes[0].set_ylabel("f(x)")
    fig.tight_layout()
    return fig


def build_fig2(spec: FigureSpec):
    """Single panel for the generalized (log-modulated) family."""
    if len(spec.input_csv) != 1:
        raise ValueError("the generalized-family figure takes a single input CSV")
    fig, ax = plt.subplots(figsize=(5, 4))
    _panel(ax, read_xy_csv(spec.input_csv[0]), spec,
           f"theta = {spec.thetas[0]:g}, log-modulated")
    ax.set_ylabel("f(x)")
    fig.tight_layout()
    return fig


def _save(fig, path: str) -> str:
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_fig1(spec: FigureSpec) -> str:
    return _save(build_fig1(spec), spec.output)


def render_fig2(spec: FigureSpec) -> str:
    return _save(build_fig2(spec), spec.output)
