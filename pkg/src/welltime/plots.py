"""Figure rendering for the report path (PNG files next to the data files)."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["render_theta", "render_zero_spacing", "render_relative_error"]

_FIGSIZE = (7.0, 4.2)
_DPI = 150


def _new_axes(xlabel: str, ylabel: str, title: str):
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    ax.set_title(title)
    ax.grid(True, alpha=0.3)
    return fig, ax


def _save(fig, path: str) -> None:
    fig.tight_layout()
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)


def render_theta(path: str, ys, values, show_envelope: bool = True) -> None:
    """Theta(y) curve, optionally with the +/- 2/sqrt(y) envelope overlaid."""
    ys = np.asarray(ys, dtype=float)
    values = np.asarray(values, dtype=float)
    fig, ax = _new_axes("y", "theta(y)", "Scaled time eigenfunction")
    ax.plot(ys, values, lw=1.0, label="theta(y)")
    if show_envelope:
        mask = ys >= 0.4
        if np.any(mask):
            env = 2.0 / np.sqrt(ys[mask])
            ax.plot(ys[mask], env, "k--", lw=0.8, alpha=0.6, label=r"$\pm 2/\sqrt{y}$")
            ax.plot(ys[mask], -env, "k--", lw=0.8, alpha=0.6)
    ax.axhline(0.0, color="gray", lw=0.5)
    ax.legend(loc="upper right")
    _save(fig, path)


def render_zero_spacing(path: str, ns, spacings) -> None:
    """Gap between consecutive zeros against the zero index: the zeros bunch up."""
    fig, ax = _new_axes("zero index n", "z_n - z_{n-1}", "Spacing between consecutive zeros")
    ax.plot(list(ns), list(spacings), "o-", ms=3, lw=0.8)
    _save(fig, path)


def render_relative_error(path: str, ns, relative_errors) -> None:
    """Relative error of the closed-form zero prediction against the index."""
    fig, ax = _new_axes("zero index n", "(z_n - predicted) / z_n",
                        "Relative error of the predicted zero positions")
    ax.plot(list(ns), list(relative_errors), "o-", ms=3, lw=0.8)
    ax.axhline(0.0, color="gray", lw=0.5)
    _save(fig, path)
