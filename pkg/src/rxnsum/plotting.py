"""Trajectory plots written straight to image files."""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .simulate import Trajectory  # noqa: E402


def plot_trajectory(traj: Trajectory, species: Sequence[str], path: str,
                    title: str = "") -> str:
    """Step plot of every species count against time; returns ``path``."""
    rows = traj.rows()
    times = [t for t, _, _ in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    for j, name in enumerate(species):
        ax.step(times, [s[j] for _, _, s in rows], where="post", label=name)
    ax.set_xlabel("time")
    ax.set_ylabel("molecule count")
    if title:
        ax.set_title(title)
    if species:
        ax.legend(loc="best", fontsize="small")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
    return path
