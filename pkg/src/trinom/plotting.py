"""Matplotlib figures written next to the CSV/PPM outputs."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.colors import ListedColormap  # noqa: E402
from matplotlib.patches import Patch  # noqa: E402

from .raster import PALETTE, TAGS, RegionRaster  # noqa: E402

_RC = {
    "font.size": 10,
    "axes.labelsize": 11,
    "legend.fontsize": 8,
    "xtick.direction": "in",
    "ytick.direction": "in",
    "savefig.bbox": "tight",
}


def plot_region(raster: RegionRaster, path: str | Path, dpi: int = 150) -> None:
    codes = np.vectorize(TAGS.index)(raster.tags) if raster.tags.size else raster.tags
    cmap = ListedColormap([np.array(PALETTE[tag]) / 255.0 for tag in TAGS])
    umin, umax, vmin, vmax = raster.bounds
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(4.5, 4.5))
        ax.imshow(codes, cmap=cmap, vmin=-0.5, vmax=len(TAGS) - 0.5,
                  extent=(umin, umax, vmin, vmax), origin="upper",
                  interpolation="nearest", aspect="auto")
        # hypotenuse of the Gamma triangle
        sign = 1.0 if raster.n % 2 == 0 else -1.0
        ax.plot([0, 1], [sign, 0], ls=":", color="k", lw=0.8)
        ax.axhline(0, color="0.5", lw=0.5)
        ax.axvline(0, color="0.5", lw=0.5)
        ax.set_xlim(umin, umax)
        ax.set_ylim(vmin, vmax)
        ax.set_xlabel(r"$|b|$")
        ax.set_ylabel(r"$(-1)^n|c|$")
        ax.set_title(f"(n, m) = ({raster.n}, {raster.m})")
        present = [tag for tag in TAGS if (raster.tags == tag).any() and tag != "Outside"]
        ax.legend(handles=[Patch(facecolor=np.array(PALETTE[t]) / 255.0, edgecolor="k", label=t) for t in present],
                  loc="upper right", frameon=False)
        fig.savefig(path, dpi=dpi)
        plt.close(fig)


def plot_trajectory(values: np.ndarray, path: str | Path, title: str = "", dpi: int = 150) -> None:
    mod = np.abs(values)
    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(6, 3))
        positive = mod > 0
        ax.semilogy(np.arange(len(mod))[positive], mod[positive], lw=0.7)
        ax.set_xlabel("t")
        ax.set_ylabel("|X(t)|")
        if title:
            ax.set_title(title)
        fig.savefig(path, dpi=dpi)
        plt.close(fig)
