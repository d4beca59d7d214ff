"""Rasters of the projected stability region in the (u, v) = (|b|, ±|c|) plane."""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .config import DEFAULT, Tolerances
from .oracle import spectral_radius_batch
from .region import classify_uv, t_bound

TAGS = ("Cohn", "Gamma", "Delta", "Outside", "Marginal")
MARGINAL = "Marginal"

# RGB per tag for the PPM output
PALETTE = {
    "Cohn": (160, 200, 240),
    "Gamma": (40, 110, 190),
    "Delta": (230, 140, 40),
    "Outside": (255, 255, 255),
    "Marginal": (0, 0, 0),
}

CSV_HEADER = ["u", "v", "tag", "two_omega", "t_bound"]
DEFAULT_BOUNDS = (0.0, 2.0, -1.0, 1.0)


@dataclass(frozen=True)
class RegionRaster:
    n: int
    m: int
    bounds: tuple[float, float, float, float]
    width: int
    height: int
    tags: np.ndarray          # (height, width) of tag strings, row 0 = top
    two_omega: np.ndarray     # NaN where undefined
    t_bounds: np.ndarray      # NaN where undefined

    def counts(self) -> dict[str, int]:
        return {tag: int(np.count_nonzero(self.tags == tag)) for tag in TAGS}

    def fractions(self) -> dict[str, float]:
        total = self.width * self.height
        return {tag: k / total for tag, k in self.counts().items()}


def cell_centers(bounds, width: int, height: int) -> tuple[np.ndarray, np.ndarray]:
    umin, umax, vmin, vmax = bounds
    u = umin + (np.arange(width) + 0.5) * (umax - umin) / width
    v = vmax - (np.arange(height) + 0.5) * (vmax - vmin) / height
    return u, v


def _rows(args):
    n, m, us, vs, tol = args
    out = []
    for v in vs:
        row = []
        for u in us:
            rc = classify_uv(float(u), float(v), n, m, tol)
            tag = MARGINAL if rc.marginal else rc.tag.value
            two_w = 2.0 * rc.omega if rc.omega is not None else math.nan
            tb = t_bound(rc, n)
            row.append((tag, two_w, math.nan if tb is None else tb))
        out.append(row)
    return out


def rasterize(n: int, m: int, bounds=DEFAULT_BOUNDS, width: int = 400, height: int = 400,
              tol: Tolerances = DEFAULT, jobs: int = 1) -> RegionRaster:
    """Classify every cell center; rows may be split across ``jobs`` processes."""
    if width < 1 or height < 1:
        raise ValueError("resolution must be at least 1x1")
    umin, umax, vmin, vmax = bounds
    if not (umax > umin and vmax > vmin):
        raise ValueError(f"empty bounds {bounds}")
    us, vs = cell_centers(bounds, width, height)
    if jobs > 1 and height > 1:
        chunks = np.array_split(vs, min(jobs, height))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_rows, [(n, m, us, chunk, tol) for chunk in chunks])
            rows = [row for part in parts for row in part]
    else:
        rows = _rows((n, m, us, vs, tol))
    tags = np.array([[cell[0] for cell in row] for row in rows], dtype=object)
    two_w = np.array([[cell[1] for cell in row] for row in rows], dtype=float)
    tb = np.array([[cell[2] for cell in row] for row in rows], dtype=float)
    return RegionRaster(n, m, tuple(bounds), width, height, tags, two_w, tb)


def oracle_raster(n: int, m: int, bounds=DEFAULT_BOUNDS, width: int = 400, height: int = 400) -> np.ndarray:
    """Tags from root moduli alone.

    Inside the projection quadrant each cell's real trinomial z^n + u z^m + v
    is solved; stable cells are Gamma when u + |v| < 1, else Delta.  Cells
    outside the quadrant are left as Outside.
    """
    us, vs = cell_centers(bounds, width, height)
    U, V = np.meshgrid(us, vs)
    sign_ok = (V > 0) if n % 2 == 0 else (V < 0)
    quad = (U > 0) & sign_ok
    tags = np.full(U.shape, "Outside", dtype=object)
    if quad.any():
        uq, vq = U[quad], V[quad]
        rho, conv = spectral_radius_batch(np.ones_like(uq), uq, vq, n, m)
        if not conv.all():
            raise RuntimeError("oracle failed to converge on some raster cells")
        stable = rho < 1.0
        sub = np.where(stable, np.where(uq + np.abs(vq) < 1.0, "Gamma", "Delta"), "Outside")
        tags[quad] = sub
    return tags


def write_ppm(raster: RegionRaster, path: str | Path) -> None:
    """Plain (P3) pixmap, one pixel per cell, colored by tag."""
    lines = [f"P3\n{raster.width} {raster.height}\n255\n"]
    for row in raster.tags:
        lines.append(" ".join("%d %d %d" % PALETTE[tag] for tag in row) + "\n")
    Path(path).write_text("".join(lines))


def read_ppm(path: str | Path) -> tuple[int, int, np.ndarray]:
    tokens = Path(path).read_text().split()
    if tokens[0] != "P3":
        raise ValueError("not a plain PPM")
    w, h, maxval = int(tokens[1]), int(tokens[2]), int(tokens[3])
    pix = np.array(tokens[4:], dtype=int).reshape(h, w, 3)
    if pix.max(initial=0) > maxval:
        raise ValueError("pixel value exceeds maxval")
    return w, h, pix


def write_csv(raster: RegionRaster, path: str | Path) -> None:
    us, vs = cell_centers(raster.bounds, raster.width, raster.height)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_HEADER)
        for i, v in enumerate(vs):
            for j, u in enumerate(us):
                writer.writerow([
                    repr(float(u)), repr(float(v)), raster.tags[i, j],
                    _fmt(raster.two_omega[i, j]), _fmt(raster.t_bounds[i, j]),
                ])


def _fmt(x: float) -> str:
    return "" if math.isnan(x) else repr(float(x))
