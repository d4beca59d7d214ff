"""Two-delay linear recurrence X(t) = -b X(t - (n - m)) - c X(t - n).

Its characteristic polynomial is z^n + b z^m + c, so trajectories decay
exactly when that trinomial is Schur stable.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import TrinomialError

OVERFLOW = 1e300


class DegenerateTrajectory(TrinomialError):
    pass


@dataclass(frozen=True)
class RecurrenceSpec:
    n: int
    m: int
    b: complex
    c: complex
    initial: tuple[complex, ...]
    horizon: int

    def __post_init__(self):
        if not self.n > self.m >= 1:
            raise TrinomialError(f"need n > m >= 1, got n={self.n}, m={self.m}")
        if len(self.initial) != self.n:
            raise TrinomialError(f"initial string needs {self.n} values, got {len(self.initial)}")
        if self.horizon < self.n:
            raise TrinomialError("horizon must be at least n")
        object.__setattr__(self, "initial", tuple(complex(v) for v in self.initial))


@dataclass(frozen=True)
class Trajectory:
    values: np.ndarray
    divergent: bool
    n: int

    def __len__(self) -> int:
        return len(self.values)


def simulate(spec: RecurrenceSpec) -> Trajectory:
    """Run the recurrence for ``spec.horizon`` samples (seed included).

    Stops early, flagged divergent, once |X(t)| exceeds 1e300.
    """
    n, lag = spec.n, spec.n - spec.m
    b, c = complex(spec.b), complex(spec.c)
    x = np.zeros(spec.horizon, dtype=complex)
    x[:n] = spec.initial
    for k in range(n, spec.horizon):
        v = -b * x[k - lag] - c * x[k - n]
        if not abs(v) <= OVERFLOW:
            return Trajectory(x[:k].copy(), True, n)
        x[k] = v
    return Trajectory(x, False, n)


def default_horizon(n: int, rho: float | None) -> int:
    """Steps needed for a rho^t envelope to shrink by 1e-6 (at least 50 n)."""
    if rho is None or not 0 < rho < 1:
        return 200 * n
    return max(50 * n, math.ceil(math.log(1e-6) / math.log(rho)))


def random_initial(n: int, seed: int | None = None) -> tuple[complex, ...]:
    rng = np.random.default_rng(seed)
    return tuple(rng.standard_normal(n) + 1j * rng.standard_normal(n))


def empirical_decay_rate(traj: Trajectory, tiny: float = 1e-280) -> float:
    """Per-step slope of log(window max |X|), windows of length n.

    Negative means decay.  Windows that underflowed are dropped; the fit uses
    the second half of the remaining windows so the transient is ignored.
    """
    n = traj.n
    vals = np.abs(traj.values)
    if len(vals) < 4 * n:
        raise DegenerateTrajectory(f"need at least {4 * n} samples, got {len(vals)}")
    if traj.divergent:
        raise DegenerateTrajectory("trajectory diverged")
    if not vals.any():
        raise DegenerateTrajectory("trajectory is identically zero")
    nwin = len(vals) // n
    env = vals[: nwin * n].reshape(nwin, n).max(axis=1)
    centers = np.arange(nwin) * n + (n - 1) / 2.0
    keep = env > tiny
    env, centers = env[keep], centers[keep]
    if len(env) < 2:
        # collapsed to zero within a window or two: decays as fast as it gets
        return -math.inf
    half = len(env) // 2 if len(env) >= 4 else 0
    slope = np.polyfit(centers[half:], np.log(env[half:]), 1)[0]
    return float(slope)


def write_csv(traj: Trajectory, path: str | Path) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "re", "im", "modulus"])
        for k, v in enumerate(traj.values):
            writer.writerow([k, repr(float(v.real)), repr(float(v.imag)), repr(float(abs(v)))])

