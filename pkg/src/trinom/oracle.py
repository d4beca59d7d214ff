"""Ground-truth roots by Aberth-Ehrlich simultaneous iteration.

Kept deliberately independent of the Bohl/region code: nothing here looks at
pivots, triangles or intervals, only at the polynomial values.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import DEFAULT
from .core import Trinomial, TrinomialError

MAX_ITER = 500
STEP_TOL = 1e-13
_EPS = np.finfo(float).eps
_SEED = 20240611


class NotConverged(TrinomialError):
    pass


@dataclass(frozen=True)
class RootSet:
    roots: np.ndarray
    residuals: np.ndarray
    converged: bool
    iterations: int = 0

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.roots)

    @property
    def max_modulus(self) -> float:
        return float(self.moduli.max()) if self.roots.size else 0.0


def _initial_guesses(a: np.ndarray, b: np.ndarray, c: np.ndarray, n: int, m: int) -> np.ndarray:
    """Points on one or two circles read off the Newton polygon.

    If the middle coefficient sits above the chord joining the outer two,
    m roots have modulus about (|c|/|b|)^(1/m) and n - m about
    (|b|/|a|)^(1/(n-m)); otherwise all n are near (|c|/|a|)^(1/n).
    """
    rng = np.random.default_rng(_SEED)
    la, lb, lc = np.log(np.abs(a)), np.log(np.abs(b) + 1e-300), np.log(np.abs(c))
    split = lb > (1 - m / n) * lc + (m / n) * la
    k = np.arange(n)
    jitter = 0.05 * rng.standard_normal(n)
    theta_one = 2 * np.pi * k / n + 0.4 + jitter
    z = np.exp((lc - la) / n)[:, None] * np.exp(1j * theta_one)[None, :]
    if split.any():
        km, kn = np.arange(m), np.arange(n - m)
        inner = np.exp((lc - lb) / m)[:, None] * np.exp(1j * (2 * np.pi * km / m + 0.4 + jitter[:m]))[None, :]
        outer = np.exp((lb - la) / (n - m))[:, None] * np.exp(
            1j * (2 * np.pi * kn / (n - m) + 0.7 + jitter[m:]))[None, :]
        z[split] = np.concatenate([inner, outer], axis=1)[split]
    return z


def aberth_batch(a, b, c, n: int, m: int, max_iter: int = MAX_ITER, tol: float = STEP_TOL):
    """Roots of ``a z^n + b z^m + c`` for arrays of coefficients sharing (n, m).

    Coefficient arrays have shape (N,), ``c`` must be nonzero.  Returns
    ``(roots, converged, iterations)`` with roots of shape (N, n).
    """
    a = np.atleast_1d(np.asarray(a, dtype=complex))
    b = np.atleast_1d(np.asarray(b, dtype=complex))
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    z = _initial_guesses(a, b, c, n, m)
    A, B, C = a[:, None], b[:, None], c[:, None]
    absA, absB, absC = np.abs(A), np.abs(B), np.abs(C)
    active = np.ones(z.shape, dtype=bool)
    eye = np.eye(n, dtype=bool)
    it = 0
    for it in range(1, max_iter + 1):
        zn1 = z ** (n - 1)
        zm1 = z ** (m - 1)
        f = A * zn1 * z + B * zm1 * z + C
        df = n * A * zn1 + m * B * zm1
        az = np.abs(z)
        # roots whose value is at rounding level are done
        bound = 4 * n * _EPS * (absA * az**n + absB * az**m + absC)
        active &= ~(np.abs(f) <= bound)
        if not active.any():
            break
        diff = z[:, :, None] - z[:, None, :]
        diff[:, eye] = 1.0
        inv = 1.0 / diff
        inv[:, eye] = 0.0
        s = inv.sum(axis=2)
        with np.errstate(divide="ignore", invalid="ignore"):
            w = f / df
            delta = w / (1.0 - w * s)
        bad = ~np.isfinite(delta)
        if bad.any():
            delta[bad] = 1e-3 * (1 + az[bad])
        delta = np.where(active, delta, 0.0)
        z = z - delta
        small = np.abs(delta) <= tol * np.maximum(1.0, np.abs(z))
        active &= ~small
        if not active.any():
            break
    converged = ~active.any(axis=1)
    return z, converged, it


def find_roots(t: Trinomial, max_iter: int = MAX_ITER) -> RootSet:
    """All n roots (with multiplicity) of a trinomial with ``a != 0``."""
    if t.a == 0:
        raise TrinomialError("leading coefficient a must be nonzero")
    n, m = t.n, t.m
    if t.c == 0:
        # z^m (a z^(n-m) + b): m roots at the origin
        zeros = np.zeros(m, dtype=complex)
        if t.b == 0:
            roots = np.zeros(n, dtype=complex)
            return RootSet(roots, np.zeros(n), True)
        tail = Trinomial(n - m, 1, t.a, 0.0, t.b) if n - m > 1 else None
        if tail is None:
            rest, ok, it = np.array([-t.b / t.a]), True, 0
        else:
            sub = find_roots(tail, max_iter)
            rest, ok, it = sub.roots, sub.converged, sub.iterations
        roots = np.concatenate([zeros, rest])
        return RootSet(roots, np.abs(t(roots)), ok, it)
    z, conv, it = aberth_batch(t.a, t.b, t.c, n, m, max_iter)
    roots = z[0]
    return RootSet(roots, np.abs(t(roots)), bool(conv[0]), it)


def count_in_disc(rs: RootSet, r: float, margin: float = DEFAULT.root_margin) -> tuple[int, int]:
    """``(roots with |z| < r, roots with | |z| - r | < margin)``."""
    if not rs.converged:
        raise NotConverged("root iteration did not converge")
    mod = rs.moduli
    return int(np.count_nonzero(mod < r)), int(np.count_nonzero(np.abs(mod - r) < margin))


@dataclass(frozen=True)
class SpectralVerdict:
    stable: bool
    marginal: bool
    rho: float


def spectral_verdict(t: Trinomial, margin: float = DEFAULT.root_margin) -> SpectralVerdict:
    rs = find_roots(t)
    if not rs.converged:
        raise NotConverged("root iteration did not converge")
    rho = rs.max_modulus
    return SpectralVerdict(rho < 1.0, abs(rho - 1.0) < margin, rho)


def spectral_stable(t: Trinomial) -> bool:
    """Max root modulus strictly below 1."""
    return spectral_verdict(t).stable


def spectral_radius_batch(a, b, c, n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """Max root modulus for many trinomials with common exponents.

    Returns ``(rho, converged)``; used to rasterize regions quickly.
    """
    z, conv, _ = aberth_batch(a, b, c, n, m)
    return np.abs(z).max(axis=1), conv
