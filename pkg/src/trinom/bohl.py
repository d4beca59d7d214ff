"""Root counts of trinomials in discs |z| < r by Bohl's theorem.

Only gcd-1 monic trinomials are handled directly; :func:`count_roots`
normalizes a general :class:`~trinom.core.Trinomial` first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .config import DEFAULT, Tolerances
from .core import (
    NormalizedTrinomial,
    Trinomial,
    TrinomialError,
    ZeroCoefficient,
    argument,
    normalize,
)
from .interval import BohlInterval, count_with_margin, near_integer


class ZeroSide(TrinomialError):
    pass


class NotATriangle(TrinomialError):
    pass


class TriangleClass(str, Enum):
    TRIANGLE = "Triangle"
    DEGENERATE = "Degenerate"
    C_DOMINATES = "NoTriangle-cDominates"
    B_DOMINATES = "NoTriangle-bDominates"
    A_DOMINATES = "NoTriangle-aDominates"


@dataclass(frozen=True)
class TriangleGeometry:
    """Sides (|a| r^n, |b| r^m, |c|) and the angles opposite each of them."""

    side_a: float
    side_b: float
    side_c: float
    omega1: float
    omega2: float
    omega3: float
    degenerate: bool


def classify_triangle(side_a: float, side_b: float, side_c: float,
                      tol: float = DEFAULT.tau_tri) -> TriangleClass:
    """Triangle / degenerate / which side dominates.

    A side within ``tol * max_side`` of the sum of the other two is a tie
    and goes to ``DEGENERATE``.
    """
    sides = (side_a, side_b, side_c)
    if min(sides) <= 0:
        raise ZeroSide(f"all sides must be positive, got {sides}")
    largest = max(sides)
    idx = sides.index(largest)
    excess = largest - (sum(sides) - largest)
    if abs(excess) <= tol * largest:
        return TriangleClass.DEGENERATE
    if excess > 0:
        return (TriangleClass.A_DOMINATES, TriangleClass.B_DOMINATES, TriangleClass.C_DOMINATES)[idx]
    return TriangleClass.TRIANGLE


def _angle_opposite(c: float, a: float, b: float) -> float:
    # Kahan's needle-safe formula for the angle opposite side c.
    if a < b:
        a, b = b, a
    if b >= c:
        mu = c - (a - b)
    else:
        mu = b - (a - c)
    num = ((a - b) + c) * max(mu, 0.0)
    den = (a + (b + c)) * ((a - c) + b)
    if den <= 0:
        return math.pi
    return 2.0 * math.atan(math.sqrt(max(num, 0.0) / den))


def triangle_angles(side_a: float, side_b: float, side_c: float,
                    tol: float = DEFAULT.tau_tri) -> TriangleGeometry:
    """Angles opposite each side; exact (pi, 0, 0) patterns for ties."""
    cls = classify_triangle(side_a, side_b, side_c, tol)
    if cls is TriangleClass.DEGENERATE:
        sides = (side_a, side_b, side_c)
        angles = [0.0, 0.0, 0.0]
        angles[sides.index(max(sides))] = math.pi
        return TriangleGeometry(side_a, side_b, side_c, *angles, degenerate=True)
    if cls is not TriangleClass.TRIANGLE:
        raise NotATriangle(f"sides {side_a}, {side_b}, {side_c}: {cls.value}")
    w1 = _angle_opposite(side_a, side_b, side_c)
    w2 = _angle_opposite(side_b, side_a, side_c)
    w3 = _angle_opposite(side_c, side_a, side_b)
    return TriangleGeometry(side_a, side_b, side_c, w1, w2, w3, degenerate=False)


def disc_sides(t: NormalizedTrinomial, r: float) -> tuple[float, float, float]:
    """(r^n, |b| r^m, |c|) rescaled so the largest is 1.

    Computed in log space; the triangle tests and angles are scale-free and
    r^n would overflow for large n.
    """
    if t.b == 0 or t.c == 0:
        raise ZeroCoefficient("b and c must be nonzero")
    if not r > 0:
        raise ValueError(f"radius must be positive, got {r}")
    log_r = math.log(r)
    logs = (t.n * log_r, math.log(abs(t.b)) + t.m * log_r, math.log(abs(t.c)))
    top = max(logs)
    # floor at ~1e-300 so a side that underflows still counts as positive
    return tuple(math.exp(max(v - top, -690.0)) for v in logs)  # type: ignore[return-value]


def pivot_p(t: NormalizedTrinomial) -> float:
    """Center of Bohl's counting interval for a monic trinomial."""
    if t.b == 0 or t.c == 0:
        raise ZeroCoefficient("b and c must be nonzero")
    beta, gamma = argument(t.b), argument(t.c)
    return (t.n * (math.pi + beta - gamma) - t.m * (math.pi - gamma)) / (2.0 * math.pi)


def omega_from_geometry(n: int, m: int, geom: TriangleGeometry) -> float:
    return (n * geom.omega1 + m * geom.omega2) / (2.0 * math.pi)


def omega_r(t: NormalizedTrinomial, r: float, tol: float = DEFAULT.tau_tri) -> float:
    """Half-width of Bohl's interval at radius r."""
    geom = triangle_angles(*disc_sides(t, r), tol=tol)
    return omega_from_geometry(t.n, t.m, geom)


@dataclass(frozen=True)
class DiscCount:
    count: int
    marginal: bool
    triangle: TriangleClass
    interval: BohlInterval | None = None
    exceptional: bool = False


def count_roots_in_disc(t: NormalizedTrinomial, r: float,
                        tol: Tolerances = DEFAULT) -> DiscCount:
    """Number of roots of ``z**n + b z**m + c`` with ``|z| < r``.

    ``marginal`` is set when a triangle tie or an integer boundary point was
    decided within tolerance; such counts concern roots numerically on
    ``|z| = r``.
    """
    n, m = t.n, t.m
    sides = disc_sides(t, r)
    cls = classify_triangle(*sides, tol=tol.tau_tri)
    if cls is TriangleClass.C_DOMINATES:
        return DiscCount(0, False, cls)
    if cls is TriangleClass.B_DOMINATES:
        return DiscCount(m, False, cls)
    if cls is TriangleClass.A_DOMINATES:
        return DiscCount(n, False, cls)

    geom = triangle_angles(*sides, tol=tol.tau_tri)
    interval = BohlInterval(pivot_p(t), omega_from_geometry(n, m, geom))
    count, marginal = count_with_margin(interval, tol.tau_int)
    if geom.degenerate:
        marginal = True
        b_is_sum = geom.omega2 == math.pi
        if b_is_sum and near_integer(interval.upper, tol.tau_int):
            # |b| r^m = r^n + |c| with P + w an integer: count is m past the
            # critical radius r^(n-m) = m|b|/n.
            if (n - m) * math.log(r) > math.log(m * abs(t.b) / n):
                return DiscCount(m, True, cls, interval, exceptional=True)
    return DiscCount(count, marginal, cls, interval)


def count_roots(t: Trinomial, r: float, tol: Tolerances = DEFAULT) -> DiscCount:
    """Disc count for a general trinomial with nonzero coefficients.

    With ``l = gcd(n, m)`` the roots are the l-th roots of the roots of the
    reduced trinomial, so the count is ``l`` times the reduced count at
    radius ``r**l``.
    """
    if t.a == 0 or t.b == 0 or t.c == 0:
        raise ZeroCoefficient("Bohl counting needs a, b and c nonzero")
    reduced = normalize(t)
    ell = reduced.reduction
    inner = count_roots_in_disc(reduced, r**ell, tol)
    if ell == 1:
        return inner
    return DiscCount(ell * inner.count, inner.marginal, inner.triangle, inner.interval, inner.exceptional)
