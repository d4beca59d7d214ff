"""Schur stability of complex trinomials through the (x, y, s, t) parametrization.

A monic, gcd-1 trinomial ``z^n + b z^m + c`` is projected to the real point
``(x, y) = (|b|, (-1)^n |c|)``.  The projected point falls in one of

* ``Gamma``: ``x + |y| < 1`` (no triangle with sides 1, x, |y|);
* ``Delta``: triangle (possibly degenerate) with ``2*omega(x, y) > n - 1``;
* ``Outside``: everything else, never stable.

The rotation ``s`` and pivot offset ``t`` then decide: Gamma points are stable
for every admissible ``t`` (``|t| <= pi/n``), Delta points iff
``|t| < pi (2 omega - n + 1) / n``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .bohl import NotATriangle, TriangleClass, classify_triangle, count_roots_in_disc, triangle_angles
from .config import DEFAULT, Tolerances
from .core import (
    Certificate,
    CertificateKind,
    NormalizedTrinomial,
    StabilityVerdict,
    Trinomial,
    TrinomialError,
    ZeroCoefficient,
    argument,
    classify_degenerate,
    normalize,
)

TWO_PI = 2.0 * math.pi


class ZeroV(TrinomialError):
    pass


class InvalidParameters(TrinomialError):
    pass


class NotInProjection(TrinomialError):
    pass


class RegionTag(str, Enum):
    COHN = "Cohn"
    GAMMA = "Gamma"
    DELTA = "Delta"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class RegionPoint:
    """Projected real point ``[1 : x : y]`` with ``y = (-1)^n |c|``."""

    x: float
    y: float
    n: int
    m: int

    def __post_init__(self):
        if not self.x > 0:
            raise InvalidParameters(f"x must be positive, got {self.x}")
        want = 1.0 if self.n % 2 == 0 else -1.0
        if self.y == 0 or math.copysign(1.0, self.y) != want:
            raise InvalidParameters(f"y must be nonzero with sign (-1)^n, got y={self.y} for n={self.n}")


@dataclass(frozen=True)
class RegionClass:
    tag: RegionTag
    omega: float | None = None
    marginal: bool = False


def project_pi(t: NormalizedTrinomial) -> RegionPoint:
    if t.b == 0 or t.c == 0:
        raise ZeroCoefficient("b and c must be nonzero")
    sign = 1.0 if t.n % 2 == 0 else -1.0
    return RegionPoint(abs(t.b), sign * abs(t.c), t.n, t.m)


def omega_uv(u: float, v: float, n: int, m: int, tol: float = DEFAULT.tau_tri) -> float:
    """omega(u, v) = [n * w1 + m * w2] / (2 pi) for the triangle (1, u, |v|).

    w1 is the angle opposite the unit side, w2 the one opposite u.
    """
    if v == 0:
        raise ZeroV("v must be nonzero")
    if not u > 0:
        raise NotATriangle(f"u must be positive, got {u}")
    geom = triangle_angles(1.0, u, abs(v), tol=tol)
    return (n * geom.omega1 + m * geom.omega2) / TWO_PI


def classify_uv(u: float, v: float, n: int, m: int, tol: Tolerances = DEFAULT) -> RegionClass:
    """Classify an arbitrary real point of the (u, v) plane.

    Points in the projection quadrant (u >= 0, v of sign (-1)^n) get Gamma /
    Delta / Outside.  Elsewhere only the Cohn domain |u| + |v| < 1 is
    labelled; the rest is Outside.
    """
    in_quadrant = u >= 0 and (v == 0 or (v > 0) == (n % 2 == 0))
    au, av = abs(u), abs(v)
    hyp = au + av - 1.0
    if not in_quadrant:
        if hyp < 0:
            return RegionClass(RegionTag.COHN, marginal=hyp > -tol.tau_tri)
        return RegionClass(RegionTag.OUTSIDE, marginal=hyp < tol.tau_tri)
    if hyp < -tol.tau_tri:
        return RegionClass(RegionTag.GAMMA)
    if u == 0 or v == 0:
        # on an axis with |u| + |v| >= 1: z^n + v or z^n + u z^m, not stable
        return RegionClass(RegionTag.OUTSIDE, marginal=abs(hyp) <= tol.tau_tri)
    cls = classify_triangle(1.0, au, av, tol=tol.tau_tri)
    if cls in (TriangleClass.B_DOMINATES, TriangleClass.C_DOMINATES):
        return RegionClass(RegionTag.OUTSIDE)
    omega = omega_uv(au, av, n, m, tol=tol.tau_tri)
    gap = 2.0 * omega - (n - 1)
    if abs(gap) < tol.tau_int:
        return RegionClass(RegionTag.OUTSIDE, omega, marginal=True)
    if gap < 0:
        return RegionClass(RegionTag.OUTSIDE, omega)
    # degenerate triangles: the hypotenuse belongs to Delta; the other two
    # ties have 2*omega <= n - 1 and were sent to Outside above
    return RegionClass(RegionTag.DELTA, omega, marginal=cls is TriangleClass.DEGENERATE)


def classify_region(p: RegionPoint, tol: Tolerances = DEFAULT) -> RegionClass:
    return classify_uv(p.x, p.y, p.n, p.m, tol)


def t_bound(region: RegionClass, n: int) -> float | None:
    """Admissible |t| for the region: pi/n on Gamma, pi (2w - n + 1)/n on Delta."""
    if region.tag is RegionTag.GAMMA:
        return math.pi / n
    if region.tag is RegionTag.DELTA:
        return math.pi * (2.0 * region.omega - n + 1) / n
    return None


def _wrap(angle: float) -> float:
    """Reduce to (-pi, pi]."""
    w = math.remainder(angle, TWO_PI)
    return math.pi if w <= -math.pi else w


@dataclass(frozen=True)
class Parameters:
    x: float
    y: float
    s: float
    t: float


def decompose_parameters(t: NormalizedTrinomial) -> Parameters:
    """Write (b, c) as (x e^{it} e^{-i(n-m)s}, y e^{-ins}) with |t| <= pi/n.

    Of the n candidate rotations, the one giving the smallest |t| is kept;
    ties go to t >= 0.
    """
    p = project_pi(t)
    n, m = t.n, t.m
    phi = argument(t.c / p.y)
    arg_b = argument(t.b)
    best = None
    for k in range(n):
        s = (-(phi + TWO_PI * k) / n) % TWO_PI
        tt = _wrap(arg_b + (n - m) * s)
        key = (round(abs(tt), 12), tt < 0)
        if best is None or key < best[0]:
            best = (key, s, tt)
    _, s, tt = best
    return Parameters(p.x, p.y, s, tt)


def compose_parameters(x: float, y: float, s: float, t: float, n: int, m: int) -> NormalizedTrinomial:
    """The trinomial z^n + x e^{it} e^{-i(n-m)s} z^m + y e^{-ins}."""
    if not x > 0:
        raise InvalidParameters(f"x must be positive, got {x}")
    if y == 0:
        raise InvalidParameters("y must be nonzero")
    if not 0.0 <= s <= TWO_PI:
        raise InvalidParameters(f"s must lie in [0, 2pi], got {s}")
    b = x * cmath.exp(1j * t) * cmath.exp(-1j * (n - m) * s)
    c = y * cmath.exp(-1j * n * s)
    return NormalizedTrinomial(n, m, b, c)


def is_schur_stable(t: Trinomial, tol: Tolerances = DEFAULT) -> StabilityVerdict:
    """Decide whether every root of ``t`` lies in the open unit disc.

    Pipeline: zero-coefficient table, monic/gcd reduction, |c| < 1 product
    bound, projection and region class, then the |t| bound.
    """
    verdict = classify_degenerate(t)
    if verdict is not None:
        return verdict
    nt = normalize(t)
    n = nt.n
    if abs(nt.c) >= 1.0:
        cert = Certificate(CertificateKind.PRODUCT_BOUND, product_modulus=abs(nt.c), degree=n)
        return StabilityVerdict(False, cert, marginal=abs(abs(nt.c) - 1.0) <= tol.tau_int)

    point = project_pi(nt)
    region = classify_region(point, tol)
    if region.tag is RegionTag.OUTSIDE:
        dc = count_roots_in_disc(nt, 1.0, tol)
        iv = dc.interval
        cert = Certificate(
            CertificateKind.BOHL_COUNT,
            pivot=iv.pivot if iv else None,
            half_width=iv.half_width if iv else None,
            count=dc.count,
            degree=n,
            region=region.tag.value,
            omega=region.omega,
        )
        return StabilityVerdict(False, cert, marginal=region.marginal or dc.marginal)

    params = decompose_parameters(nt)
    bound = t_bound(region, n)
    abs_t = abs(params.t)
    fields = dict(region=region.tag.value, x=params.x, y=params.y, s=params.s, t=params.t,
                  t_bound=bound, omega=region.omega, degree=n)
    if region.tag is RegionTag.GAMMA:
        cert = Certificate(CertificateKind.COHN_MEMBERSHIP, **fields)
        return StabilityVerdict(abs_t <= bound + tol.tau_int, cert, marginal=region.marginal)
    cert = Certificate(CertificateKind.PARAMETRIZATION, **fields)
    marginal = region.marginal or abs(abs_t - bound) < tol.tau_int
    return StabilityVerdict(abs_t < bound, cert, marginal=marginal)


def real_stability_c1c2(x: float, y: float, n: int, m: int) -> bool:
    """Stability of the real trinomial z^n + x z^m + y by conditions C1 / C2.

    C1: |x| + |y| < 1.
    C2: |x| + |y| >= 1, |x| - 1 < |y| < 1, (-1)^m x^n y^(n-m) < 0 and
        [n acos((1 + x^2 - y^2) / 2|x|) + (n - m) acos((1 - x^2 + y^2) / 2|y|)] / pi < 1.
    """
    ax, ay = abs(x), abs(y)
    if ax + ay < 1:
        return True
    if not (ax - 1 < ay < 1):
        return False
    if not _sign_condition(x, y, n, m):
        return False
    w3 = math.acos(_clamp((1 + x * x - y * y) / (2 * ax)))
    w2 = math.acos(_clamp((1 - x * x + y * y) / (2 * ay)))
    return (n * w3 + (n - m) * w2) / math.pi < 1


def real_stability_c2_prime(x: float, y: float, n: int, m: int) -> bool:
    """Variant: C1, or |x| + |y| >= 1, the sign condition and
    [n acos((1 - x^2 - y^2) / 2|x||y|) - m acos((1 - x^2 + y^2) / 2|y|)] / pi < 1.
    """
    ax, ay = abs(x), abs(y)
    if ax + ay < 1:
        return True
    if not _sign_condition(x, y, n, m):
        return False
    w1c = math.acos(_clamp((1 - x * x - y * y) / (2 * ax * ay)))
    w2 = math.acos(_clamp((1 - x * x + y * y) / (2 * ay)))
    return (n * w1c - m * w2) / math.pi < 1


def _sign_condition(x: float, y: float, n: int, m: int) -> bool:
    # (-1)^m x^n y^(n-m) < 0 without forming the powers
    sign = (-1) ** m
    if x < 0 and n % 2:
        sign = -sign
    if y < 0 and (n - m) % 2:
        sign = -sign
    return sign < 0


def _clamp(v: float) -> float:
    return min(1.0, max(-1.0, v))


SIGN_COMBOS = ((1, 1), (-1, 1), (1, -1), (-1, -1))


def sign_flip_table(x: float, y: float, n: int, m: int, tol: Tolerances = DEFAULT) -> dict[tuple[int, int], bool]:
    """Stability of z^n + (sx x) z^m + (sy y) for the four sign pairs (sx, sy).

    ``(x, y)`` must be a projected point in Gamma or Delta.  Gamma points are
    stable under every flip.  For Delta:

    * n even: (x, y) and (-x, y);
    * n odd, m even: (x, y) and (-x, -y);
    * n odd, m odd: (x, y) and (x, -y).
    """
    region = classify_region(RegionPoint(x, y, n, m), tol)
    if region.tag is RegionTag.GAMMA:
        return {combo: True for combo in SIGN_COMBOS}
    if region.tag is not RegionTag.DELTA:
        raise NotInProjection(f"({x}, {y}) is not in the projected stability region")
    if n % 2 == 0:
        partner = (-1, 1)
    elif m % 2 == 0:
        partner = (-1, -1)
    else:
        partner = (1, -1)
    return {combo: combo in ((1, 1), partner) for combo in SIGN_COMBOS}
