"""Counting integers in open intervals (P - w, P + w).

All counts are for the *open* interval.  A boundary within ``tau_int`` of an
integer is snapped onto it (and so excluded); callers learn about it through
:func:`boundary_is_integer` / :func:`count_with_margin`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .config import DEFAULT
from .core import TrinomialError


class PreconditionViolated(TrinomialError):
    pass


@dataclass(frozen=True)
class BohlInterval:
    pivot: float
    half_width: float

    def __post_init__(self):
        if not self.half_width >= 0:
            raise ValueError(f"half_width must be >= 0, got {self.half_width}")

    @property
    def lower(self) -> float:
        return self.pivot - self.half_width

    @property
    def upper(self) -> float:
        return self.pivot + self.half_width

    @property
    def length(self) -> float:
        return 2.0 * self.half_width


def _snap(value: float, tol: float) -> tuple[float, bool]:
    nearest = round(value)
    if abs(value - nearest) <= tol:
        return float(nearest), True
    return value, False


def near_integer(value: float, tol: float = DEFAULT.tau_int) -> bool:
    return abs(value - round(value)) <= tol


def boundary_is_integer(interval: BohlInterval, tol: float = DEFAULT.tau_int) -> tuple[bool, bool]:
    """Whether the lower and upper boundary points are (numerically) integers."""
    return near_integer(interval.lower, tol), near_integer(interval.upper, tol)


def count_with_margin(interval: BohlInterval, tol: float = DEFAULT.tau_int) -> tuple[int, bool]:
    """Return ``(#(I ∩ Z), marginal)``; marginal means a boundary hit an integer."""
    if interval.half_width == 0:
        return 0, False
    lo, lo_hit = _snap(interval.lower, tol)
    hi, hi_hit = _snap(interval.upper, tol)
    # integers k with lo < k < hi
    first = math.floor(lo) + 1
    last = math.ceil(hi) - 1
    return max(0, last - first + 1), lo_hit or hi_hit


def count_integers(interval: BohlInterval, tol: float = DEFAULT.tau_int) -> int:
    return count_with_margin(interval, tol)[0]


def on_half_lattice(value: float, tol: float = DEFAULT.tau_int) -> bool:
    return near_integer(2.0 * value, 2.0 * tol)


def admissible_pivot_shift(interval: BohlInterval, k: int, tol: float = DEFAULT.tau_int) -> float:
    """Largest pivot shift that keeps exactly ``k`` integers inside.

    Returns ``nu / 2`` with ``nu = min(2w - (k - 1), k + 1 - 2w)``.  Moving the
    pivot by less than that keeps the count at ``k`` with non-integer
    boundaries; moving it by exactly that puts a boundary on an integer; any
    shift in ``(nu/2, 1/2]`` changes the count.

    The pivot must sit on the half-integer lattice and the interval must hold
    ``k`` integers with non-integer boundaries.
    """
    if not on_half_lattice(interval.pivot, tol):
        raise PreconditionViolated(f"pivot {interval.pivot} is not in Z/2")
    count, marginal = count_with_margin(interval, tol)
    if marginal:
        raise PreconditionViolated("interval has an integer boundary point")
    if count != k:
        raise PreconditionViolated(f"interval holds {count} integers, not {k}")
    two_w = interval.length
    nu = min(two_w - (k - 1), k + 1 - two_w)
    return nu / 2.0
