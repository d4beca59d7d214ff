"""Trinomials a*z**n + b*z**m + c, their normalization and shared result types.

Coefficients are plain Python ``complex`` values.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import asdict, dataclass, field
from enum import Enum
from typing import Any


class TrinomialError(ValueError):
    """Base class for invalid input to the trinomial routines."""


class DegenerateCoefficient(TrinomialError):
    pass


class AllCoefficientsZero(TrinomialError):
    pass


class ZeroCoefficient(TrinomialError):
    pass


class ZeroArgument(TrinomialError):
    """The argument of 0 is undefined."""


def modulus(z: complex) -> float:
    return abs(complex(z))


def argument(z: complex) -> float:
    """Principal argument in (-pi, pi].

    ``cmath.phase`` returns -pi for a negative real with a ``-0.0``
    imaginary part; that is folded back to +pi.
    """
    z = complex(z)
    if z == 0:
        raise ZeroArgument("argument of 0 is undefined")
    phi = cmath.phase(z)
    if phi <= -math.pi:
        phi = math.pi
    return phi


@dataclass(frozen=True)
class Trinomial:
    """``a*z**n + b*z**m + c`` with ``n > m >= 1``."""

    n: int
    m: int
    a: complex = 1.0
    b: complex = 0.0
    c: complex = 0.0

    def __post_init__(self):
        if int(self.n) != self.n or int(self.m) != self.m:
            raise TrinomialError("exponents must be integers")
        if not self.n > self.m >= 1:
            raise TrinomialError(f"need n > m >= 1, got n={self.n}, m={self.m}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "m", int(self.m))
        for name in "abc":
            object.__setattr__(self, name, complex(getattr(self, name)))

    def __call__(self, z):
        return self.a * z**self.n + self.b * z**self.m + self.c

    def coefficients(self) -> list[complex]:
        """Dense coefficient list, highest degree first (numpy.roots order)."""
        coeffs = [0j] * (self.n + 1)
        coeffs[0] = self.a
        coeffs[self.n - self.m] += self.b
        coeffs[self.n] += self.c
        return coeffs


@dataclass(frozen=True)
class NormalizedTrinomial:
    """Monic ``z**n + b*z**m + c`` with coprime exponents.

    ``reduction`` is the gcd that was divided out of the original exponents.
    """

    n: int
    m: int
    b: complex
    c: complex
    reduction: int = 1

    def __post_init__(self):
        if not self.n > self.m >= 1:
            raise TrinomialError(f"need n > m >= 1, got n={self.n}, m={self.m}")
        if math.gcd(self.n, self.m) != 1:
            raise TrinomialError(f"exponents must be coprime, got gcd({self.n}, {self.m}) > 1")
        object.__setattr__(self, "b", complex(self.b))
        object.__setattr__(self, "c", complex(self.c))

    def as_trinomial(self) -> Trinomial:
        return Trinomial(self.n, self.m, 1.0, self.b, self.c)


def normalize(t: Trinomial) -> NormalizedTrinomial:
    """Divide by the leading coefficient and reduce exponents by their gcd.

    Schur stability is preserved: ``z -> z**l`` maps the unit disc onto
    itself.
    """
    if t.a == 0 or t.b == 0 or t.c == 0:
        raise DegenerateCoefficient("a, b and c must all be nonzero; use classify_degenerate")
    ell = math.gcd(t.n, t.m)
    return NormalizedTrinomial(t.n // ell, t.m // ell, t.b / t.a, t.c / t.a, ell)


class CertificateKind(str, Enum):
    DEGENERATE_TABLE = "DegenerateTable"
    PRODUCT_BOUND = "ProductBound"
    COHN_MEMBERSHIP = "CohnMembership"
    BOHL_COUNT = "BohlCount"
    PARAMETRIZATION = "Parametrization"


@dataclass(frozen=True)
class Certificate:
    """Evidence behind a verdict; only the fields relevant to ``kind`` are set."""

    kind: CertificateKind
    case: str | None = None
    product_modulus: float | None = None
    pivot: float | None = None
    half_width: float | None = None
    count: int | None = None
    degree: int | None = None
    region: str | None = None
    x: float | None = None
    y: float | None = None
    s: float | None = None
    t: float | None = None
    t_bound: float | None = None
    omega: float | None = None

    def to_dict(self) -> dict[str, Any]:
        out = {k: v for k, v in asdict(self).items() if v is not None}
        out["kind"] = self.kind.value
        return out


@dataclass(frozen=True)
class StabilityVerdict:
    stable: bool
    certificate: Certificate
    marginal: bool = False
    notes: tuple[str, ...] = field(default=())

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "stable": self.stable,
            "marginal": self.marginal,
            "certificate": self.certificate.to_dict(),
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def classify_degenerate(t: Trinomial) -> StabilityVerdict | None:
    """Verdict for a trinomial with a vanishing coefficient, else ``None``.

    Four cases, keyed on which of a, b, c vanish:

    ========================  ====================
    a = 0, b != 0             stable iff |c|/|b| < 1
    a = 0, b = 0              stable iff |c| < 1
    a != 0, b = 0             stable iff |c|/|a| < 1
    a != 0, b != 0, c = 0     stable iff |b|/|a| < 1
    ========================  ====================
    """
    a, b, c = t.a, t.b, t.c
    if a != 0 and b != 0 and c != 0:
        return None
    if a == 0 and b == 0 and c == 0:
        raise AllCoefficientsZero("the zero function has no stability verdict")
    if a == 0 and b != 0:
        case, ratio = "a=0", abs(c) / abs(b)
    elif a == 0:
        case, ratio = "a=0,b=0", abs(c)
    elif b == 0:
        case, ratio = "b=0", abs(c) / abs(a)
    else:
        case, ratio = "c=0", abs(b) / abs(a)
    cert = Certificate(CertificateKind.DEGENERATE_TABLE, case=case, product_modulus=ratio)
    return StabilityVerdict(ratio < 1.0, cert)
