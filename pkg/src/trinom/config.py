"""Numerical tolerances and the key=value config file that overrides them."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

CONFIG_ENV_VAR = "TRINOM_CONFIG"


@dataclass(frozen=True)
class Tolerances:
    """Tie-breaking tolerances shared by the counting and region code.

    tau_int
        absolute distance below which an interval boundary (or 2*omega) is
        treated as sitting on an integer.
    tau_tri
        relative tolerance (w.r.t. the largest side) for triangle ties.
    tau_res
        relative residual accepted for oracle roots.
    root_margin
        root moduli closer than this to the radius are reported as marginal
        by the oracle.
    """

    tau_int: float = 1e-9
    tau_tri: float = 1e-9
    tau_res: float = 1e-8
    root_margin: float = 1e-6

    def updated(self, **overrides: float | None) -> "Tolerances":
        clean = {k: float(v) for k, v in overrides.items() if v is not None}
        return replace(self, **clean)


DEFAULT = Tolerances()


def parse_config(text: str) -> dict[str, float]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    known = {f.name for f in fields(Tolerances)}
    values: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in known:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        values[key] = float(value)
    return values


def load_tolerances(path: str | os.PathLike | None = None) -> Tolerances:
    """Tolerances from ``path``, else from ``$TRINOM_CONFIG``, else defaults."""
    if path is None:
        path = os.environ.get(CONFIG_ENV_VAR) or None
    if path is None:
        return DEFAULT
    return DEFAULT.updated(**parse_config(Path(path).read_text()))
