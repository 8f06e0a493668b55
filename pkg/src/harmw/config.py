"""Default run parameters.

Every default can be overridden by an environment variable ``HARMW_<NAME>``
(e.g. ``HARMW_RMAX=0.99``); command-line flags take precedence over both.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

ENV_PREFIX = "HARMW_"


@dataclass(frozen=True)
class Defaults:
    alpha: float = 1.0
    order: int = 64  # minimum truncation order of growth envelopes
    grid_radial: int = 64
    grid_angular: int = 720
    rmax: float = 0.999
    eps_samples: int = 360
    tol: float = 1e-9


def from_env(environ=None) -> Defaults:
    environ = os.environ if environ is None else environ
    base = Defaults()
    updates = {}
    for f in fields(Defaults):
        raw = environ.get(ENV_PREFIX + f.name.upper())
        if raw is None:
            continue
        try:
            updates[f.name] = type(getattr(base, f.name))(raw)
        except ValueError as exc:
            raise ValueError(f"bad value for {ENV_PREFIX}{f.name.upper()}: {raw!r}") from exc
    return replace(base, **updates)
