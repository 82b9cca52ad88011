"""Tolerance knobs.

COXROLL_TOLERANCE overrides the default 1e-8 matching tolerance used for
root and tile identification.  Overriding it is supported but discouraged;
every other tolerance in the library is a fixed per-operation constant.
"""

from __future__ import annotations

import os

DEFAULT_MATCH_TOL = 1e-8


def match_tol():
    raw = os.environ.get("COXROLL_TOLERANCE")
    if raw is None:
        return DEFAULT_MATCH_TOL
    try:
        value = float(raw)
    except ValueError:
        raise ValueError(f"COXROLL_TOLERANCE must be a float, got {raw!r}") from None
    if not 0 < value < 1:
        raise ValueError(f"COXROLL_TOLERANCE out of range: {value}")
    return value
