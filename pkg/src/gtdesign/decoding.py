"""Pooled test outcomes and the DND / DD decoders.

A test is positive iff its pool contains an infected individual. DND
(definite non-defectives) clears anyone seen in a negative test and flags
everyone else, so it never produces false negatives. DD (definite
defectives) flags only individuals that are the sole DND-positive member
of some positive test, so it never produces false positives.
"""

from __future__ import annotations

import numpy as np


def _bool_matrix(g) -> np.ndarray:
    g = np.asarray(g)
    if g.ndim != 2 or g.shape[0] < 1 or g.shape[1] < 1:
        raise ValueError("design matrix must be 2-D and non-empty")
    if g.dtype == bool:
        return g
    if not ((g == 0) | (g == 1)).all():
        raise ValueError("design matrix entries must be 0 or 1")
    return g.astype(bool)


def as_bits(values, length: int | None = None) -> np.ndarray:
    """Validate a 0/1 vector and return it as a boolean array."""
    v = np.asarray(values)
    if v.ndim != 1:
        raise ValueError("expected a 1-D 0/1 vector")
    if length is not None and v.size != length:
        raise ValueError(f"expected length {length}, got {v.size}")
    if v.dtype == bool:
        return v
    if not ((v == 0) | (v == 1)).all():
        raise ValueError("entries must be 0 or 1")
    return v.astype(bool)


def run_tests(g, u) -> np.ndarray:
    """Outcome vector: test t is positive iff it pools an infected item."""
    gm = _bool_matrix(g)
    uv = as_bits(u, gm.shape[1])
    return gm[:, uv].any(axis=1)


def dnd_decode(g, y) -> np.ndarray:
    """Flag everyone not cleared by a negative test.

    An individual appearing in no test is never cleared and stays flagged.
    """
    gm = _bool_matrix(g)
    yv = as_bits(y, gm.shape[0])
    cleared = gm[~yv].any(axis=0)
    return ~cleared


def dd_decode(g, y) -> np.ndarray:
    """Flag individuals that some positive test pins down uniquely.

    Stage 1 keeps the DND-positive set; stage 2 flags i iff a positive
    test contains i and no other DND-positive member.
    """
    gm = _bool_matrix(g)
    yv = as_bits(y, gm.shape[0])
    pd = dnd_decode(gm, yv)
    pos = gm[yv] & pd
    sole = pos.sum(axis=1) == 1
    return pos[sole].any(axis=0)
