"""Pooling-matrix construction: baselines and Bernoulli sampling.

A design is a binary T x N matrix whose row t lists the individuals pooled
into test t. Two randomized baselines are provided (constant column weight,
and i.i.d. rows that over-test low-prior individuals), plus entrywise
Bernoulli sampling from a probability matrix.
"""

from __future__ import annotations

import math

import numpy as np

from .exceptions import DegeneratePriorError, FileFormatError
from .priors import as_priors
from .seeding import derive, rng, uniforms


def as_design(entries) -> np.ndarray:
    """Validate and return a uint8 binary design matrix."""
    g = np.asarray(entries)
    if g.ndim != 2 or g.shape[0] < 1 or g.shape[1] < 1:
        raise ValueError("design matrix must be 2-D and non-empty")
    if not ((g == 0) | (g == 1)).all():
        raise ValueError("design matrix entries must be 0 or 1")
    return g.astype(np.uint8)


def as_distribution(entries) -> np.ndarray:
    """Validate and return a float64 matrix of Bernoulli parameters."""
    q = np.asarray(entries, dtype=np.float64)
    if q.ndim != 2 or q.shape[0] < 1 or q.shape[1] < 1:
        raise ValueError("distribution matrix must be 2-D and non-empty")
    if not np.isfinite(q).all():
        raise ValueError("distribution matrix contains non-finite entries")
    if (q < 0.0).any() or (q > 1.0).any():
        raise ValueError("distribution entries must lie in [0, 1]")
    return q


def _round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def ccw_design(priors, tests: int, seed: int) -> np.ndarray:
    """Constant-column-weight design: each individual joins w random tests.

    The per-individual test count is w = clamp(round(0.69*T / (N*p_mean)),
    1, T), using the mean prior; the w rows per column are drawn uniformly
    without replacement, independently per column.
    """
    p = as_priors(priors)
    if tests < 1:
        raise ValueError("tests must be >= 1")
    p_mean = float(p.mean())
    if p_mean <= 0.0:
        raise DegeneratePriorError("CCW needs a nonzero mean prior")
    w = min(max(_round_half_up(0.69 * tests / (p.size * p_mean)), 1), tests)
    g = np.zeros((tests, p.size), dtype=np.uint8)
    for i in range(p.size):
        rows = rng(seed, "ccw", i).choice(tests, size=w, replace=False)
        g[rows, i] = 1
    return g


def cca_design(priors, tests: int, seed: int) -> np.ndarray:
    """Coupon-collector style design with i.i.d. rows.

    Each test independently pools d = clamp(round(N*ln2/kbar), 1, N)
    distinct individuals, drawn without replacement with weights
    proportional to 1/log(1/(1-p_i)), so low-prior individuals land in
    more tests. Priors are clamped to [1e-9, 1-1e-9] for the weights only.
    """
    p = as_priors(priors)
    if tests < 1:
        raise ValueError("tests must be >= 1")
    if (p >= 1.0).all():
        raise DegeneratePriorError("CCA needs at least one prior below 1")
    kbar = float(p.sum())
    d = min(max(_round_half_up(p.size * math.log(2.0) / kbar), 1), p.size)
    p_safe = np.clip(p, 1e-9, 1.0 - 1e-9)
    weights = 1.0 / -np.log1p(-p_safe)
    weights /= weights.sum()
    g = np.zeros((tests, p.size), dtype=np.uint8)
    for t in range(tests):
        members = rng(seed, "cca", t).choice(
            p.size, size=d, replace=False, p=weights
        )
        g[t, members] = 1
    return g


def sample_design(q, seed: int) -> np.ndarray:
    """Draw G with independent entries, G[t,i] ~ Bernoulli(Q[t,i]).

    Entries equal to 0 or 1 in Q are reproduced exactly.
    """
    qm = as_distribution(q)
    u = uniforms(seed, qm.size).reshape(qm.shape)
    return (u < qm).astype(np.uint8)


def save_design(path, design) -> None:
    """Write 'T N' then T rows of space-separated 0/1 digits."""
    g = as_design(design)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"{g.shape[0]} {g.shape[1]}\n")
        for row in g:
            fh.write(" ".join("1" if v else "0" for v in row) + "\n")


def load_design(path) -> np.ndarray:
    """Parse a design file, rejecting any token other than 0/1 digits."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline()
        if not header:
            raise FileFormatError(f"{path}: line 1: missing 'T N' header")
        parts = header.split()
        if len(parts) != 2 or not all(s.isdigit() for s in parts):
            raise FileFormatError(f"{path}: line 1: expected 'T N' header")
        t, n = int(parts[0]), int(parts[1])
        if t < 1 or n < 1:
            raise FileFormatError(f"{path}: line 1: T and N must be >= 1")
        g = np.zeros((t, n), dtype=np.uint8)
        for r in range(t):
            line = fh.readline()
            if not line:
                raise FileFormatError(
                    f"{path}: line {r + 2}: expected {t} rows, found {r}"
                )
            tokens = line.split()
            if len(tokens) != n:
                raise FileFormatError(
                    f"{path}: line {r + 2}: expected {n} entries, "
                    f"found {len(tokens)}"
                )
            for c, tok in enumerate(tokens):
                if tok == "1":
                    g[r, c] = 1
                elif tok != "0":
                    raise FileFormatError(
                        f"{path}: line {r + 2}, column {c + 1}: "
                        f"invalid token {tok!r}"
                    )
        trailing = fh.readline()
        if trailing.strip():
            raise FileFormatError(
                f"{path}: line {t + 2}: unexpected extra data"
            )
    return g
