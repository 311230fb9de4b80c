"""Infection-prior vectors: generation from parametric families and file I/O.

A prior vector holds one infection probability per individual. Supported
families: exponential (clamped to [0, 1]), two-point (bimodal), and
identical. Generation is counter-based, so entry i depends only on
(spec, seed, i).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import FileFormatError
from .seeding import uniforms

KINDS = ("exponential", "bimodal", "identical")


@dataclass(frozen=True)
class PriorSpec:
    """Parametric description of a prior distribution over individuals."""

    kind: str
    mean: float
    n: int
    lo: float = 0.0
    hi: float = 0.0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown prior kind {self.kind!r}")
        if self.n < 1:
            raise ValueError("population size must be >= 1")
        if self.kind == "exponential":
            if not self.mean > 0:
                raise ValueError("exponential prior needs mean > 0")
        elif self.kind == "bimodal":
            if not (0.0 <= self.lo < self.hi <= 1.0):
                raise ValueError("bimodal prior needs 0 <= lo < hi <= 1")
            if not (self.lo <= self.mean <= self.hi):
                raise ValueError("bimodal prior needs lo <= mean <= hi")
        else:
            if not (0.0 <= self.mean <= 1.0):
                raise ValueError("identical prior needs mean in [0, 1]")


def as_priors(values) -> np.ndarray:
    """Validate and return a float64 prior vector."""
    p = np.asarray(values, dtype=np.float64)
    if p.ndim != 1 or p.size < 1:
        raise ValueError("prior vector must be 1-D and non-empty")
    if not np.isfinite(p).all():
        raise ValueError("prior vector contains non-finite entries")
    if (p < 0.0).any() or (p > 1.0).any():
        raise ValueError("prior probabilities must lie in [0, 1]")
    return p


def generate_priors(spec: PriorSpec, seed: int) -> np.ndarray:
    """Draw a length-n prior vector from the given family, deterministically.

    Exponential entries are inverse-CDF transforms -mean*log(1-u) of the
    uniform stream, clamped to 1.0 afterwards. Bimodal entries take the
    value hi with probability (mean-lo)/(hi-lo), lo otherwise.
    """
    u = uniforms(seed, spec.n)
    if spec.kind == "identical":
        return np.full(spec.n, float(spec.mean))
    if spec.kind == "exponential":
        raw = -spec.mean * np.log1p(-u)
        return np.minimum(raw, 1.0)
    q_hi = (spec.mean - spec.lo) / (spec.hi - spec.lo)
    return np.where(u < q_hi, spec.hi, spec.lo)


def save_priors(path, priors) -> None:
    """Write one probability per line; repr round-trips exactly."""
    p = as_priors(priors)
    with open(path, "w", encoding="utf-8") as fh:
        for v in p:
            fh.write(repr(float(v)) + "\n")


def load_priors(path) -> np.ndarray:
    """Parse a priors file (one decimal probability per line, no header)."""
    values = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                raise FileFormatError(f"{path}: line {lineno}: empty line")
            try:
                v = float(text)
            except ValueError:
                raise FileFormatError(
                    f"{path}: line {lineno}: not a decimal number: {text!r}"
                ) from None
            if not 0.0 <= v <= 1.0:
                raise FileFormatError(
                    f"{path}: line {lineno}: probability {v} outside [0, 1]"
                )
            values.append(v)
    if not values:
        raise FileFormatError(f"{path}: empty priors file")
    return np.asarray(values, dtype=np.float64)
