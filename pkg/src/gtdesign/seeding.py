"""Deterministic seed derivation and counter-based uniform streams.

Every random quantity in this package is a pure function of a 64-bit seed
plus a position (index, row, trial, ...), so results do not depend on
evaluation order and sub-tasks can run in parallel without shared RNG state.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(h: int) -> int:
    """SplitMix64 finalizer: a 64-bit avalanche over a Python int."""
    h &= _MASK
    h = ((h ^ (h >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    h = ((h ^ (h >> 27)) * 0x94D049BB133111EB) & _MASK
    return h ^ (h >> 31)


def derive(seed: int, *parts: int | str) -> int:
    """Fold (seed, parts...) into a new 64-bit seed.

    Parts may be ints or short strings (folded byte-wise); the result is
    stable across processes and platforms, unlike builtin ``hash``.
    """
    h = mix64(int(seed) ^ _GOLDEN)
    for part in parts:
        if isinstance(part, str):
            for b in part.encode("utf-8"):
                h = mix64(h ^ (b + 1))
        else:
            h = mix64(h ^ (int(part) & _MASK))
        h = mix64(h + _GOLDEN)
    return h


def uniforms(seed: int, n: int, offset: int = 0) -> np.ndarray:
    """Uniform [0, 1) doubles at stream positions offset..offset+n-1.

    Position i of the stream depends only on (seed, i): the value is the
    SplitMix64 output for counter i, scaled to 53-bit resolution.
    """
    idx = np.arange(offset + 1, offset + n + 1, dtype=np.uint64)
    x = np.uint64(seed & _MASK) + idx * np.uint64(_GOLDEN)
    x = (x ^ (x >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    x = (x ^ (x >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    x = x ^ (x >> np.uint64(31))
    return (x >> np.uint64(11)).astype(np.float64) * 2.0**-53


def rng(seed: int, *parts: int | str) -> np.random.Generator:
    """NumPy generator seeded from derive(seed, *parts)."""
    return np.random.default_rng(derive(seed, *parts))
