"""Expected-false-positive surrogate for DND decoding and its evaluators.

For a probability matrix Q and priors p, the surrogate is

    f(Q) = sum_i (1 - p_i) * prod_t (1 - Q[t,i] * prod_{j != i} (1 - Q[t,j] p_j))

which at binary Q equals a lower bound on the exact expected number of
DND false positives. The fast evaluator runs in O(T*N) by sharing
leave-one-out product tables; a direct evaluator and an exact enumerator
serve as independent cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .decoding import dnd_decode, run_tests
from .designs import as_design, as_distribution
from .exceptions import CapacityError
from .priors import as_priors

EXACT_MAX_N = 22


def loo_products(factors: np.ndarray, axis: int) -> np.ndarray:
    """Leave-one-out products along an axis, division-free at exact zeros.

    Entry k of the result is the product of all factors along the axis
    except the one at k. Where no factor is exactly 0.0 this is the full
    product divided by the excluded factor; with one zero, only the zero's
    own slot gets the product of the remaining factors; with two or more
    zeros every slot is 0.
    """
    zero = factors == 0.0
    zcount = zero.sum(axis=axis, keepdims=True)
    safe = np.where(zero, 1.0, factors)
    nzprod = safe.prod(axis=axis, keepdims=True)
    loo = nzprod / safe
    return np.where(
        zcount == 0, loo, np.where((zcount == 1) & zero, nzprod, 0.0)
    )


@dataclass(frozen=True)
class LooTables:
    """Shared product tables for one (Q, priors) instance.

    row_products[t] is the product of the nonzero row factors
    (1 - Q[t,j] p_j); row_zero_count / row_zero_index record how many of
    those factors are exactly zero (index -1 unless the count is 1).
    loo_row[t,i] excludes factor i from row t's product, and
    per_item_products[i] = prod_t (1 - Q[t,i] * loo_row[t,i]).
    """

    row_products: np.ndarray
    row_zero_count: np.ndarray
    row_zero_index: np.ndarray
    loo_row: np.ndarray
    per_item_products: np.ndarray


def build_loo_tables(q, priors) -> LooTables:
    """Compute the shared tables in O(T*N)."""
    qm, p = _check_pair(q, priors)
    row_factors = 1.0 - qm * p
    zero = row_factors == 0.0
    zcount = zero.sum(axis=1)
    safe = np.where(zero, 1.0, row_factors)
    nzprod = safe.prod(axis=1)
    loo = nzprod[:, None] / safe
    loo_row = np.where(
        zcount[:, None] == 0,
        loo,
        np.where((zcount[:, None] == 1) & zero, nzprod[:, None], 0.0),
    )
    zindex = np.where(zcount == 1, zero.argmax(axis=1), -1)
    per_item = (1.0 - qm * loo_row).prod(axis=0)
    return LooTables(
        row_products=nzprod,
        row_zero_count=zcount,
        row_zero_index=zindex,
        loo_row=loo_row,
        per_item_products=per_item,
    )


def relaxed_objective(q, priors) -> float:
    """Evaluate f(Q) via the shared tables; O(T*N)."""
    p = as_priors(priors)
    tables = build_loo_tables(q, p)
    return float(((1.0 - p) * tables.per_item_products).sum())


def naive_relaxed_objective(q, priors) -> float:
    """Evaluate f(Q) directly from its definition, one item at a time.

    No shared tables: for each item the inner leave-one-out products are
    recomputed from scratch, giving an O(T*N^2) cross-check of the fast
    evaluator.
    """
    qm, p = _check_pair(q, priors)
    n = qm.shape[1]
    total = 0.0
    keep = np.ones(n, dtype=bool)
    for i in range(n):
        keep[i] = False
        inner = (1.0 - qm[:, keep] * p[keep]).prod(axis=1)
        total += (1.0 - p[i]) * float((1.0 - qm[:, i] * inner).prod())
        keep[i] = True
    return total


def lower_bound_errors(g, priors) -> float:
    """Lower bound on expected DND false positives for a binary design."""
    gm = as_design(g)
    return relaxed_objective(gm.astype(np.float64), priors)


def exact_expected_errors(g, priors) -> float:
    """Exact expected DND false positives by enumerating all 2^N statuses.

    Runs the actual test/decode pipeline for every infection vector, so it
    is limited to N <= 22.
    """
    gm = as_design(g)
    p = as_priors(priors)
    n = gm.shape[1]
    if n != p.size:
        raise ValueError("design and priors disagree on population size")
    if n > EXACT_MAX_N:
        raise CapacityError(f"exact enumeration limited to N <= {EXACT_MAX_N}")
    gb = gm.astype(bool)
    bits = np.arange(n)
    total = 0.0
    for word in range(1 << n):
        u = (word >> bits) & 1 == 1
        prob = float(np.where(u, p, 1.0 - p).prod())
        if prob == 0.0:
            continue
        y = run_tests(gb, u)
        est = dnd_decode(gb, y)
        total += prob * float((est & ~u).sum())
    return total


def _check_pair(q, priors):
    qm = as_distribution(q)
    p = as_priors(priors)
    if qm.shape[1] != p.size:
        raise ValueError("distribution matrix and priors disagree on N")
    return qm, p
