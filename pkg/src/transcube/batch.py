"""Vectorized exact evaluation over batches of integer-scaled points.

The check suites exercise millions of evaluations, far more than the
pointwise ``Fraction`` path can absorb.  Since both evaluators use only
comparisons, a batch of rational points with a common denominator can be
evaluated on the integer numerators without any loss of exactness: numpy
``min``/``max`` on int64 arrays never rounds.  Results agree entry for
entry with the pointwise evaluators, which the test suite asserts.
"""

from __future__ import annotations

import numpy as np

from .cube import CubeMap
from .homsets import factorize


def t_eval_batch(f: CubeMap, pts: np.ndarray, denominator: int = 1) -> np.ndarray:
    """Evaluate ``f`` on every row of an integer coordinate array.

    ``pts`` has shape ``(N, dom_dim)``; coordinates are numerators over the
    common ``denominator`` (only used for the constant coordinates that a
    non-endo map inserts).  Returns shape ``(N, cod_dim)``.
    """
    if pts.ndim != 2 or pts.shape[1] != f.dom_dim:
        raise ValueError(f"expected shape (N, {f.dom_dim}), got {pts.shape}")
    if f.is_endo():
        return _maxmin_batch(f, pts)
    fac = factorize(f)
    inner = _maxmin_batch(fac.psi, pts) if f.dom_dim else pts[:, :0]
    lo, hi = fac.phi.table[0], fac.phi.table[-1]
    out = np.empty((pts.shape[0], f.cod_dim), dtype=pts.dtype)
    k = 0
    for pos in range(f.cod_dim):
        if ((lo ^ hi) >> pos) & 1:
            out[:, pos] = inner[:, k]
            k += 1
        else:
            out[:, pos] = denominator if (lo >> pos) & 1 else 0
    return out


def _maxmin_batch(f: CubeMap, pts: np.ndarray) -> np.ndarray:
    out = np.empty_like(pts)
    for i, masks in enumerate(f.preimages_of_one()):
        acc = None
        for mask in masks:
            cols = [k for k in range(f.dom_dim) if (mask >> k) & 1]
            term = pts[:, cols[0]] if len(cols) == 1 else pts[:, cols].min(axis=1)
            acc = term if acc is None else np.maximum(acc, term)
        out[:, i] = acc
    return out


def d1_batch(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """Directed L1 distances of row pairs; -1 marks the infinite case."""
    comparable = (xs <= ys).all(axis=1)
    sums = (ys - xs).sum(axis=1)
    return np.where(comparable, sums, -1)


def random_points(rng: np.random.Generator, n: int, count: int, denominator: int) -> np.ndarray:
    """Uniform integer-coordinate points of the scaled cube ``[0, D]^n``."""
    return rng.integers(0, denominator + 1, size=(count, n), dtype=np.int64)


def random_comparable_pairs(
    rng: np.random.Generator, n: int, count: int, denominator: int
) -> tuple[np.ndarray, np.ndarray]:
    """Pairs ``x <= y`` drawn by lifting a random point by random slack."""
    xs = rng.integers(0, denominator + 1, size=(count, n), dtype=np.int64)
    slack = rng.integers(0, denominator + 1, size=(count, n), dtype=np.int64)
    ys = np.minimum(xs + slack, denominator)
    return xs, ys
