"""Kendall rank correlation and ordinary least squares."""

from __future__ import annotations

import math

import numpy as np

from .errors import DegenerateFitError


def _count_inversions(a: list) -> int:
    """Number of pairs i < j with a[i] > a[j], by bottom-up merge sort."""
    n = len(a)
    buf = list(a)
    tmp = [None] * n
    inv = 0
    width = 1
    while width < n:
        for lo in range(0, n, 2 * width):
            mid = min(lo + width, n)
            hi = min(lo + 2 * width, n)
            i, j, k = lo, mid, lo
            while i < mid and j < hi:
                if buf[j] < buf[i]:
                    tmp[k] = buf[j]
                    inv += mid - i
                    j += 1
                else:
                    tmp[k] = buf[i]
                    i += 1
                k += 1
            tmp[k:hi] = buf[i:mid] + buf[j:hi]
        buf, tmp = tmp, buf
        width *= 2
    return inv


def _tied_pairs(values) -> int:
    counts: dict = {}
    for v in values:
        counts[v] = counts.get(v, 0) + 1
    return sum(c * (c - 1) // 2 for c in counts.values())


def _check_pair(x, y):
    x = list(x)
    y = list(y)
    if len(x) != len(y):
        raise ValueError(f"series lengths differ: {len(x)} != {len(y)}")
    if len(x) < 2:
        raise ValueError("need at least two observations")
    return x, y


def kendall_counts(x, y) -> tuple[int, int, int, int]:
    """Pair counts ``(concordant, discordant, tied_x, tied_y)`` in O(n log n).

    ``tied_x`` counts pairs tied in x (whatever y does), and likewise
    ``tied_y``. Pairs tied in either series are neither concordant nor
    discordant.
    """
    x, y = _check_pair(x, y)
    n = len(x)
    order = sorted(range(n), key=lambda i: (x[i], y[i]))
    xs = [x[i] for i in order]
    ys = [y[i] for i in order]
    total = n * (n - 1) // 2
    tied_x = _tied_pairs(xs)
    tied_y = _tied_pairs(ys)
    tied_xy = _tied_pairs(zip(xs, ys))
    discordant = _count_inversions(ys)
    concordant = total - tied_x - tied_y + tied_xy - discordant
    return concordant, discordant, tied_x, tied_y


def kendall_tau(x, y, variant: str = "a") -> float:
    """Kendall correlation of two equal-length series.

    The default ``variant="a"`` divides the concordant-minus-discordant
    count by the number of all pairs, ``n(n-1)/2``, so ties shrink the
    magnitude instead of being corrected for. ``variant="b"`` applies the
    usual tie correction and is meant for sensitivity checks only.
    """
    conc, disc, tx, ty = kendall_counts(x, y)
    n = len(x)
    total = n * (n - 1) // 2
    if variant == "a":
        return (conc - disc) / total
    if variant == "b":
        denom = math.sqrt((total - tx) * (total - ty))
        return (conc - disc) / denom if denom else 0.0
    raise ValueError(f"unknown tau variant {variant!r}")


def fit_slope(points) -> tuple[float, float]:
    """Least-squares line through ``(x, y)`` points; returns (slope, intercept)."""
    pts = np.asarray(points, dtype=np.float64).reshape(-1, 2)
    if len(pts) < 2:
        raise DegenerateFitError(f"need at least 2 points, got {len(pts)}")
    x, y = pts[:, 0], pts[:, 1]
    dx = x - x.mean()
    sxx = float(dx @ dx)
    if sxx == 0.0:
        raise DegenerateFitError("all x values are equal")
    slope = float(dx @ (y - y.mean())) / sxx
    return slope, float(y.mean() - slope * x.mean())
