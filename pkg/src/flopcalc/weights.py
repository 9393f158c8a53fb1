"""Integer weight and partition utilities shared across the package.

A GL_k weight is a weakly decreasing tuple of integers, possibly negative;
partitions are weights with nonnegative parts and no trailing zeros.
"""

from __future__ import annotations

from functools import cache


def is_weight(parts) -> bool:
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def check_weight(parts) -> tuple[int, ...]:
    w = tuple(int(p) for p in parts)
    if not is_weight(w):
        raise ValueError(f"weight is not weakly decreasing: {w}")
    return w


def dual_weight(w) -> tuple[int, ...]:
    """Highest weight of the dual irreducible: negate and reverse."""
    return tuple(-p for p in reversed(w))


def pad(w, k: int) -> tuple[int, ...]:
    """Right-pad a partition with zeros to length k."""
    w = tuple(w)
    if len(w) > k:
        raise ValueError(f"{w} has more than {k} parts")
    return w + (0,) * (k - len(w))


def strip(w) -> tuple[int, ...]:
    """Drop trailing zeros."""
    w = tuple(w)
    while w and w[-1] == 0:
        w = w[:-1]
    return w


def conjugate_partition(lam) -> tuple[int, ...]:
    """Transpose of a Young diagram; trailing zeros are dropped."""
    lam = strip(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


@cache
def partitions_in_box(m: int, rows: int, cols: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of m with at most `rows` parts, each part at most `cols`."""
    if m == 0:
        return ((),)
    if rows <= 0 or cols <= 0:
        return ()
    out = []
    for first in range(min(m, cols), 0, -1):
        for rest in partitions_in_box(m - first, rows - 1, first):
            out.append((first, *rest))
    return tuple(out)
