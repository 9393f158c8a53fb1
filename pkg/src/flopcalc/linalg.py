"""Exact integer linear algebra: fraction-free row reduction.

Entries are Python ints, so there is no overflow and ranks are certificates.
"""

from __future__ import annotations

from math import gcd


def _normalize(row):
    g = 0
    for v in row:
        g = gcd(g, v)
        if g == 1:
            return row
    return [v // g for v in row] if g > 1 else row


def int_rank(rows) -> int:
    """Rank over the rationals of a matrix given as a list of int rows."""
    mat = [_normalize(list(r)) for r in rows if any(r)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for i in range(rank, len(mat)):
            if mat[i][col]:
                piv = i
                break
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, len(mat)):
            v = mat[i][col]
            if v:
                row = mat[i]
                prow = mat[rank]
                mat[i] = _normalize([pv * a - v * b for a, b in zip(row, prow)])
        rank += 1
        if rank == len(mat):
            break
    return rank


def span_dimension(vectors, basis_index) -> int:
    """Dimension of the span of sparse vectors (dicts key -> int).

    ``basis_index`` maps each possible key to a dense column position.
    """
    dense = []
    n = len(basis_index)
    for vec in vectors:
        row = [0] * n
        for key, val in vec.items():
            row[basis_index[key]] = val
        dense.append(row)
    return int_rank(dense)
