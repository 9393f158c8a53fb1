"""Borel-Weil-Bott on Grassmannians and single-step flag bundles.

Convention: S is the tautological subbundle and Q = V/S the quotient on
Gr(k, V).  The cohomology of the homogeneous bundle with Schur data ``sub``
on S and ``quot`` on Q is read off the concatenated sequence mu = (quot,
sub): add rho = (n-1, ..., 1, 0); a repeated entry means all cohomology
vanishes; otherwise sort to strictly decreasing order, counting the number
ell of inversion pairs, and subtract rho.  The whole cohomology is then the
single GL(V) irreducible with the resulting weight, in degree ell.

This ordering pins the identification S = O(-1) on P^1 = Gr(1, 2): the
weight sub=(1), quot=(0) lands on a repeat and vanishes identically.
"""

from __future__ import annotations

from typing import NamedTuple

from .weights import check_weight


class BottResult(NamedTuple):
    degree: int
    weight: tuple[int, ...]


def bott_sequence(mu) -> BottResult | None:
    """Dotted Weyl sort of an arbitrary integer sequence; None means vanishing."""
    n = len(mu)
    shifted = [mu[i] + n - 1 - i for i in range(n)]
    if len(set(shifted)) < n:
        return None
    ell = sum(1 for i in range(n) for j in range(i + 1, n) if shifted[i] < shifted[j])
    s = sorted(shifted, reverse=True)
    return BottResult(ell, tuple(s[i] - (n - 1 - i) for i in range(n)))


def bott_push(sub, quot) -> BottResult | None:
    """All cohomology on Gr(k, n) of the bundle with the given Schur data.

    ``sub`` has length k, ``quot`` length n - k; the output weight has length
    n and the degree is at most k(n - k).
    """
    sub = check_weight(sub)
    quot = check_weight(quot)
    return bott_sequence(quot + sub)


def relative_bott_push(sub, quot) -> list[BottResult]:
    """Fibrewise pushforward along a flag bundle Fl(k', k, V) -> Gr(k, V).

    ``sub`` is the Schur data on the tautological S' of rank k', ``quot`` the
    data on S1/S'; the fibre is Gr(k', k) so the absolute algorithm applies
    with n = k, producing Schur data on S1.  Spectator factors (S2, twists)
    are untouched and carried by the caller.  Returns at most one summand.
    """
    res = bott_push(sub, quot)
    return [] if res is None else [res]
