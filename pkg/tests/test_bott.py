"""Borel-Weil-Bott tests: line-bundle tables, Euler oracles, dualities."""

import random
from itertools import combinations_with_replacement
from math import factorial, prod

import pytest

from flopcalc.bott import BottResult, bott_push, bott_sequence, relative_bott_push
from flopcalc.characters import schur_dim
from flopcalc.weights import dual_weight


def weights_in_range(k, lo, hi):
    """All weakly decreasing length-k tuples with parts in [lo, hi]."""
    return [tuple(sorted(c, reverse=True))
            for c in combinations_with_replacement(range(lo, hi + 1), k)]


def projective_euler(n, d):
    """chi(P^{n-1}, O(d)) as a signed binomial: prod_{i=1}^{n-1}(d+i)/(n-1)!.

    Valid for every integer d, an independent Riemann-Roch oracle.
    """
    return prod(d + i for i in range(1, n)) // factorial(n - 1)


# --- the classical P^1 table ------------------------------------------------

def test_structure_sheaf_on_p1():
    assert bott_push((0,), (0,)) == BottResult(0, (0, 0))


def test_o_minus_one_vanishes():
    assert bott_push((1,), (0,)) is None


def test_o_minus_two_is_serre_dual():
    assert bott_push((2,), (0,)) == BottResult(1, (1, 1))


@pytest.mark.parametrize("d", range(-6, 7))
def test_p1_line_bundle_table(d):
    # O(d) on P^1 = Gr(1, 2) is sub-weight (-d)
    res = bott_push((-d,), (0,))
    if d >= 0:
        assert res.degree == 0 and schur_dim(res.weight) == d + 1
    elif d == -1:
        assert res is None
    else:
        assert res.degree == 1 and schur_dim(res.weight) == -d - 1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_projective_space_euler_oracle(n):
    for d in range(-8, 9):
        res = bott_push((-d,), (0,) * (n - 1))
        chi = 0 if res is None else (-1) ** res.degree * schur_dim(res.weight)
        assert chi == projective_euler(n, d), (n, d)


def test_quotient_bundle_on_p1():
    # Q = O(1): two global sections
    res = bott_push((0,), (1,))
    assert res.degree == 0 and schur_dim(res.weight) == 2


# --- structural properties over a sweep ------------------------------------

def sweep(k, n):
    for sub in weights_in_range(k, -4, 4):
        for quot in weights_in_range(n - k, -4, 4):
            yield sub, quot


@pytest.mark.parametrize("k,n", [(k, n) for n in range(2, 7) for k in range(1, min(n, 4))])
def test_zero_iff_repeated_and_degree_bound(k, n):
    rho = tuple(n - 1 - i for i in range(n))
    for sub, quot in sweep(k, n):
        mu = quot + sub
        shifted = tuple(m + r for m, r in zip(mu, rho))
        res = bott_push(sub, quot)
        if len(set(shifted)) < n:
            assert res is None
        else:
            assert res is not None
            assert 0 <= res.degree <= k * (n - k)
            assert all(res.weight[i] >= res.weight[i + 1] for i in range(n - 1))


@pytest.mark.parametrize("k,n", [(1, 3), (2, 4), (2, 5), (3, 6)])
def test_serre_duality_involution(k, n):
    # omega = (det S)^{n-k} (det Q)^{-k}; H^i(E) dual to H^{d-i}(E^v (x) omega)
    d = k * (n - k)
    for sub, quot in sweep(k, n):
        res = bott_push(sub, quot)
        dsub = tuple(v + (n - k) for v in dual_weight(sub))
        dquot = tuple(v - k for v in dual_weight(quot))
        dres = bott_push(dsub, dquot)
        if res is None:
            assert dres is None
        else:
            assert dres is not None
            assert dres.degree == d - res.degree
            assert dres.weight == dual_weight(res.weight)


def test_dot_action_flips_parity():
    rng = random.Random(2)
    for _ in range(300):
        n = rng.randint(2, 6)
        mu = tuple(rng.randint(-5, 5) for _ in range(n))
        i = rng.randrange(n - 1)
        rho = [n - 1 - j for j in range(n)]
        shifted = [m + r for m, r in zip(mu, rho)]
        shifted[i], shifted[i + 1] = shifted[i + 1], shifted[i]
        dotted = tuple(s - r for s, r in zip(shifted, rho))
        a, b = bott_sequence(mu), bott_sequence(dotted)
        if a is None:
            assert b is None
        else:
            assert b.weight == a.weight
            assert abs(b.degree - a.degree) == 1


# --- relative pushforward ---------------------------------------------------

def test_relative_trivial():
    assert relative_bott_push((0,), (0,)) == [BottResult(0, (0, 0))]


def test_relative_fibrewise_acyclic():
    # S' restricts to O(-1) on each P^1 fibre
    assert relative_bott_push((1,), (0,)) == []


def test_relative_dual_line_pushes_to_dual_bundle():
    # S'^v restricts to O(1); sections along the fibres form S1^v
    assert relative_bott_push((-1,), (0,)) == [BottResult(0, (0, -1))]


def test_relative_euler_characteristic_oracle():
    # bundle S'^s (x) (S1/S')^q restricts to O(q - s) on the fibre
    for s in range(-3, 4):
        for q in range(-3, 4):
            chi = sum((-1) ** deg * schur_dim(w)
                      for deg, w in relative_bott_push((s,), (q,)))
            assert chi == projective_euler(2, q - s), (s, q)
