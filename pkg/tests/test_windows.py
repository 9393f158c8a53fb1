"""Window generation, membership, and the weight-set identities."""

from math import comb

import pytest

from flopcalc.windows import (KoszulWindow, generate, koszul_restriction_weights,
                              membership, oc_tensor_check)


def box_set(k, bound):
    def grow(k):
        if k == 0:
            return {()}
        return {(a,) + rest for rest in grow(k - 1)
                for a in range(rest[0] if rest else 0, bound + 1)}
    return frozenset(grow(k))


def test_generate_w_23():
    assert generate("W", 2, 3).members == {(0, 0), (1, 0), (1, 1)}


def test_generate_wprime_23():
    assert generate("Wprime", 2, 3).members == \
        {(0, 0), (1, 0), (2, 0), (1, 1), (2, 1), (2, 2)}


def test_generate_box_23_equals_wprime():
    assert generate("box", 2, 3).members == generate("Wprime", 2, 3).members


@pytest.mark.parametrize("n", range(3, 13))
def test_closed_forms(n):
    assert generate("W", 2, n).members == box_set(2, n - 2)
    assert generate("Wprime", 2, n).members == box_set(2, n - 1)
    assert generate("box", 2, n).members == generate("Wprime", 2, n).members


@pytest.mark.parametrize("k,n", [(k, n) for k in (1, 2, 3) for n in range(2, 9) if k < n])
def test_w_size_is_binomial(k, n):
    assert len(generate("W", k, n).members) == comb(n, k)


def test_generate_rejects_bad_input():
    with pytest.raises(ValueError):
        generate("W", 3, 2)
    with pytest.raises(ValueError):
        generate("Wprime", 3, 5)
    with pytest.raises(ValueError):
        generate("nope", 2, 3)


def test_membership():
    w23 = generate("W", 2, 3)
    assert membership((1, 1), w23)
    assert not membership((2, 0), w23)
    assert membership((4, 0), generate("Wprime", 2, 5))  # boundary: first part n-1
    with pytest.raises(ValueError):
        membership((1, 0, 0), w23)


def test_sorted_members_is_lexicographic():
    ws = generate("W", 2, 4)
    assert ws.sorted_members() == sorted(ws.members)


# --- Koszul restriction ------------------------------------------------------

def test_koszul_restriction_23_equals_window():
    kr = koszul_restriction_weights(2, 3)
    assert kr.weights == generate("W", 2, 3).members
    assert kr.convention == "cauchy-box"


def test_koszul_restriction_24_is_two_by_two_box():
    assert koszul_restriction_weights(2, 4).weights == box_set(2, 2)


def test_koszul_restriction_line():
    assert koszul_restriction_weights(1, 2).weights == {(0,), (1,)}


@pytest.mark.parametrize("k,n", [(k, n) for k in (1, 2, 3) for n in range(k + 1, 8)])
def test_koszul_restriction_general_width_bound(k, n):
    kr = koszul_restriction_weights(k, n)
    assert kr.weights == box_set(k, n - k)
    assert kr.convention == "cauchy-box"


# --- tensor saturation -------------------------------------------------------

@pytest.mark.parametrize("n", range(3, 11))
def test_oc_tensor_check(n):
    assert oc_tensor_check(n).matches


def test_oc_tensor_degenerate_control():
    # tensoring by the trivial factor alone reproduces W, a strict subset
    tc = oc_tensor_check(4, factors=((0, 0),))
    assert not tc.matches
    assert tc.produced == generate("W", 2, 4).members
    assert tc.produced < tc.expected


def test_oc_tensor_witnesses_are_sets():
    tc = oc_tensor_check(3)
    assert tc.produced == tc.expected == generate("Wprime", 2, 3).members
