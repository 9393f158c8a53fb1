"""Invariant-ring verification tests at desk scale."""

from itertools import permutations

import pytest

from flopcalc.invariants import (BlockSizeError, PolyRingSpec, generator_set,
                                 invariant_dimension, is_invariant,
                                 subalgebra_dimension, verify_generators)


def md(xr, yc, pd):
    return tuple(xr), tuple(yc), pd


def test_generators_are_annihilated_by_all_operators():
    for n in (1, 2, 3):
        spec = PolyRingSpec(n)
        for name, poly in generator_set(spec).items():
            assert is_invariant(spec, poly), name


def test_noninvariant_detected():
    spec = PolyRingSpec(1)
    x0 = {tuple(1 if i == 0 else 0 for i in range(spec.nvars)): 1}
    assert not is_invariant(spec, x0)


def test_constants():
    spec = PolyRingSpec(1)
    assert invariant_dimension(spec, md((0,), (0,), 0)) == 1


def test_trace_of_q_block():
    # the block of xy for n = 1 contains exactly one invariant line
    spec = PolyRingSpec(1)
    assert invariant_dimension(spec, md((1,), (1,), 0)) == 1


def test_x_alone_has_no_invariants():
    spec = PolyRingSpec(1)
    assert invariant_dimension(spec, md((1,), (0,), 0)) == 0


def test_p_conjugation_invariants_degree_two():
    # symmetric functions of the eigenvalues: (tr p)^2 and det p
    spec = PolyRingSpec(1)
    assert invariant_dimension(spec, md((0,), (0,), 2)) == 2


def test_subalgebra_degree_zero():
    spec = PolyRingSpec(1)
    gens = generator_set(spec)
    assert subalgebra_dimension(spec, gens, md((0,), (0,), 0)) == 1


def test_subalgebra_xy_squared():
    spec = PolyRingSpec(1)
    gens = generator_set(spec)
    assert subalgebra_dimension(spec, gens, md((2,), (2,), 0)) == 1


def test_cayley_hamilton_block():
    # x p^2 y lies in the span of xpy tr p and xy det p and xy (tr p)^2,
    # so the generated dimension matches the invariant dimension there
    spec = PolyRingSpec(1)
    gens = generator_set(spec)
    block = md((1,), (1,), 2)
    assert subalgebra_dimension(spec, gens, block) == invariant_dimension(spec, block)


def test_subalgebra_never_exceeds_invariants():
    spec = PolyRingSpec(1)
    gens = generator_set(spec)
    for block in spec.blocks_up_to(4):
        assert subalgebra_dimension(spec, gens, block) <= invariant_dimension(spec, block)


def test_multigrading_is_symmetric_under_row_permutations():
    spec = PolyRingSpec(2)
    for xr, yc, pd in [((2, 0), (1, 1), 0), ((1, 0), (0, 1), 1), ((2, 1), (1, 2), 1)]:
        dims = {invariant_dimension(spec, md(pxr, pyc, pd))
                for pxr in permutations(xr) for pyc in permutations(yc)}
        assert len(dims) == 1


def test_verify_generators_n1():
    report = verify_generators(1, 6)
    assert report.ok
    assert report.blocks_checked == 84


def test_verify_generators_n2():
    report = verify_generators(2, 4)
    assert report.ok


def test_mutated_generator_set_fails_at_detp():
    report = verify_generators(1, 4, omit=("detp",))
    assert not report.ok
    # first discrepancy at the multidegree of det p itself
    assert report.mismatches[0][0] == ((0,), (0,), 2)


def test_block_size_guard():
    spec = PolyRingSpec(1, max_block=2)
    with pytest.raises(BlockSizeError, match="reduce degree bound"):
        spec.monomials_of(md((2,), (2,), 2))
