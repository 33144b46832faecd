from math import factorial

import pytest

from twistlab.criteria import h0_specht_nonzero
from twistlab.errors import SizeMismatch, TooLarge
from twistlab.partitions import Partition, enumerate_partitions
from twistlab.specht import (
    build_specht,
    end_ring,
    h0_dim,
    hom_dim,
    hom_space,
    hom_space_direct,
    invariants_dim,
    is_decomposable,
    sign_dual_check,
)


def hook_product(lam):
    parts = lam.parts
    conj = lam.conjugate().parts
    out = 1
    for i, row in enumerate(parts):
        for j in range(row):
            out *= row - j + conj[j] - i - 1
    return out


def test_dimension_matches_hook_length_formula():
    for d in range(1, 8):
        for lam in enumerate_partitions(d, "all"):
            expected = factorial(d) // hook_product(lam)
            assert build_specht(lam, 3).dim == expected


def test_dimension_is_independent_of_the_prime():
    lam = Partition((3, 2, 1))
    dims = {build_specht(lam, p).dim for p in (2, 3, 5, 7)}
    assert dims == {16}


def test_generators_are_invertible_permutation_actions():
    module = build_specht(Partition((3, 2)), 3)
    import numpy as np

    from twistlab.gf import mm, rank

    for g in module.generators():
        assert g.shape == (module.dim, module.dim)
        assert rank(np.asarray(g), 3) == module.dim


def test_hom_methods_agree_on_small_pairs():
    for p in (2, 3):
        for d in (4, 5):
            mods = [build_specht(lam, p) for lam in enumerate_partitions(d, "all")]
            for a in mods:
                for b in mods:
                    assert len(hom_space(a, b)) == len(hom_space_direct(a, b))


def test_hom_requires_matching_symmetric_group():
    a = build_specht(Partition((3, 1)), 3)
    b = build_specht(Partition((3, 2)), 3)
    with pytest.raises(SizeMismatch):
        hom_dim(a, b)


def test_hook_end_ring_dimensions_at_p2():
    assert hom_dim(build_specht(Partition((3, 1, 1)), 2), build_specht(Partition((3, 1, 1)), 2)) == 2
    assert len(end_ring(build_specht(Partition((7, 1, 1)), 2))) == 2


def test_small_decomposability_calls():
    assert is_decomposable(build_specht(Partition((5, 1, 1)), 2))
    assert not is_decomposable(build_specht(Partition((2, 1)), 3))
    assert not is_decomposable(build_specht(Partition((3, 1)), 2))


def test_decomposability_is_seed_independent_when_enumerating():
    module = build_specht(Partition((5, 1, 1)), 2)
    assert is_decomposable(module, seed=0) == is_decomposable(module, seed=99)


def test_sign_dual_relation_on_small_shapes():
    for p in (2, 3, 5):
        for d in (3, 4, 5):
            for lam in enumerate_partitions(d, "all"):
                assert sign_dual_check(lam, p)


def test_invariants_match_congruence_criterion():
    for p in (2, 3):
        for d in range(1, 8):
            for lam in enumerate_partitions(d, "all"):
                module = build_specht(lam, p)
                assert (invariants_dim(module) > 0) == h0_specht_nonzero(lam, p)


def test_h0_dim_agrees_with_direct_invariants():
    for p in (2, 3, 5):
        for d in range(1, 8):
            for lam in enumerate_partitions(d, "all"):
                direct = invariants_dim(build_specht(lam, p))
                assert h0_dim(lam, p) == direct, (lam, p)


def test_h0_dim_reaches_thin_shapes_through_the_conjugate():
    lam = Partition((2, 1, 1, 1, 1, 1, 1, 1))
    with pytest.raises(TooLarge):
        build_specht(lam, 2)
    assert h0_dim(lam, 2) == 0
    assert h0_dim(Partition((1,) * 10), 2) == 1
    assert h0_dim(Partition((1,) * 10), 3) == 0


def test_dimension_cap():
    with pytest.raises(TooLarge):
        build_specht(Partition((4, 3, 2, 1)), 2, max_dim=10)


def test_dimension_cap_env_override(monkeypatch):
    monkeypatch.setenv("TWISTLAB_MAX_DIM", "10")
    with pytest.raises(TooLarge):
        build_specht(Partition((4, 3, 2, 1)), 2)
    monkeypatch.setenv("TWISTLAB_MAX_DIM", "100000")
    assert build_specht(Partition((4, 3, 2, 1)), 2).dim == 768
