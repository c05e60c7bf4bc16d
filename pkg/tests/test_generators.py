from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from efl.generators import (
    GenSpec,
    SplitMix64,
    build_random,
    example_instance,
    gen_dense,
    gen_disjoint,
    gen_random,
)
from efl.instance import (
    clique_degree,
    degree_profile,
    intersecting_pair_count,
    shared_vertex,
    validate,
)


class TestSplitMix64:
    def test_reference_stream(self):
        # published outputs for seed 0
        g = SplitMix64(0)
        assert g.next_u64() == 0xE220A8397B1DCDAF
        assert g.next_u64() == 0x6E789E6AA1B965F4
        assert g.next_u64() == 0x06C45D188009454F

    def test_seed_is_full_state(self):
        a, b = SplitMix64(99), SplitMix64(99)
        assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]

    def test_below_bounds(self):
        g = SplitMix64(7)
        assert all(0 <= g.below(13) < 13 for _ in range(100))
        with pytest.raises(ValueError):
            g.below(0)


class TestDisjoint:
    def test_counts(self):
        inst = gen_disjoint(3)
        assert len(inst.vertices) == 9
        assert degree_profile(inst).histogram == {1: 9}

    def test_single(self):
        inst = gen_disjoint(1)
        assert inst.vertices == ("v1_1",)

    def test_validates(self):
        assert validate(gen_disjoint(10)).ok


class TestDense:
    def test_n3_construction(self):
        inst = gen_dense(3)
        assert set(inst.clique(1)) == {"b1_2", "b1_3", "p1"}
        assert set(inst.clique(2)) == {"b1_2", "b2_3", "p2"}
        assert set(inst.clique(3)) == {"b1_3", "b2_3", "p3"}
        assert validate(inst).ok

    def test_shared_everywhere(self):
        inst = gen_dense(5)
        for i in range(1, 6):
            for j in range(i + 1, 6):
                assert shared_vertex(inst, i, j) == f"b{i}_{j}"

    @pytest.mark.parametrize("n", [2, 3, 6, 11, 20])
    def test_histogram_and_counts(self, n):
        inst = gen_dense(n)
        assert validate(inst).ok
        assert degree_profile(inst).histogram == {1: n, 2: math.comb(n, 2)}
        assert len(inst.vertices) == math.comb(n, 2) + n
        assert intersecting_pair_count(inst) == math.comb(n, 2)

    def test_rejects_small_n(self):
        with pytest.raises(ValueError):
            gen_dense(1)


class TestRandom:
    def test_zero_merges_is_disjoint_shape(self):
        inst = gen_random(4, 0, seed=11)
        assert len(inst.vertices) == 16
        assert degree_profile(inst).histogram == {1: 16}

    def test_determinism(self):
        assert gen_random(6, 13, 42) == gen_random(6, 13, 42)

    def test_regression_anchor(self):
        # frozen behavior of the documented SplitMix64 stream at this seed
        built = build_random(GenSpec(kind="random", n=6, seed=42, merges=13))
        assert validate(built.instance).ok
        assert (built.merges_done, built.extensions_done) == (9, 3)
        assert intersecting_pair_count(built.instance) == 15

    def test_pure_merges_vertex_count(self):
        for merges in (0, 3, 10):
            inst = gen_random(6, merges, seed=5, extension_percent=0)
            assert len(inst.vertices) == 36 - merges
            assert intersecting_pair_count(inst) == merges

    def test_extensions_raise_degree(self):
        # seed chosen so at least one extension fires
        built = build_random(GenSpec(kind="random", n=6, seed=42, merges=13))
        profile = degree_profile(built.instance)
        assert profile.max_degree >= 3

    @settings(max_examples=40)
    @given(
        n=st.integers(min_value=2, max_value=9),
        seed=st.integers(min_value=0, max_value=2**64 - 1),
        data=st.data(),
    )
    def test_always_validates(self, n, seed, data):
        merges = data.draw(st.integers(min_value=0, max_value=n * (n - 1) // 2))
        inst = gen_random(n, merges, seed)
        assert validate(inst).ok

    def test_genspec_validation(self):
        with pytest.raises(ValueError):
            GenSpec(kind="random", n=4, seed=1, merges=7)  # > C(4,2)
        with pytest.raises(ValueError):
            GenSpec(kind="weird", n=4)
        with pytest.raises(ValueError):
            gen_random(1, 0, 0)

    def test_debug_mode_checks_every_move(self):
        for seed in range(4):
            spec = GenSpec(kind="random", n=6, seed=seed, merges=12, debug_validate=True)
            assert validate(build_random(spec).instance).ok

    def test_build_random_needs_random_kind(self):
        with pytest.raises(ValueError):
            build_random(GenSpec(kind="dense", n=4))


class TestExampleInstance:
    def test_shape(self, example):
        assert example.n == 6
        assert len(example.vertices) == 27
        assert validate(example).ok

    def test_degree_structure(self, example):
        assert degree_profile(example).histogram == {1: 21, 2: 4, 3: 1, 4: 1}
        assert clique_degree(example, "v1") == 4

    def test_disjoint_pairs(self, example):
        assert shared_vertex(example, 1, 6) is None
        assert shared_vertex(example, 4, 5) is None
