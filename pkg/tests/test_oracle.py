from __future__ import annotations

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from efl.errors import CoreSizeLimitError, IncompleteColoringError
from efl.generators import gen_dense, gen_disjoint
from efl.instance import core_subgraph
from efl.matrix_engine import run_matrix_method
from efl.oracle import (
    chromatic_number_exact,
    corollary_bound_check,
    is_n_colorable,
    theorem_identity,
    verify_proper,
)
from support import brute_chromatic, brute_is_proper, instances


class TestVerifyProper:
    def test_example_engine_coloring(self, example):
        result = run_matrix_method(example)
        report = verify_proper(example, result.coloring)
        assert report.proper
        assert report.colors_used == 6
        assert report.max_color == 6
        assert report.conflicts == ()

    def test_constant_coloring(self, example):
        report = verify_proper(example, {v: 1 for v in example.vertices})
        assert not report.proper
        # every clique contributes all its pairs
        assert len(report.conflicts) == 6 * math.comb(6, 2)
        assert report.colors_used == 1

    def test_injective_coloring(self, example):
        coloring = {v: i + 1 for i, v in enumerate(example.vertices)}
        assert verify_proper(example, coloring).proper

    def test_missing_vertex(self, example):
        coloring = {v: 1 for v in example.vertices if v != "v9"}
        with pytest.raises(IncompleteColoringError):
            verify_proper(example, coloring)

    def test_conflict_structure(self):
        inst = gen_disjoint(2)
        coloring = {"v1_1": 1, "v1_2": 1, "v2_1": 1, "v2_2": 2}
        report = verify_proper(inst, coloring)
        assert report.conflicts == ((1, "v1_1", "v1_2", 1),)

    @settings(max_examples=60)
    @given(inst=instances(max_n=6), data=st.data())
    def test_agrees_with_pairwise_scan(self, inst, data):
        colors = data.draw(
            st.lists(
                st.integers(min_value=1, max_value=inst.n),
                min_size=len(inst.vertices),
                max_size=len(inst.vertices),
            )
        )
        coloring = dict(zip(inst.vertices, colors))
        assert verify_proper(inst, coloring).proper == brute_is_proper(inst, coloring)


class TestChromaticNumberExact:
    def test_example_core_needs_four(self, example):
        core = core_subgraph(example)
        assert chromatic_number_exact(core) == 4
        assert brute_chromatic(list(core.vertices), core.adjacency()) == 4

    def test_dense4_core(self):
        core = core_subgraph(gen_dense(4))
        assert chromatic_number_exact(core) == 3
        assert brute_chromatic(list(core.vertices), core.adjacency()) == 3

    def test_dense5_core(self):
        core = core_subgraph(gen_dense(5))
        assert chromatic_number_exact(core) == 5
        assert brute_chromatic(list(core.vertices), core.adjacency()) == 5

    def test_empty_core(self):
        assert chromatic_number_exact(core_subgraph(gen_disjoint(3))) == 0

    def test_limit_enforced(self):
        core = core_subgraph(gen_dense(8))  # 28 core vertices
        with pytest.raises(CoreSizeLimitError):
            chromatic_number_exact(core, vertex_limit=10)

    def test_deterministic(self):
        core = core_subgraph(gen_dense(6))
        assert chromatic_number_exact(core) == chromatic_number_exact(core)

    @settings(max_examples=40, deadline=None)
    @given(inst=instances(max_n=6))
    def test_agrees_with_plain_enumeration(self, inst):
        core = core_subgraph(inst)
        if len(core.vertices) > 12:
            return
        expected = brute_chromatic(list(core.vertices), core.adjacency())
        assert chromatic_number_exact(core) == expected


class TestIsNColorable:
    def test_example(self, example):
        assert is_n_colorable(example)

    def test_dense7(self):
        assert is_n_colorable(gen_dense(7))

    def test_disjoint(self):
        assert is_n_colorable(gen_disjoint(6))


class TestTheoremIdentity:
    def test_dense6(self):
        result = theorem_identity(gen_dense(6))
        assert result == (15, 15, True)

    def test_example(self, example):
        result = theorem_identity(example)
        assert result.lhs == 13
        assert result.rhs == 13
        assert not result.all_pairs_intersect

    def test_disjoint(self):
        result = theorem_identity(gen_disjoint(4))
        assert result.lhs == 0 and result.rhs == 0
        assert not result.all_pairs_intersect

    @settings(max_examples=80)
    @given(inst=instances())
    def test_identity_holds_everywhere(self, inst):
        result = theorem_identity(inst)
        assert result.lhs == result.rhs


class TestCorollaryBound:
    def test_example_rows(self, example):
        report = corollary_bound_check(example)
        assert report.ok
        by_m = {r.m: r for r in report.rows}
        assert by_m[4].count == 1 and by_m[4].weighted == 6 and by_m[4].bound == 15
        assert by_m[2].count == 4 and by_m[2].weighted == 4

    def test_dense_equality_case(self):
        for n in (3, 6, 10):
            report = corollary_bound_check(gen_dense(n))
            assert report.ok
            (row,) = report.rows
            assert row.m == 2 and row.weighted == row.bound

    def test_disjoint_vacuous(self):
        report = corollary_bound_check(gen_disjoint(4))
        assert report.ok
        assert report.rows == ()

    @settings(max_examples=80)
    @given(inst=instances())
    def test_bound_holds_everywhere(self, inst):
        assert corollary_bound_check(inst).ok
