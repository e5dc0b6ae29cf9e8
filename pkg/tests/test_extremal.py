"""Extremal family generators, recognition, and edge-maximality."""

import pytest

from chordpack.errors import BadParamsError, BudgetExceededError
from chordpack.extremal import (
    G1,
    G2,
    NEITHER,
    complete_multipartite,
    edge_maximality_check,
    gen_g1,
    gen_g2,
    recognize,
)
from chordpack.graph import isomorphic, sigma2, to_graph6
from chordpack.packing import STATUS_NONE, STATUS_PACKED, SolveBudget, pack_chorded

from conftest import complete, cycle_graph, path_graph


class TestGenerators:
    def test_g1_shape(self):
        g = gen_g1(10, 2)
        assert isomorphic(g, complete_multipartite([5, 5]))

    def test_g2_shape(self):
        g = gen_g2(2)
        assert isomorphic(g, complete_multipartite([4, 4, 1]))

    def test_g1_known_graph6(self):
        assert to_graph6(gen_g1(10, 2)) == "I?B~vrw}?"

    def test_g2_known_graph6(self):
        assert to_graph6(gen_g2(2)) == "H?~vfb~"

    def test_g1_order_too_small(self):
        with pytest.raises(BadParamsError):
            gen_g1(9, 2)

    def test_g1_k_too_small(self):
        with pytest.raises(BadParamsError):
            gen_g1(10, 1)

    def test_g2_k_too_small(self):
        with pytest.raises(BadParamsError):
            gen_g2(1)

    def test_degree_sum_parameter(self):
        for n in (10, 11, 12):
            assert sigma2(gen_g1(n, 2)) == 10
        assert sigma2(gen_g2(2)) == 10


class TestRecognition:
    def test_g1_tag(self):
        tag = recognize(gen_g1(11, 2), 2)
        assert tag.kind == G1 and tag.params == (11, 2)

    def test_g2_tag(self):
        tag = recognize(gen_g2(2), 2)
        assert tag.kind == G2 and tag.params == (2,)

    def test_relabelled_g2_still_recognized(self):
        assert recognize(complete_multipartite([4, 1, 4]), 2).kind == G2

    def test_wrong_k_is_neither(self):
        assert recognize(gen_g2(2), 3).kind == NEITHER

    def test_random_graph_is_neither(self):
        assert recognize(cycle_graph(10), 2).kind == NEITHER

    def test_complete_graph_is_neither(self):
        assert recognize(complete(9), 2).kind == NEITHER


class TestEdgeMaximality:
    def test_g1_is_edge_maximal(self):
        assert edge_maximality_check(gen_g1(10, 2), 2)

    def test_g2_is_edge_maximal(self):
        assert edge_maximality_check(gen_g2(2), 2)

    def test_c6_maximal_for_one_cycle(self):
        # adding any chord to C_6 creates a chorded cycle
        assert edge_maximality_check(cycle_graph(6), 1)

    def test_sparse_graph_not_maximal(self):
        # closing a path into a plain cycle creates no chorded cycle
        assert not edge_maximality_check(path_graph(6), 1)

    def test_complete_graph_rejected(self):
        with pytest.raises(BadParamsError):
            edge_maximality_check(complete(5), 1)

    def test_budget_propagates(self):
        with pytest.raises(BudgetExceededError):
            edge_maximality_check(gen_g1(10, 2), 2, SolveBudget(max_nodes=2))


class TestNonPackingInvariant:
    def test_g1_blocks_k_but_not_k_minus_one(self):
        g = gen_g1(10, 2)
        assert pack_chorded(g, 2).status == STATUS_NONE
        assert pack_chorded(g, 1).status == STATUS_PACKED

    def test_g2_blocks_k_but_not_k_minus_one(self):
        g = gen_g2(2)
        assert pack_chorded(g, 2).status == STATUS_NONE
        assert pack_chorded(g, 1).status == STATUS_PACKED
