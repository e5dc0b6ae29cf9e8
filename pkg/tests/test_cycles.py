"""Chorded-cycle certificates, detection, and longest-path machinery."""

import itertools

import pytest

from chordpack.cycles import (
    ChordedCycleCert,
    PathCert,
    chord_count,
    chorded_cycle_free_by_paths,
    check_chorded_cycle,
    contains_chorded_cycle,
    find_chorded_cycle,
    hamiltonian_cycle,
    hops,
    longest_path,
    longest_path_within,
    spanning_chorded_cycle,
    spanning_path_endpoints,
    verify_chorded_cycle,
    NOT_CYCLE,
    TOO_SHORT,
    CHORD_MISSING,
)
from chordpack.graph import from_edge_list, mask_of
from chordpack.extremal import complete_multipartite

from conftest import complete, cycle_graph, path_graph


class TestCertificates:
    def test_k4_cert_checks(self):
        g = complete(4)
        cert = ChordedCycleCert((0, 1, 2, 3), frozenset({(0, 2)}))
        assert verify_chorded_cycle(g, cert)

    def test_missing_chord_rejected(self):
        g = cycle_graph(5)
        cert = ChordedCycleCert((0, 1, 2, 3, 4), frozenset({(0, 2)}))
        assert check_chorded_cycle(g, cert) == CHORD_MISSING

    def test_broken_cycle_rejected(self):
        g = path_graph(4).with_edge(0, 2)
        cert = ChordedCycleCert((0, 1, 2, 3), frozenset({(0, 2)}))
        assert check_chorded_cycle(g, cert) == NOT_CYCLE

    def test_triangle_too_short(self):
        cert = ChordedCycleCert((0, 1, 2), frozenset())
        assert check_chorded_cycle(complete(3), cert) == TOO_SHORT


class TestSpanning:
    def test_hamiltonian_cycle_lex_first(self):
        g = complete(4)
        assert hamiltonian_cycle(g, g.full_mask) == (0, 1, 2, 3)

    def test_no_hamiltonian_in_star(self):
        g = from_edge_list(4, [(0, 1), (0, 2), (0, 3)])
        assert hamiltonian_cycle(g, g.full_mask) is None

    def test_spanning_chorded_cycle_chords_match_edge_surplus(self):
        g = complete(5)
        s = g.full_mask
        cert = spanning_chorded_cycle(g, s)
        assert len(cert.chords) == chord_count(g, s) == 10 - 5

    def test_chordless_set_has_no_spanning_chorded_cycle(self):
        g = cycle_graph(4)
        assert spanning_chorded_cycle(g, g.full_mask) is None


class TestDetection:
    def test_k23_is_chorded_cycle_free(self):
        assert find_chorded_cycle(complete_multipartite([2, 3])) is None

    def test_petersen_minimum_order(self, petersen):
        cert = find_chorded_cycle(petersen)
        assert len(cert.order) == 8 and len(cert.chords) >= 1
        assert verify_chorded_cycle(petersen, cert)

    def test_forbidden_mask_respected(self):
        g = complete(5)
        cert = find_chorded_cycle(g, forbidden=1)
        assert not cert.vertex_mask & 1

    def test_minimality_against_brute_force(self, all_graphs_n7):
        """find_chorded_cycle returns the smallest possible vertex count."""
        for g in all_graphs_n7[::7]:
            cert = find_chorded_cycle(g)
            if cert is None:
                continue
            smaller = any(
                s.bit_count() >= 4
                and s.bit_count() < len(cert.order)
                and spanning_chorded_cycle(g, s)
                for s in range(1 << g.n)
            )
            assert not smaller

    def test_path_criterion_agrees_on_small_graphs(self, all_graphs_n7):
        # the two-internally-disjoint-paths criterion vs direct search
        for g in all_graphs_n7[::5]:
            assert chorded_cycle_free_by_paths(g) == (not contains_chorded_cycle(g))


class TestLongestPath:
    def test_path_graph(self):
        p = longest_path(path_graph(5))
        assert p.order == (0, 1, 2, 3, 4)

    def test_lex_smallest_tiebreak(self):
        p = longest_path(complete(4))
        assert p.order == (0, 1, 2, 3)

    def test_within_mask(self):
        g = cycle_graph(6)
        p = longest_path_within(g, mask_of([0, 1, 2]))
        assert p.vertex_mask == mask_of([0, 1, 2])

    def test_empty_graph_gives_empty_path(self):
        g = from_edge_list(3, [])
        assert len(longest_path(g).order) == 1

    def test_spanning_path_endpoints_path(self):
        g = path_graph(4)
        p = longest_path(g)
        assert spanning_path_endpoints(g, p) == mask_of([0, 3])

    def test_spanning_path_endpoints_cycle(self):
        # every vertex of a cycle starts some spanning path
        g = cycle_graph(5)
        p = longest_path(g)
        assert spanning_path_endpoints(g, p) == g.full_mask

    def test_hops(self):
        g = path_graph(4).with_edge(0, 2)
        assert hops(g, longest_path(g)) == [(0, 2)]


class TestDegeneracy:
    def test_two_degenerate_graphs_are_chorded_cycle_free(self):
        """Graphs where every subgraph has a vertex of degree <= 2.

        A chorded cycle needs minimum degree 3 somewhere, so greedily
        2-degenerate graphs can never contain one.
        """
        for edges in [
            [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)],
            [(i, (i + 1) % 7) for i in range(7)],
        ]:
            n = 1 + max(max(e) for e in edges)
            g = from_edge_list(n, edges)
            assert not contains_chorded_cycle(g)
