"""Subclass classification and feedback vertex set formulas."""

import random

import pytest

from twok2 import (Graph, SubclassError, classify_subclass,
                   detect_small_cycles, enumerate_chain_graphs, find_2k2_pair,
                   fvs_c3c4, fvs_c3c5, gen_chain_graph, graph_predicates,
                   min_degree_separator, oracle_min_fvs)
from twok2.graph import classify_subset, components_after_removal

from conftest import complete, cycle, path, star


def removal_is_acyclic(graph, removed):
    keep = [v for v in range(graph.n) if v not in removed]
    if not keep:
        return True
    sub, _ = graph.induced(keep)
    return graph_predicates(sub)["acyclic"]


class TestClassifySubclass:
    def test_c5(self, c5):
        assert classify_subclass(c5).value == "2K2-C3-C4-free"

    def test_k23(self, k23):
        assert classify_subclass(k23).value == "2K2-C3-C5-free"

    def test_c6(self, c6):
        assert classify_subclass(c6).value == "not-2K2-free"

    def test_split_graph(self, split_example):
        assert classify_subclass(split_example).value == "2K2-free-only"

    def test_tree_gets_c3c4_priority(self):
        assert classify_subclass(path(4)).value == "2K2-C3-C4-free"


class TestFvsC3C4:
    def test_p4_acyclic(self, p4):
        result = fvs_c3c4(p4)
        assert (result.cardinality, result.vertices, result.case_tag) == \
            (0, (), "acyclic")

    def test_c5(self, c5):
        result = fvs_c3c4(c5)
        assert (result.cardinality, result.vertices, result.case_tag) == \
            (1, (0,), "c5-graph")

    def test_star(self):
        assert fvs_c3c4(star(5)).cardinality == 0

    def test_wrong_subclass_rejected(self, k23):
        with pytest.raises(SubclassError):
            fvs_c3c4(k23)

    def test_every_cyclic_member_is_c5(self):
        # empirical form of the subclass collapse: among the triangle- and
        # square-free 2K2-free graphs, the only cyclic ones are five-cycles
        from twok2 import enumerate_connected_graphs
        for n in range(3, 7):
            for g in enumerate_connected_graphs(
                    n, two_k2_free=True, c3_free=True, c4_free=True):
                if graph_predicates(g)["acyclic"]:
                    continue
                assert g.n == 5 and g.m == 5
                assert g.min_degree == g.max_degree == 2


class TestFvsC3C5:
    def test_c4(self, c4):
        result = fvs_c3c5(c4)
        assert result.cardinality == 1 and result.vertices == (3,)
        assert result.case_tag == "thm5-i"
        assert result.ingredients["S"] == (1, 3)
        assert result.ingredients["T"] == (0, 2)

    def test_k23(self, k23):
        assert fvs_c3c5(k23).cardinality == 1

    def test_k33(self, k33):
        assert fvs_c3c5(k33).cardinality == 2

    def test_acyclic_chain(self):
        assert fvs_c3c5(star(4), check=False).cardinality == 0

    def test_wrong_subclass_rejected(self, c5, k4):
        for g in (c5, k4):
            with pytest.raises(SubclassError):
                fvs_c3c5(g)

    def test_min_degree_formula_alone_overshoots(self):
        # for this chain graph the min-degree separator is {2}, for which
        # the closed form yields 3; the optimum (via N(0) = {3,4}) is 2,
        # which is why the formula runs over every minimal separator
        g = Graph(8, [(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (1, 6),
                      (2, 3), (2, 4), (2, 5), (2, 6), (2, 7)])
        assert min_degree_separator(g) == (2,)
        result = fvs_c3c5(g)
        assert result.cardinality == 2 == len(oracle_min_fvs(g))

    def test_separator_formula_alone_overshoots(self):
        # on this eleven-vertex chain graph the closed form gives 4 for
        # every minimal separator, but the optimum is 3 ({9, 10, 0} works);
        # the exact staircase floor must kick in
        g = Graph(11, [(0, 6), (0, 7), (0, 8), (0, 9), (0, 10),
                       (1, 6), (1, 7), (1, 9), (1, 10),
                       (2, 6), (2, 7), (2, 8), (2, 9), (2, 10),
                       (3, 9), (3, 10), (4, 10), (5, 9), (5, 10)])
        result = fvs_c3c5(g)
        assert result.cardinality == 3 == len(oracle_min_fvs(g))
        assert removal_is_acyclic(g, result.vertices)

    def test_matches_oracle_exhaustive_n7(self):
        for n in range(1, 8):
            for g in enumerate_chain_graphs(n):
                result = fvs_c3c5(g)
                assert result.cardinality == len(oracle_min_fvs(g))
                assert removal_is_acyclic(g, result.vertices)

    def test_matches_oracle_random_n14(self):
        rng = random.Random(5)
        for i in range(120):
            g = gen_chain_graph(rng.randint(4, 14), seed=i)
            assert fvs_c3c5(g).cardinality == len(oracle_min_fvs(g))


class TestStructuralInvariants:
    def test_separator_structure_on_chain_graphs(self):
        # the min-degree separator of a chain graph is independent, leaves
        # at most one trivial component when it has >1 vertex, and splits
        # each non-trivial-component edge into a universal endpoint and an
        # endpoint with no separator neighbor
        for g in enumerate_chain_graphs(7):
            if g.m == g.n * (g.n - 1) // 2 or g.n < 3:
                continue
            s = min_degree_separator(g)
            assert classify_subset(g, s)["independent"]
            split = components_after_removal(g, s)
            cycles = detect_small_cycles(g)
            if not cycles["has_induced_C4"] and len(s) > 1:
                assert split.trivial_count == 1
            sset = set(s)
            for comp in split.nontrivial_components:
                sub_vertices = set(comp)
                for u, v in g.sorted_edges():
                    if u in sub_vertices and v in sub_vertices:
                        u_univ = sset <= g.adj[u]
                        v_univ = sset <= g.adj[v]
                        u_iso = not sset & g.adj[u]
                        v_iso = not sset & g.adj[v]
                        assert (u_univ and v_iso) or (v_univ and u_iso)
