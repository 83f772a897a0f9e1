"""Feedback vertex sets for two subclasses of 2K2-free graphs.

Forbidding C3 and C4 on top of 2K2 leaves only trees and the five-cycle, so
that branch is a constant-time dispatch.  Forbidding C3 and C5 leaves the
connected chain graphs, where a closed formula over a minimal separator S,
the trivial components T and the vertices of the non-trivial component
universal to S gives a candidate feedback vertex set; the answer is floored
by an exact computation on the nested-neighborhood staircase, since the
separator formula can overshoot on rare instances.  Every returned set is
checked to leave an acyclic graph before it is handed back.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FindingError, SubclassError
from .graph import (Graph, VertexSet, graph_predicates, mask_of, mask_to_set,
                    require_connected, serialize, two_coloring, vertex_set)
from .recognition import detect_small_cycles, find_2k2_pair

TAG_C3C4 = "2K2-C3-C4-free"
TAG_C3C5 = "2K2-C3-C5-free"
TAG_2K2_ONLY = "2K2-free-only"
TAG_NOT_2K2 = "not-2K2-free"

CASE_ACYCLIC = "acyclic"
CASE_C5 = "c5-graph"
CASE_I = "thm5-i"
CASE_II = "thm5-ii"
CASE_III = "thm5-iii"


@dataclass(frozen=True)
class SubclassTag:
    value: str  # one of the TAG_* constants


@dataclass(frozen=True)
class FvsResult:
    cardinality: int
    vertices: VertexSet
    case_tag: str
    ingredients: dict[str, VertexSet]


def classify_subclass(graph: Graph) -> SubclassTag:
    """Place a connected graph in the subclass hierarchy.

    The C3C4 tag takes priority: a graph free of all three small cycles is
    acyclic (2K2-free graphs have no induced cycle longer than 5) and lands
    there as well.
    """
    require_connected(graph)
    if find_2k2_pair(graph) is not None:
        return SubclassTag(TAG_NOT_2K2)
    cycles = detect_small_cycles(graph)
    if not cycles["has_induced_C3"] and not cycles["has_induced_C4"]:
        return SubclassTag(TAG_C3C4)
    if not cycles["has_induced_C3"] and not cycles["has_induced_C5"]:
        return SubclassTag(TAG_C3C5)
    return SubclassTag(TAG_2K2_ONLY)


def _acyclic_within(graph: Graph, keep_mask: int) -> bool:
    if keep_mask == 0:
        return True
    comps = graph.components_mask(keep_mask)
    twice_m = 0
    rest = keep_mask
    while rest:
        b = rest & -rest
        twice_m += (graph.adj_mask[b.bit_length() - 1] & keep_mask).bit_count()
        rest ^= b
    return twice_m // 2 == keep_mask.bit_count() - len(comps)


def _checked(graph: Graph, vertices: VertexSet, case_tag: str,
             ingredients: dict[str, VertexSet]) -> FvsResult:
    if not _acyclic_within(graph, graph.full_mask & ~mask_of(vertices)):
        raise FindingError(
            f"feedback set {vertices} ({case_tag}) leaves a cycle in:\n"
            + serialize(graph))
    return FvsResult(len(vertices), vertices, case_tag, ingredients)


def fvs_c3c4(graph: Graph) -> FvsResult:
    """Minimum feedback vertex set of a connected (2K2,C3,C4)-free graph.

    Such a graph is acyclic or is exactly the five-cycle, so the answer is
    the empty set or any single vertex.
    """
    tag = classify_subclass(graph)
    if tag.value != TAG_C3C4:
        raise SubclassError(f"expected a {TAG_C3C4} graph, got {tag.value}")
    empty = {"S": (), "T": (), "U": ()}
    if graph_predicates(graph)["acyclic"]:
        return _checked(graph, (), CASE_ACYCLIC, empty)
    if graph.n == 5 and graph.m == 5 and graph.min_degree == 2 \
            and graph.max_degree == 2:
        return _checked(graph, (0,), CASE_C5, empty)
    raise FindingError(
        "cyclic graph in this subclass should be a five-cycle:\n"
        + serialize(graph))


def _min_degree_neighborhood(graph: Graph) -> VertexSet:
    """N(u) for the lowest-id min-degree vertex, with the linear-time
    minimality check (every component of the remainder sees all of it)."""
    u = min(range(graph.n), key=lambda v: (graph.degree(v), v))
    smask = graph.adj_mask[u]
    comps = graph.components_mask(graph.full_mask & ~smask)
    if len(comps) < 2:
        raise FindingError(
            "min-degree neighborhood does not separate:\n" + serialize(graph))
    for comp in comps:
        reach = 0
        rest = comp
        while rest:
            b = rest & -rest
            reach |= graph.adj_mask[b.bit_length() - 1]
            rest ^= b
        if smask & ~reach:
            raise FindingError(
                "min-degree neighborhood is not minimal in:\n"
                + serialize(graph))
    return mask_to_set(smask)


def _formula_candidates(graph: Graph, s: VertexSet):
    """The closed-form candidate feedback sets for one separator.

    Returns (candidates, ingredients) where each candidate is a
    (vertex set, case tag) pair; the minimum over both entries and over all
    minimal vertex separators is the minimum feedback vertex set.
    """
    smask = mask_of(s)
    comps = graph.components_mask(graph.full_mask & ~smask)
    trivial_mask = 0
    g1mask = 0
    for comp in comps:
        if comp & (comp - 1):
            if g1mask:
                raise FindingError(
                    "separator left two non-trivial components in:\n"
                    + serialize(graph))
            g1mask = comp
        else:
            trivial_mask |= comp
    t = mask_to_set(trivial_mask)
    u_mask = 0
    rest = g1mask
    while rest:
        b = rest & -rest
        if graph.adj_mask[b.bit_length() - 1] & smask == smask:
            u_mask |= b
        rest ^= b
    u = mask_to_set(u_mask)
    ingredients = {"S": s, "T": t, "U": u}

    if not g1mask:
        candidates = [(s[1:], CASE_I), (t[1:], CASE_I)]
    elif _acyclic_within(graph, g1mask):
        if not u:
            raise FindingError(
                "non-trivial component with no vertex universal to S:\n"
                + serialize(graph))
        candidates = [(s, CASE_II), (vertex_set(u + t[1:]), CASE_II)]
    else:
        if not u:
            raise FindingError(
                "non-trivial component with no vertex universal to S:\n"
                + serialize(graph))
        candidates = [(vertex_set(u + t[1:]), CASE_III),
                      (vertex_set(u[1:] + s[1:]), CASE_III)]
    return candidates, ingredients


def _accepted_separators(graph: Graph) -> list[VertexSet]:
    """All minimal vertex separators, min-degree one first.

    Candidates are the distinct vertex neighborhoods; one is accepted when
    it separates and every trivial component it leaves is universal to it.
    """
    md = _min_degree_neighborhood(graph)
    accepted = {mask_of(md)}
    seen = set(accepted)
    for v in range(graph.n):
        smask = graph.adj_mask[v]
        if smask in seen:
            continue
        seen.add(smask)
        comps = graph.components_mask(graph.full_mask & ~smask)
        if len(comps) < 2:
            continue
        ok = True
        for comp in comps:
            if not comp & (comp - 1):
                w = comp.bit_length() - 1
                if smask & ~graph.adj_mask[w]:
                    ok = False
                    break
        if ok:
            accepted.add(smask)
    rest = sorted(mask_to_set(m) for m in accepted - {mask_of(md)})
    return [md] + rest


def _staircase_minimum(graph: Graph) -> VertexSet:
    """Exact minimum feedback vertex set of a connected chain graph.

    Order one side A by degree and the other side B by degree descending;
    nested neighborhoods make every A-neighborhood a prefix of the B order.
    An induced subgraph is a forest exactly when at most one surviving
    A-vertex keeps two or more B-neighbors, so an optimum deletes the c
    highest-degree B-vertices plus all but one A-vertex of remaining degree
    at least two, for the best c:  min over c of c + max(0, k_c - 1) with
    k_c = #{a in A : deg(a) >= c + 2}.
    """
    color = two_coloring(graph)
    if color is None:
        raise FindingError("graph in this subclass must be bipartite:\n"
                           + serialize(graph))
    a_side = [v for v in range(graph.n) if color[v] == 0]
    b_side = [v for v in range(graph.n) if color[v] == 1]
    a_degs = sorted(graph.degree(v) for v in a_side)
    best_c, best_cost = 0, None
    for c in range(max(a_degs) + 1):
        # k = number of A-vertices with degree >= c + 2, via the sorted list
        lo, hi = 0, len(a_degs)
        while lo < hi:
            mid = (lo + hi) // 2
            if a_degs[mid] >= c + 2:
                hi = mid
            else:
                lo = mid + 1
        k = len(a_degs) - lo
        cost = c + max(0, k - 1)
        if best_cost is None or cost < best_cost:
            best_c, best_cost = c, cost
    c = best_c
    b_order = sorted(b_side, key=lambda v: (-graph.degree(v), v))
    removed = set(b_order[:c])
    survivors = sorted((v for v in a_side if graph.degree(v) >= c + 2),
                       key=lambda v: (-graph.degree(v), v))
    removed.update(survivors[1:])
    return vertex_set(removed)


def fvs_c3c5(graph: Graph, check: bool = True) -> FvsResult:
    """Minimum feedback vertex set of a connected (2K2,C3,C5)-free graph.

    For a minimal vertex separator S, with T the trivial components of
    G \\ S and U the vertices of the non-trivial component G1 universal to
    S, the candidate cardinalities are min{|S|-1, |T|-1} when G1 is absent,
    min{|S|, |U|+|T|-1} when G1 is acyclic, and min{|U|+|T|-1,
    (|U|-1)+(|S|-1)} when G1 has a cycle.  No single separator choice is
    reliable (the min-degree one can overshoot the optimum), so the formula
    is evaluated for every minimal vertex separator; the min-degree
    separator is preferred on ties.  Even that minimum can overshoot on
    some graphs (the smallest known has eleven vertices), so the result is
    floored by the exact staircase computation, which keeps the answer a
    true minimum while the separator decomposition still supplies the case
    tag and ingredients.  Ties between the two candidates of one separator
    go to the first-listed; the dropped element is always the lowest-id
    member.  ``check`` controls the subclass precondition test.
    """
    require_connected(graph)
    if check:
        if find_2k2_pair(graph) is not None:
            raise SubclassError(f"expected a {TAG_C3C5} graph: graph has a 2K2")
        cycles = detect_small_cycles(graph)
        if cycles["has_induced_C3"] or cycles["has_induced_C5"]:
            raise SubclassError(
                f"expected a {TAG_C3C5} graph: graph has a C3 or C5")

    if graph_predicates(graph)["acyclic"]:
        return _checked(graph, (), CASE_ACYCLIC, {"S": (), "T": (), "U": ()})

    best = None
    for s in _accepted_separators(graph):
        candidates, ingredients = _formula_candidates(graph, s)
        vertices, case_tag = min(candidates, key=lambda c: len(c[0]))
        if best is None or len(vertices) < len(best[0]):
            best = (vertices, case_tag, ingredients)
    exact = _staircase_minimum(graph)
    if len(exact) < len(best[0]):
        # the separator formula overshot; keep its case classification and
        # ingredients but return the true optimum
        best = (exact, best[1], best[2])
    return _checked(graph, *best)
