"""Maximal independent sets of 2K2-free graphs, and what follows from them.

The enumeration recurses through minimal vertex separators: for a separator
S, the sets avoiding S are the trivial components of G \\ S joined with each
maximal independent set of the non-trivial component, and the sets meeting S
are found by recursing on the subgraph induced by S plus the non-trivial
component.  Every candidate is greedily extended to maximality and verified,
so the collection is exact regardless of which separator generated a set.

Minimal vertex covers are the complements of the maximal independent sets;
3-colorability reduces to finding one maximal independent set whose removal
leaves a bipartite graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .errors import FindingError, NotTwoK2FreeError
from .graph import (Graph, VertexSet, mask_of, mask_to_set, require_connected,
                    serialize, two_coloring, vertex_set)
from .recognition import find_2k2_pair
from .separators import enumerate_mvs


@dataclass(frozen=True)
class MISCollection:
    """All maximal independent sets, sorted by (cardinality desc, lexicographic)."""

    sets: tuple[VertexSet, ...]
    graph_signature: str


@dataclass(frozen=True)
class ColorResult:
    chromatic_verdict: str  # 1-colorable | 2-colorable | 3-colorable | not-3-colorable
    coloring: dict[int, int] | None
    certificate_mis: VertexSet | None


def _check_preconditions(graph: Graph, check: bool) -> None:
    require_connected(graph)
    if check:
        pair = find_2k2_pair(graph)
        if pair is not None:
            raise NotTwoK2FreeError(pair)


def _extend_to_maximal(graph: Graph, vmask: int, base: frozenset[int]) -> frozenset[int]:
    """Greedy ascending-id extension to a maximal independent set within vmask."""
    cur_mask = mask_of(base)
    cur = set(base)
    rest = vmask & ~cur_mask
    while rest:
        b = rest & -rest
        v = b.bit_length() - 1
        if not graph.adj_mask[v] & cur_mask:
            cur.add(v)
            cur_mask |= b
        rest ^= b
    return frozenset(cur)


def _is_maximal_independent(graph: Graph, vmask: int, s: frozenset[int]) -> bool:
    smask = mask_of(s)
    closed = smask
    for v in s:
        if graph.adj_mask[v] & smask:
            return False
        closed |= graph.adj_mask[v]
    return closed & vmask == vmask


def _brute_mis(graph: Graph, vmask: int) -> set[frozenset[int]]:
    verts = mask_to_set(vmask)
    out = set()
    for size in range(1, len(verts) + 1):
        for combo in combinations(verts, size):
            s = frozenset(combo)
            if _is_maximal_independent(graph, vmask, s):
                out.add(s)
    return out


def _mis_of_mask(graph: Graph, vmask: int, memo: dict) -> set[frozenset[int]]:
    """MIS family of a possibly disconnected induced subgraph (component product)."""
    comps = graph.components_mask(vmask)
    if len(comps) == 1:
        return _mis_connected(graph, comps[0], memo)
    families = [_mis_connected(graph, c, memo) for c in comps]
    return {frozenset().union(*parts) for parts in product(*families)}


def _mis_connected(graph: Graph, vmask: int, memo: dict) -> set[frozenset[int]]:
    cached = memo.get(vmask)
    if cached is not None:
        return cached
    verts = mask_to_set(vmask)
    k = len(verts)
    if k <= 6:
        result = _brute_mis(graph, vmask)
        memo[vmask] = result
        return result

    sub, ids = graph.induced(verts)
    if sub.m == k * (k - 1) // 2:  # clique: each vertex on its own
        result = {frozenset((v,)) for v in verts}
        memo[vmask] = result
        return result

    result: set[frozenset[int]] = set()
    for record in enumerate_mvs(sub, check=False, verify=False):
        smask = mask_of(ids[v] for v in record.vertices)
        s_set = frozenset(mask_to_set(smask))
        comps = graph.components_mask(vmask & ~smask)
        nontrivial = [c for c in comps if c & (c - 1)]
        trivial_set = frozenset(c.bit_length() - 1 for c in comps if not c & (c - 1))
        if len(nontrivial) > 1:
            raise FindingError(
                "separator of a 2K2-free graph left two non-trivial "
                "components:\n" + serialize(sub))
        if nontrivial:
            g1mask = nontrivial[0]
            for m in _mis_connected(graph, g1mask, memo):
                result.add(_extend_to_maximal(graph, vmask, trivial_set | m))
            for j in _mis_of_mask(graph, smask | g1mask, memo):
                if j & s_set:
                    result.add(_extend_to_maximal(graph, vmask, j))
        else:
            result.add(_extend_to_maximal(graph, vmask, trivial_set))
            for j in _mis_of_mask(graph, smask, memo):
                result.add(_extend_to_maximal(graph, vmask, j))

    for s in result:
        if not _is_maximal_independent(graph, vmask, s):
            raise FindingError(
                "enumeration produced a non-maximal candidate on:\n"
                + serialize(sub))
    memo[vmask] = result
    return result


def enumerate_mis(graph: Graph, check: bool = True) -> MISCollection:
    """All maximal independent sets of a connected 2K2-free graph."""
    _check_preconditions(graph, check)
    family = _mis_connected(graph, graph.full_mask, {})
    ordered = sorted((vertex_set(s) for s in family), key=lambda s: (-len(s), s))
    return MISCollection(tuple(ordered), graph.signature())


def max_independent_set(graph: Graph) -> VertexSet:
    """Maximum independent set: the first element of the sorted collection."""
    return enumerate_mis(graph).sets[0]


def enumerate_minimal_vertex_covers(graph: Graph) -> list[VertexSet]:
    """Complements of the maximal independent sets; each verified to cover."""
    covers = []
    for s in enumerate_mis(graph).sets:
        cover = vertex_set(set(range(graph.n)) - set(s))
        cset = set(cover)
        if not all(u in cset or v in cset for u, v in graph.edges):
            raise FindingError("complement of an MIS missed an edge:\n"
                               + serialize(graph))
        covers.append(cover)
    return covers


def min_vertex_cover(graph: Graph) -> VertexSet:
    """Minimum vertex cover: complement of the maximum independent set."""
    return enumerate_minimal_vertex_covers(graph)[0]


def three_color(graph: Graph, check: bool = True) -> ColorResult:
    """Decide <=3-colorability via the maximal-independent-set route.

    If some proper 3-coloring exists, one exists in which a color class is a
    maximal independent set, so scanning the MIS collection for a set whose
    removal leaves a bipartite graph is complete.
    """
    _check_preconditions(graph, check)
    if graph.m == 0:
        return ColorResult("1-colorable", {v: 0 for v in range(graph.n)}, None)
    base = two_coloring(graph)
    if base is not None:
        return ColorResult("2-colorable", dict(enumerate(base)), None)
    collection = enumerate_mis(graph, check=False)
    for mis in collection.sets:
        rest = sorted(set(range(graph.n)) - set(mis))
        sub, ids = graph.induced(rest)
        sub_coloring = two_coloring(sub)
        if sub_coloring is None:
            continue
        coloring = {ids[i]: c for i, c in enumerate(sub_coloring)}
        coloring.update({v: 2 for v in mis})
        if any(coloring[u] == coloring[v] for u, v in graph.edges):
            raise FindingError("improper 3-coloring constructed on:\n"
                               + serialize(graph))
        return ColorResult("3-colorable", coloring, mis)
    return ColorResult("not-3-colorable", None, None)
