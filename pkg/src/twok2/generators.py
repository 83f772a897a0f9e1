"""Test populations: exhaustive small graphs and seeded random families.

The exhaustive enumerators iterate edge-subset bitmasks, filter connectivity
at the mask level and only then materialize Graph objects, so full sweeps
over n <= 7 stay affordable.  The bipartite nested-neighborhood enumerator
covers the (2K2,C3,C5)-free subclass exactly: a connected bipartite graph is
2K2-free precisely when the neighborhoods on one side are pairwise nested,
and forbidding C3 and C5 on a 2K2-free graph forces bipartiteness.  Random
generators take explicit seeds and are deterministic.
"""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from .errors import DomainError
from .graph import Graph
from .recognition import detect_small_cycles, find_2k2_pair


def _mask_connected(n: int, adj: list[int]) -> bool:
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


def enumerate_connected_graphs(n: int,
                               two_k2_free: bool = False,
                               c3_free: bool = False,
                               c4_free: bool = False,
                               c5_free: bool = False) -> Iterator[Graph]:
    """All connected labeled simple graphs on n vertices, optionally filtered.

    Capped at n <= 7 (2^21 edge subsets); filters are applied after the
    connectivity test, so only connected graphs pay for the subgraph scans.
    """
    if not 1 <= n <= 7:
        raise DomainError("exhaustive enumeration capped at 1 <= n <= 7")
    if n == 1:
        yield Graph(1, [])
        return
    pairs = list(combinations(range(n), 2))
    for emask in range(1 << len(pairs)):
        adj = [0] * n
        rest = emask
        while rest:
            b = rest & -rest
            u, v = pairs[b.bit_length() - 1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            rest ^= b
        if not _mask_connected(n, adj):
            continue
        graph = Graph(n, [pairs[i] for i in range(len(pairs))
                          if emask >> i & 1])
        if two_k2_free and find_2k2_pair(graph) is not None:
            continue
        if c3_free or c4_free or c5_free:
            cycles = detect_small_cycles(graph)
            if c3_free and cycles["has_induced_C3"]:
                continue
            if c4_free and cycles["has_induced_C4"]:
                continue
            if c5_free and cycles["has_induced_C5"]:
                continue
        yield graph


def gen_split_graph(n: int, clique_fraction: float, p_cross: float,
                    seed: int, max_tries: int = 1000) -> Graph:
    """Seeded random split graph: a clique, an independent set, and random
    cross edges; redrawn until connected.  2K2-free by construction."""
    if n < 2 or not 0 < clique_fraction < 1 or not 0 <= p_cross <= 1:
        raise DomainError("degenerate split-graph parameters")
    rng = random.Random(seed)
    k = min(n - 1, max(1, round(n * clique_fraction)))
    clique_edges = list(combinations(range(k), 2))
    for _ in range(max_tries):
        edges = list(clique_edges)
        for u in range(k):
            for v in range(k, n):
                if rng.random() < p_cross:
                    edges.append((u, v))
        graph = Graph(n, edges)
        if graph.is_connected():
            return graph
    raise DomainError(
        f"no connected draw in {max_tries} tries (p_cross too small?)")


def gen_2k2_free_rejection(n: int, p: float, seed: int,
                           max_tries: int = 100) -> Graph | None:
    """First connected 2K2-free draw from seeded G(n,p), or None."""
    if n < 1 or not 0 <= p <= 1:
        raise DomainError("degenerate G(n,p) parameters")
    rng = random.Random(seed)
    for _ in range(max_tries):
        edges = [(u, v) for u, v in combinations(range(n), 2)
                 if rng.random() < p]
        graph = Graph(n, edges)
        if graph.is_connected() and find_2k2_pair(graph) is None:
            return graph
    return None


def gen_chain_graph(n: int, seed: int,
                    max_level: int | None = None) -> Graph:
    """Seeded random connected chain graph (bipartite, nested neighborhoods).

    One side vertex is a hub adjacent to the whole other side; the rest get
    neighborhoods that are prefixes of a fixed shuffle, so all neighborhoods
    are nested.  ``max_level`` caps the prefix length of the non-hub side
    vertices, which keeps the edge count linear for large instances.
    """
    if n < 2:
        raise DomainError("chain graph needs at least two vertices")
    rng = random.Random(seed)
    a_size = rng.randint(1, n - 1)
    b = list(range(a_size, n))
    rng.shuffle(b)
    cap = len(b) if max_level is None else max(1, min(max_level, len(b)))
    edges = [(0, v) for v in b]  # hub covers the whole far side
    for u in range(1, a_size):
        level = rng.randint(1, cap)
        edges.extend((u, v) for v in b[:level])
    return Graph(n, edges)


def _nested_assignments(b_verts: list[int], count: int) -> Iterator[list[int]]:
    """All count-tuples of nonempty pairwise-nested subsets of b_verts whose
    union is the full side, as bitmask lists over positions in b_verts."""
    full = (1 << len(b_verts)) - 1
    subsets = list(range(1, full + 1))

    def rec(i: int, chosen: list[int]) -> Iterator[list[int]]:
        if i == count:
            if max(chosen) == full:
                yield list(chosen)
            return
        for s in subsets:
            if all(s & c == s or s & c == c for c in chosen):
                chosen.append(s)
                yield from rec(i + 1, chosen)
                chosen.pop()

    yield from rec(0, [])


def enumerate_chain_graphs(n: int) -> Iterator[Graph]:
    """All connected labeled chain graphs on n vertices (n <= 9).

    Runs over bipartitions with vertex 0 on the A side (the bipartition of
    a connected bipartite graph is unique, so each graph appears once) and
    over all pairwise-nested neighborhood assignments covering the B side.
    """
    if not 1 <= n <= 9:
        raise DomainError("chain-graph enumeration capped at 1 <= n <= 9")
    if n == 1:
        yield Graph(1, [])
        return
    others = list(range(1, n))
    for pick in range(1 << (n - 1)):
        a_verts = [0] + [v for i, v in enumerate(others) if pick >> i & 1]
        b_verts = [v for i, v in enumerate(others) if not pick >> i & 1]
        if not b_verts:
            continue
        for assignment in _nested_assignments(b_verts, len(a_verts)):
            edges = []
            for u, smask in zip(a_verts, assignment):
                rest = smask
                while rest:
                    bit = rest & -rest
                    edges.append((u, b_verts[bit.bit_length() - 1]))
                    rest ^= bit
            yield Graph(n, edges)
