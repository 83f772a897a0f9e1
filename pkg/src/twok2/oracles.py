"""Deliberately naive reference implementations.

Everything here works straight from the definitions by subset or assignment
enumeration, shares nothing with the structural algorithms, and is capped at
sizes where a single call finishes in well under a minute.  These are the
correctness anchors the rest of the test suite compares against.
"""

from __future__ import annotations

from itertools import combinations

from .errors import DomainError
from .graph import Graph, VertexSet, mask_of, mask_to_set, require_connected


def _separates(graph: Graph, subset_mask: int) -> bool:
    keep = graph.full_mask & ~subset_mask
    if keep == 0:
        return False
    return len(graph.components_mask(keep)) >= 2


def oracle_minimal_separators(graph: Graph, max_n: int = 18) -> list[VertexSet]:
    """All inclusion-minimal vertex separators, by increasing-cardinality sweep.

    A candidate is skipped when some already-found minimal separator is a
    proper subset of it (any separating proper subset contains a minimal one,
    so the pruning is exact).
    """
    require_connected(graph)
    if graph.n > max_n:
        raise DomainError(f"oracle capped at n <= {max_n}")
    found: list[int] = []
    verts = range(graph.n)
    for size in range(1, graph.n - 1):
        for combo in combinations(verts, size):
            mask = mask_of(combo)
            if any(f & mask == f for f in found):
                continue
            if _separates(graph, mask):
                found.append(mask)
    return sorted((mask_to_set(f) for f in found), key=lambda s: (len(s), s))


def oracle_mis(graph: Graph, max_n: int = 20) -> list[VertexSet]:
    """All maximal independent sets by full subset scan."""
    if graph.n > max_n:
        raise DomainError(f"oracle capped at n <= {max_n}")
    adj_mask = graph.adj_mask
    out = []
    for mask in range(1, 1 << graph.n):
        closed = mask
        ok = True
        for v in range(graph.n):
            if mask >> v & 1:
                if adj_mask[v] & mask:
                    ok = False
                    break
                closed |= adj_mask[v]
        if ok and closed == graph.full_mask:
            out.append(mask_to_set(mask))
    return sorted(out, key=lambda s: (-len(s), s))


def _acyclic_after_removal(graph: Graph, removed_mask: int) -> bool:
    keep = graph.full_mask & ~removed_mask
    if keep == 0:
        return True
    comps = graph.components_mask(keep)
    keep_set = set(mask_to_set(keep))
    m = sum(1 for u, v in graph.edges if u in keep_set and v in keep_set)
    return m == len(keep_set) - len(comps)


def oracle_min_fvs(graph: Graph, max_n: int = 16) -> VertexSet:
    """Lexicographically least minimum feedback vertex set."""
    if graph.n > max_n:
        raise DomainError(f"oracle capped at n <= {max_n}")
    for size in range(graph.n + 1):
        for combo in combinations(range(graph.n), size):
            if _acyclic_after_removal(graph, mask_of(combo)):
                return tuple(combo)
    raise AssertionError("unreachable: removing all vertices is acyclic")


def oracle_min_connected_separator(graph: Graph, max_n: int = 18) -> VertexSet | None:
    """Least (cardinality, lexicographic) connected separating set, or None."""
    require_connected(graph)
    if graph.n > max_n:
        raise DomainError(f"oracle capped at n <= {max_n}")
    for size in range(1, graph.n - 1):
        for combo in combinations(range(graph.n), size):
            mask = mask_of(combo)
            if len(graph.components_mask(mask)) != 1:
                continue
            if _separates(graph, mask):
                return tuple(combo)
    return None


def oracle_three_color(graph: Graph, max_n: int = 12) -> list[int] | None:
    """First proper <=3-coloring in lexicographic assignment order, or None."""
    if graph.n > max_n:
        raise DomainError(f"oracle capped at n <= {max_n}")
    edges = graph.sorted_edges()
    coloring = [0] * graph.n

    def extend(i: int) -> bool:
        if i == graph.n:
            return True
        for c in range(3):
            if all(coloring[u] != c for u in graph.adj[i] if u < i):
                coloring[i] = c
                if extend(i + 1):
                    return True
        return False

    if extend(0):
        assert all(coloring[u] != coloring[v] for u, v in edges)
        return list(coloring)
    return None
