"""Immutable simple undirected graphs and the predicates everything else builds on.

Vertices are dense 0-based integers.  Adjacency is kept twice: as frozensets
(convenient) and as Python-int bitmasks (fast flood fills and universality
checks).  All vertex sets returned to callers are canonical sorted tuples, and
component lists are ordered by smallest member, so outputs compare exactly
against brute-force oracles.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DisconnectedGraphError, DomainError, ParseError

#: Canonical vertex set: strictly increasing tuple of vertex ids.
VertexSet = tuple[int, ...]


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Canonicalize an iterable of vertex ids (sorted, deduplicated)."""
    return tuple(sorted(set(vertices)))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_to_set(mask: int) -> VertexSet:
    return tuple(bits(mask))


class Graph:
    """Simple undirected graph on vertices 0..n-1.

    Immutable after construction; safe to share between threads.
    """

    __slots__ = ("n", "m", "edges", "adj", "adj_mask", "full_mask",
                 "min_degree", "max_degree")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise DomainError("graph needs at least one vertex")
        adj: list[set[int]] = [set() for _ in range(n)]
        norm: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"vertex id out of range in edge ({u}, {v})")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise DomainError(f"duplicate edge {e}")
            norm.add(e)
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.m = len(norm)
        self.edges = frozenset(norm)
        self.adj = tuple(frozenset(s) for s in adj)
        self.adj_mask = tuple(mask_of(s) for s in adj)
        self.full_mask = (1 << n) - 1
        degs = [len(s) for s in adj]
        self.min_degree = min(degs)
        self.max_degree = max(degs)

    # -- basic queries ----------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- derived graphs ---------------------------------------------------

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabeled to 0..k-1.

        Returns the subgraph and the sorted list of original ids; position i
        of the list is the original id of subgraph vertex i.
        """
        keep = sorted(set(vertices))
        if not keep:
            raise DomainError("induced subgraph on empty vertex set")
        pos = {v: i for i, v in enumerate(keep)}
        keep_set = set(keep)
        sub_edges = [(pos[u], pos[v]) for u, v in self.edges
                     if u in keep_set and v in keep_set]
        return Graph(len(keep), sub_edges), keep

    def complement(self) -> "Graph":
        edges = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                 if v not in self.adj[u]]
        return Graph(self.n, edges)

    # -- flood fills ------------------------------------------------------

    def components_mask(self, keep_mask: int) -> list[int]:
        """Connected components of the subgraph induced on ``keep_mask``,
        as bitmasks ordered by lowest contained vertex."""
        adj_mask = self.adj_mask
        rem = keep_mask
        comps = []
        while rem:
            seed = rem & -rem
            comp = seed
            frontier = seed
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    b = f & -f
                    nxt |= adj_mask[b.bit_length() - 1]
                    f ^= b
                frontier = nxt & rem & ~comp
                comp |= frontier
            comps.append(comp)
            rem &= ~comp
        return comps

    def is_connected(self) -> bool:
        return len(self.components_mask(self.full_mask)) == 1

    def signature(self) -> str:
        """Stable hash of the canonical serialization."""
        return hashlib.sha256(serialize(self).encode()).hexdigest()


@dataclass(frozen=True)
class ComponentSplit:
    """Components of G \\ removed, ordered by smallest contained vertex."""

    removed: VertexSet
    components: tuple[VertexSet, ...]
    trivial_count: int
    nontrivial_indices: tuple[int, ...]

    @property
    def nontrivial_components(self) -> tuple[VertexSet, ...]:
        return tuple(self.components[i] for i in self.nontrivial_indices)


def components_after_removal(graph: Graph, removed: Iterable[int]) -> ComponentSplit:
    """Breadth-first component decomposition of G \\ removed."""
    rem = vertex_set(removed)
    for v in rem:
        if not 0 <= v < graph.n:
            raise DomainError(f"vertex {v} not in graph")
    keep = graph.full_mask & ~mask_of(rem)
    if keep == 0:
        raise DomainError("cannot remove the entire vertex set")
    comps = tuple(mask_to_set(c) for c in graph.components_mask(keep))
    nontrivial = tuple(i for i, c in enumerate(comps) if len(c) > 1)
    return ComponentSplit(
        removed=rem,
        components=comps,
        trivial_count=sum(1 for c in comps if len(c) == 1),
        nontrivial_indices=nontrivial,
    )


def is_universal_vertex(graph: Graph, subset: Iterable[int], v: int) -> bool:
    """True iff v is adjacent to every member of ``subset`` (vacuous on empty)."""
    s = set(subset)
    if v in s:
        raise DomainError(f"vertex {v} lies inside the subset")
    return s <= graph.adj[v]


def is_universal_edge(graph: Graph, subset: Iterable[int], u: int, v: int) -> bool:
    """True iff every member of ``subset`` is adjacent to u or to v."""
    s = set(subset)
    if not graph.has_edge(u, v):
        raise DomainError(f"({u}, {v}) is not an edge")
    if u in s or v in s:
        raise DomainError("edge endpoint lies inside the subset")
    return s <= (graph.adj[u] | graph.adj[v])


def classify_subset(graph: Graph, subset: Iterable[int]) -> dict[str, bool]:
    """Independence / clique / connectivity flags of a nonempty subset.

    A singleton counts as independent, clique and connected at once.
    """
    s = vertex_set(subset)
    if not s:
        raise DomainError("empty subset")
    for v in s:
        if not 0 <= v < graph.n:
            raise DomainError(f"vertex {v} not in graph")
    smask = mask_of(s)
    internal = sum((graph.adj_mask[v] & smask).bit_count() for v in s) // 2
    k = len(s)
    connected = len(graph.components_mask(smask)) == 1
    return {
        "independent": internal == 0,
        "clique": internal == k * (k - 1) // 2,
        "connected": connected,
    }


def graph_predicates(graph: Graph) -> dict[str, bool]:
    """Connectivity, bipartiteness (two-coloring BFS) and acyclicity."""
    comps = graph.components_mask(graph.full_mask)
    bipartite = two_coloring(graph) is not None
    acyclic = graph.m == graph.n - len(comps)
    return {
        "connected": len(comps) == 1,
        "bipartite": bipartite,
        "acyclic": acyclic,
    }


def two_coloring(graph: Graph) -> list[int] | None:
    """A proper 2-coloring (colors 0/1), or None if not bipartite."""
    color = [-1] * graph.n
    for start in range(graph.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in graph.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    return color


def require_connected(graph: Graph) -> None:
    if not graph.is_connected():
        raise DisconnectedGraphError("graph is not connected")


# -- parsing / serialization ---------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header "n m", then m lines "u v".

    Lines starting with '#' and blank lines are ignored.  Rejects self-loops,
    duplicate edges, out-of-range ids and an edge count that disagrees with
    the header, each with the offending line number.
    """
    n = None
    m_declared = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise ParseError("expected header 'n m'", lineno)
            try:
                n, m_declared = int(parts[0]), int(parts[1])
            except ValueError:
                raise ParseError("non-integer header", lineno) from None
            if n < 1 or m_declared < 0:
                raise ParseError("header values out of range", lineno)
            continue
        if len(parts) != 2:
            raise ParseError("expected edge line 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("non-integer vertex id", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex id out of range in edge ({u}, {v})", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ParseError(f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise ParseError("empty document", 1)
    if len(edges) != m_declared:
        raise ParseError(
            f"header declares {m_declared} edges but {len(edges)} given",
            lineno if text.splitlines() else 1)
    return Graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS-like input: "p edge n m" then "e u v" with 1-based ids."""
    n = None
    m_declared = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError("expected 'p edge n m'", lineno)
            n, m_declared = int(parts[2]), int(parts[3])
        elif parts[0] == "e":
            if n is None:
                raise ParseError("edge before problem line", lineno)
            if len(parts) != 3:
                raise ParseError("expected 'e u v'", lineno)
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"vertex id out of range in edge line", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u + 1}", lineno)
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ParseError(f"duplicate edge {e}", lineno)
            seen.add(e)
            edges.append(e)
        else:
            raise ParseError(f"unknown record '{parts[0]}'", lineno)
    if n is None:
        raise ParseError("missing problem line", 1)
    if m_declared is not None and len(edges) != m_declared:
        raise ParseError(
            f"problem line declares {m_declared} edges but {len(edges)} given", 1)
    return Graph(n, edges)


def serialize(graph: Graph) -> str:
    """Canonical edge-list document (edges sorted lexicographically)."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.sorted_edges())
    return "\n".join(lines) + "\n"
