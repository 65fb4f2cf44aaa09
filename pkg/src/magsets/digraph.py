"""Core graph representations and shortest-path machinery.

Vertices are dense integers ``0..n-1``.  Both graph types are immutable
after construction; all queries are pure and safe to share across
concurrent readers.  Distances are unweighted hop counts computed by BFS,
with unreachability encoded by the :data:`UNREACHABLE` sentinel (which
compares greater than every finite distance and saturates under addition).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .errors import (
    DuplicatePairError,
    OutOfRangeError,
    SelfLoopError,
)

UNREACHABLE = float("inf")


def _check_vertex(v: int, n: int) -> None:
    if not (0 <= v < n):
        raise OutOfRangeError(f"vertex {v} out of range [0, {n})")


def _bfs(adj: Sequence[Sequence[int]], source: int) -> list[float]:
    """Single-source hop distances over an adjacency list."""
    dist: list[float] = [UNREACHABLE] * len(adj)
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        for w in adj[u]:
            if dist[w] is UNREACHABLE:
                dist[w] = du + 1
                queue.append(w)
    return dist


def _arc_sort_key(arc: tuple[int, int]) -> tuple[int, int, int]:
    # Canonical order: lexicographic by unordered pair, forward before
    # backward, so arc indices line up with edge indices after orienting.
    u, v = arc
    return (min(u, v), max(u, v), 0 if u < v else 1)


@dataclass(frozen=True)
class OrientedGraph:
    """A simple digraph with at most one arc per unordered vertex pair.

    ``arcs`` is stored in canonical sorted order with stable indices
    ``0..m-1``.  Use :func:`build_oriented` to construct with validation.
    """

    n: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        seen_pairs = set()
        for u, v in self.arcs:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            pair = (min(u, v), max(u, v))
            if pair in seen_pairs:
                raise DuplicatePairError(f"both directions (or duplicates) of pair {pair}")
            seen_pairs.add(pair)
        object.__setattr__(self, "arcs", tuple(sorted(self.arcs, key=_arc_sort_key)))

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def _arc_index(self) -> dict[tuple[int, int], int]:
        return {arc: i for i, arc in enumerate(self.arcs)}

    def arc_index(self, u: int, v: int) -> int:
        """Index of arc (u, v) in the canonical ordering."""
        try:
            return self._arc_index[(u, v)]
        except KeyError:
            raise OutOfRangeError(f"no arc ({u}, {v})") from None

    @cached_property
    def out_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def in_neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _dist(self) -> tuple[tuple[float, ...], ...]:
        return tuple(tuple(_bfs(self.out_neighbors, s)) for s in range(self.n))

    def distance(self, x: int, y: int) -> float:
        """Hop count of a shortest directed x->y path, or UNREACHABLE."""
        _check_vertex(x, self.n)
        _check_vertex(y, self.n)
        return self._dist[x][y]

    def distance_avoiding_arc(self, x: int, y: int, a: int) -> float:
        """Shortest x->y distance in the graph with arc ``a`` removed."""
        _check_vertex(x, self.n)
        _check_vertex(y, self.n)
        if not (0 <= a < self.m):
            raise OutOfRangeError(f"arc index {a} out of range [0, {self.m})")
        au, av = self.arcs[a]
        adj = [list(ns) for ns in self.out_neighbors]
        adj[au].remove(av)
        return _bfs(adj, x)[y]

    def distances_from_avoiding_arc(self, x: int, a: int) -> list[float]:
        """All distances from ``x`` with arc ``a`` removed (one BFS)."""
        _check_vertex(x, self.n)
        if not (0 <= a < self.m):
            raise OutOfRangeError(f"arc index {a} out of range [0, {self.m})")
        au, av = self.arcs[a]
        adj = [list(ns) for ns in self.out_neighbors]
        adj[au].remove(av)
        return _bfs(adj, x)

    def sources_and_sinks(self) -> tuple[frozenset[int], frozenset[int]]:
        """({u : no in-arcs}, {u : no out-arcs}); isolated vertices are both."""
        sources = frozenset(u for u in range(self.n) if not self.in_neighbors[u])
        sinks = frozenset(u for u in range(self.n) if not self.out_neighbors[u])
        return sources, sinks

    def components(self) -> list[frozenset[int]]:
        """Weakly connected components, each sorted by least vertex."""
        return _components(self.n, [(u, v) for u, v in self.arcs])

    def is_weakly_connected(self) -> bool:
        return len(self.components()) <= 1

    def underlying(self) -> "UndirectedGraph":
        """Forget arc directions."""
        return UndirectedGraph(self.n, tuple((min(u, v), max(u, v)) for u, v in self.arcs))

    def reverse(self) -> "OrientedGraph":
        """The graph with every arc flipped."""
        return OrientedGraph(self.n, tuple((v, u) for u, v in self.arcs))

    def shortest_path_counts(self, x: int) -> list[int]:
        """Number of shortest directed paths from x to every vertex."""
        _check_vertex(x, self.n)
        dist = self._dist[x]
        sigma = [0] * self.n
        sigma[x] = 1
        for v in sorted((v for v in range(self.n) if dist[v] is not UNREACHABLE), key=lambda v: dist[v]):
            if v == x:
                continue
            sigma[v] = sum(sigma[u] for u in self.in_neighbors[v] if dist[u] + 1 == dist[v])
        return sigma


def build_oriented(n: int, arcs: Sequence[tuple[int, int]]) -> OrientedGraph:
    """Validate and canonicalize an oriented graph from an arc list."""
    if n < 0:
        raise OutOfRangeError("vertex count must be non-negative")
    return OrientedGraph(n, tuple(arcs))


@dataclass(frozen=True)
class UndirectedGraph:
    """A simple undirected graph with canonically ordered edges."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        canon = []
        seen = set()
        for u, v in self.edges:
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            e = (min(u, v), max(u, v))
            if e in seen:
                raise DuplicatePairError(f"duplicate edge {e}")
            seen.add(e)
            canon.append(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def _edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def edge_index(self, u: int, v: int) -> int:
        try:
            return self._edge_index[(min(u, v), max(u, v))]
        except KeyError:
            raise OutOfRangeError(f"no edge {{{u}, {v}}}") from None

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(a) for a in adj)

    def degree(self, v: int) -> int:
        _check_vertex(v, self.n)
        return len(self.neighbors[v])

    @cached_property
    def _dist(self) -> tuple[tuple[float, ...], ...]:
        return tuple(tuple(_bfs(self.neighbors, s)) for s in range(self.n))

    def distance(self, x: int, y: int) -> float:
        _check_vertex(x, self.n)
        _check_vertex(y, self.n)
        return self._dist[x][y]

    def distances_from_avoiding_edge(self, x: int, e: int) -> list[float]:
        _check_vertex(x, self.n)
        if not (0 <= e < self.m):
            raise OutOfRangeError(f"edge index {e} out of range [0, {self.m})")
        u, v = self.edges[e]
        adj = [list(ns) for ns in self.neighbors]
        adj[u].remove(v)
        adj[v].remove(u)
        return _bfs(adj, x)

    def components(self) -> list[frozenset[int]]:
        return _components(self.n, list(self.edges))

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def bipartition(self) -> Optional[tuple[frozenset[int], frozenset[int]]]:
        """A 2-coloring (A, B) with every edge crossing, or None.

        Vertices of color 0 in each component (by least vertex) go to A,
        so the result is deterministic.
        """
        color = [-1] * self.n
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.neighbors[u]:
                    if color[w] == -1:
                        color[w] = 1 - color[u]
                        queue.append(w)
                    elif color[w] == color[u]:
                        return None
        a = frozenset(v for v in range(self.n) if color[v] == 0)
        b = frozenset(v for v in range(self.n) if color[v] == 1)
        return a, b


def _components(n: int, links: list[tuple[int, int]]) -> list[frozenset[int]]:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in links:
        adj[u].append(v)
        adj[v].append(u)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        comp = []
        queue = deque([s])
        seen[s] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def find_shortest_cycle(g: UndirectedGraph) -> Optional[list[int]]:
    """One chordless cycle of length equal to the girth, or None if acyclic.

    For every root we run a BFS and inspect non-tree edges; a non-tree edge
    (x, y) whose root paths meet only at the root closes a cycle of length
    dist(x) + dist(y) + 1.  The minimum over all roots is the girth, and a
    shortest cycle can have no chord.
    """
    best: Optional[list[int]] = None
    for root in range(g.n):
        dist = [-1] * g.n
        parent = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        tree_edges = set()
        order = []
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.neighbors[u]:
                if dist[w] == -1:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    tree_edges.add((min(u, w), max(u, w)))
                    queue.append(w)
        for u, v in g.edges:
            if dist[u] == -1 or dist[v] == -1:
                continue
            if (u, v) in tree_edges:
                continue
            length = dist[u] + dist[v] + 1
            if best is not None and length >= len(best):
                continue
            path_u = _root_path(parent, u)
            path_v = _root_path(parent, v)
            if set(path_u) & set(path_v) != {root}:
                continue  # paths overlap; a better root certifies this length
            cycle = path_u[::-1] + path_v[1:]
            if len(cycle) == length:
                best = cycle
    return best


def _root_path(parent: list[int], v: int) -> list[int]:
    """Path root..v as a list ending at v (root first)."""
    path = [v]
    while parent[path[-1]] != -1:
        path.append(parent[path[-1]])
    return path[::-1]
