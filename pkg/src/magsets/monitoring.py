"""The monitoring relation, forced-vertex rules, and the extremal test.

A pair {x, y} monitors arc a when a lies on every shortest directed path
x->y or on every shortest directed path y->x.  The canonical test is arc
deletion plus a BFS re-run: a lies on all shortest x->y paths exactly when
removing it strictly increases d(x, y).  An optional path-counting test
(`monitors_directed_by_counting`) is kept as an independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .digraph import UNREACHABLE, OrientedGraph, UndirectedGraph
from .errors import DisconnectedInputError, EqualVerticesError, OutOfRangeError


def pair_key(x: int, y: int) -> tuple[int, int]:
    """Canonical form of the unordered pair {x, y}."""
    if x == y:
        raise EqualVerticesError(f"pair needs two distinct vertices, got {x} twice")
    return (x, y) if x < y else (y, x)


def monitors_directed(g: OrientedGraph, x: int, y: int, a: int) -> bool:
    """True iff arc ``a`` lies on every shortest directed x->y path."""
    if x == y:
        raise EqualVerticesError("x and y must be distinct")
    d = g.distance(x, y)
    if d is UNREACHABLE:
        return False
    return g.distance_avoiding_arc(x, y, a) > d


def monitors_directed_by_counting(g: OrientedGraph, x: int, y: int, a: int) -> bool:
    """Independent test: a=(u,v) is on all shortest x->y paths iff
    d(x,u) + 1 + d(v,y) = d(x,y) and sigma(x,u) * sigma(v,y) = sigma(x,y)."""
    if x == y:
        raise EqualVerticesError("x and y must be distinct")
    if not (0 <= a < g.m):
        raise OutOfRangeError(f"arc index {a} out of range")
    u, v = g.arcs[a]
    d = g.distance(x, y)
    if d is UNREACHABLE:
        return False
    if g.distance(x, u) + 1 + g.distance(v, y) != d:
        return False
    sx = g.shortest_path_counts(x)
    sv = g.shortest_path_counts(v)
    return sx[u] * sv[y] == sx[y]


def pair_monitors(g: OrientedGraph, x: int, y: int, a: int) -> bool:
    """True iff {x, y} monitors arc ``a`` in either direction."""
    return monitors_directed(g, x, y, a) or monitors_directed(g, y, x, a)


@dataclass(frozen=True)
class MonitorMatrix:
    """Tabulation of the monitoring relation over all pairs and arcs.

    ``pair_arcs[i]`` is a bitmask over arc indices monitored by the i-th
    pair in lexicographic order; ``arc_pairs[a]`` is the transposed view.
    """

    n: int
    m: int
    pairs: tuple[tuple[int, int], ...]
    pair_arcs: tuple[int, ...]
    arc_pairs: tuple[frozenset[tuple[int, int]], ...]

    def pair_index(self, x: int, y: int) -> int:
        x, y = pair_key(x, y)
        # lexicographic pair rank within 0..C(n,2)-1
        return x * self.n - x * (x + 1) // 2 + (y - x - 1)

    def arcs_monitored_by(self, x: int, y: int) -> int:
        return self.pair_arcs[self.pair_index(x, y)]


def monitor_matrix(g: OrientedGraph) -> MonitorMatrix:
    """Build the complete monitoring matrix by the deletion test.

    One BFS per (arc, source) pair: for each arc we recompute all-pairs
    distances in the graph minus that arc and compare with the base table.
    """
    n, m = g.n, g.m
    pairs = tuple((x, y) for x in range(n) for y in range(x + 1, n))
    pair_arcs = [0] * len(pairs)
    arc_pairs: list[set[tuple[int, int]]] = [set() for _ in range(m)]
    base = [[g.distance(x, y) for y in range(n)] for x in range(n)]
    for a in range(m):
        for x in range(n):
            row = base[x]
            if all(row[y] is UNREACHABLE for y in range(n) if y != x):
                continue
            avoid = g.distances_from_avoiding_arc(x, a)
            for y in range(n):
                if y == x or row[y] is UNREACHABLE:
                    continue
                if avoid[y] > row[y]:
                    key = pair_key(x, y)
                    arc_pairs[a].add(key)
    mm = MonitorMatrix(n, m, pairs, tuple(pair_arcs), tuple(frozenset(s) for s in arc_pairs))
    # fill the transpose
    pa = list(pair_arcs)
    for a, pset in enumerate(arc_pairs):
        for key in pset:
            pa[mm.pair_index(*key)] |= 1 << a
    object.__setattr__(mm, "pair_arcs", tuple(pa))
    return mm


def is_mag_set(
    g: OrientedGraph,
    vertices: set[int] | frozenset[int],
    matrix: Optional[MonitorMatrix] = None,
) -> tuple[bool, frozenset[int]]:
    """Whether every arc is monitored by some pair within ``vertices``.

    Returns (ok, uncovered arc indices); uncovered is empty on success.
    """
    for v in vertices:
        if not (0 <= v < g.n):
            raise OutOfRangeError(f"vertex {v} out of range")
    if matrix is None:
        matrix = monitor_matrix(g)
    covered = 0
    members = sorted(vertices)
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            covered |= matrix.arcs_monitored_by(x, y)
    full = (1 << g.m) - 1
    uncovered = frozenset(a for a in range(g.m) if not covered >> a & 1)
    return covered == full, uncovered


class ForcedRule(Enum):
    SOURCE = "source"
    SINK = "sink"
    TWIN = "twin"
    COND_II = "cond_ii"
    COND_III = "cond_iii"


@dataclass(frozen=True)
class ForcedReport:
    """Vertices provably in every MAG-set, each with its rule and witness.

    Witness data: the twin partner for TWIN, the in-neighbor u for COND_II,
    the out-neighbor w for COND_III, None for SOURCE/SINK.
    """

    vertices: frozenset[int]
    reasons: dict[int, tuple[ForcedRule, Optional[int]]]


def _cond_ii_witness(g: OrientedGraph, v: int) -> Optional[int]:
    """An in-neighbor u of v reaching every out-neighbor of v in <= 2 steps
    without passing through v, if one exists."""
    outs = g.out_neighbors[v]
    out_set = {(u, w) for u, w in g.arcs}
    for u in g.in_neighbors[v]:
        ok = True
        for w in outs:
            if (u, w) in out_set:
                continue
            if any(z != v and z != w and (z, w) in out_set for z in g.out_neighbors[u]):
                continue
            ok = False
            break
        if ok:
            return u
    return None


def _cond_iii_witness(g: OrientedGraph, v: int) -> Optional[int]:
    """Mirror of the condition above: an out-neighbor w reachable from every
    in-neighbor of v in <= 2 steps avoiding v."""
    out_set = {(u, w) for u, w in g.arcs}
    for w in g.out_neighbors[v]:
        ok = True
        for u in g.in_neighbors[v]:
            if (u, w) in out_set:
                continue
            if any(z != v and z != w and (z, w) in out_set for z in g.out_neighbors[u]):
                continue
            ok = False
            break
        if ok:
            return w
    return None


def forced_vertices(g: OrientedGraph) -> ForcedReport:
    """Union of the forcing rules: sources/sinks, twins, and the two
    extremal-characterization conditions for internal vertices."""
    reasons: dict[int, tuple[ForcedRule, Optional[int]]] = {}
    sources, sinks = g.sources_and_sinks()
    for v in sources:
        reasons[v] = (ForcedRule.SOURCE, None)
    for v in sinks:
        reasons.setdefault(v, (ForcedRule.SINK, None))
    nbhd = [(frozenset(g.in_neighbors[v]), frozenset(g.out_neighbors[v])) for v in range(g.n)]
    for v in range(g.n):
        if v in reasons:
            continue
        for u in range(g.n):
            if u != v and nbhd[u] == nbhd[v]:
                reasons[v] = (ForcedRule.TWIN, u)
                break
    for v in range(g.n):
        if v in reasons:
            continue
        u = _cond_ii_witness(g, v)
        if u is not None:
            reasons[v] = (ForcedRule.COND_II, u)
            continue
        w = _cond_iii_witness(g, v)
        if w is not None:
            reasons[v] = (ForcedRule.COND_III, w)
    return ForcedReport(frozenset(reasons), reasons)


def is_extremal(g: OrientedGraph) -> tuple[bool, Optional[int]]:
    """Whether every vertex is a source/sink or satisfies one of the two
    bypass conditions, i.e. the only MAG-set is all of V.

    Returns (True, None) or (False, violating vertex with least index).
    """
    if not g.is_weakly_connected():
        raise DisconnectedInputError("extremal test requires a weakly connected graph")
    sources, sinks = g.sources_and_sinks()
    for v in range(g.n):
        if v in sources or v in sinks:
            continue
        if _cond_ii_witness(g, v) is not None:
            continue
        if _cond_iii_witness(g, v) is not None:
            continue
        return False, v
    return True, None


# ---------------------------------------------------------------------------
# Undirected analogue (MEG)


def edge_monitors_undirected(G: UndirectedGraph, x: int, y: int, e: int) -> bool:
    """True iff edge ``e`` lies on all shortest undirected x-y paths."""
    if x == y:
        raise EqualVerticesError("x and y must be distinct")
    if not (0 <= e < G.m):
        raise OutOfRangeError(f"edge index {e} out of range")
    d = G.distance(x, y)
    if d is UNREACHABLE:
        return False
    return G.distances_from_avoiding_edge(x, e)[y] > d


def undirected_monitor_pair_masks(G: UndirectedGraph) -> dict[tuple[int, int], int]:
    """Per unordered pair, the bitmask of edges it monitors."""
    masks: dict[tuple[int, int], int] = {
        (x, y): 0 for x in range(G.n) for y in range(x + 1, G.n)
    }
    base = [[G.distance(x, y) for y in range(G.n)] for x in range(G.n)]
    for e in range(G.m):
        for x in range(G.n):
            avoid = G.distances_from_avoiding_edge(x, e)
            for y in range(x + 1, G.n):
                if base[x][y] is not UNREACHABLE and avoid[y] > base[x][y]:
                    masks[(x, y)] |= 1 << e
    return masks


def min_meg_set(G: UndirectedGraph, max_nodes: int = 10_000_000) -> tuple[int, frozenset[int]]:
    """Exact minimum monitoring edge-geodetic set of a connected graph.

    The search is seeded with all degree-1 vertices, which belong to every
    MEG-set; otherwise it reuses the same pair-cover sweep as the oriented
    solver.
    """
    from .cover import CoverProblem, solve_cover

    if not G.is_connected():
        raise DisconnectedInputError("MEG solver requires a connected graph")
    if G.m == 0:
        return 0, frozenset()
    masks = undirected_monitor_pair_masks(G)
    forced = frozenset(v for v in range(G.n) if G.degree(v) == 1)
    problem = CoverProblem(
        n=G.n,
        full_mask=(1 << G.m) - 1,
        pair_masks=masks,
        forced=forced,
        lower_bound=max(2, len(forced)),
    )
    solution = solve_cover(problem, max_nodes=max_nodes)
    return solution.size, frozenset(solution.witness)
