import math
import random

import pytest

from magsets import (
    DuplicatePairError,
    OrientedGraph,
    OutOfRangeError,
    SelfLoopError,
    UndirectedGraph,
    UNREACHABLE,
    build_oriented,
    find_shortest_cycle,
)
from magsets.families import cycle_c0, directed_path

from helpers import random_connected_oriented, random_connected_undirected


def test_validation_rejects_bad_arcs():
    with pytest.raises(SelfLoopError):
        OrientedGraph(3, ((1, 1),))
    with pytest.raises(DuplicatePairError):
        OrientedGraph(3, ((0, 1), (1, 0)))
    with pytest.raises(DuplicatePairError):
        OrientedGraph(3, ((0, 1), (0, 1)))
    with pytest.raises(OutOfRangeError):
        OrientedGraph(3, ((0, 3),))


def test_arcs_are_canonically_ordered():
    g = build_oriented(4, [(3, 2), (0, 1), (2, 0)])
    assert g.arcs == ((0, 1), (2, 0), (3, 2))
    # reversing a direction keeps the arc's position in the order
    h = build_oriented(4, [(2, 3), (1, 0), (0, 2)])
    assert h.arcs == ((1, 0), (0, 2), (2, 3))


def test_distances_on_directed_path():
    g = directed_path(5)
    assert g.distance(0, 4) == 4
    assert g.distance(4, 0) == UNREACHABLE
    assert UNREACHABLE > 10**9  # saturating sentinel


def test_distance_avoiding_arc_on_cycle():
    g = cycle_c0(5)
    assert g.distance(0, 3) == 3
    # removing the arc 2->3 forces the long way round, which does not exist
    a = g.arc_index(2, 3)
    assert g.distance_avoiding_arc(0, 3, a) == UNREACHABLE
    assert g.distance_avoiding_arc(0, 2, a) == 2


def test_distances_from_avoiding_arc_matches_pointwise():
    rng = random.Random(7)
    for _ in range(20):
        g = random_connected_oriented(rng, 6)
        for a in range(min(3, g.m)):
            row = g.distances_from_avoiding_arc(2 % g.n, a)
            for v in range(g.n):
                assert row[v] == g.distance_avoiding_arc(2 % g.n, v, a)


def test_sources_and_sinks():
    g = directed_path(4)
    sources, sinks = g.sources_and_sinks()
    assert sources == frozenset({0}) and sinks == frozenset({3})
    c = cycle_c0(4)
    assert c.sources_and_sinks() == (frozenset(), frozenset())


def test_components_and_reverse():
    g = build_oriented(5, [(0, 1), (2, 3)])
    comps = g.components()
    assert sorted(map(sorted, comps)) == [[0, 1], [2, 3], [4]]
    assert not g.is_weakly_connected()
    r = g.reverse()
    assert set(r.arcs) == {(1, 0), (3, 2)}
    assert r.reverse().arcs == g.arcs


def test_underlying_and_bipartition():
    g = cycle_c0(6)
    G = g.underlying()
    parts = G.bipartition()
    assert parts is not None
    a, b = parts
    assert a | b == frozenset(range(6)) and not (a & b)
    assert UndirectedGraph(3, ((0, 1), (1, 2), (0, 2))).bipartition() is None


def test_shortest_path_counts():
    # two parallel length-2 routes from 0 to 3
    g = build_oriented(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    sigma = g.shortest_path_counts(0)
    assert sigma[3] == 2 and sigma[1] == sigma[2] == 1


def test_find_shortest_cycle():
    assert find_shortest_cycle(UndirectedGraph(4, ((0, 1), (1, 2), (2, 3)))) is None
    cyc = find_shortest_cycle(UndirectedGraph(5, ((0, 1), (1, 2), (2, 0), (2, 3), (3, 4))))
    assert cyc is not None and len(cyc) == 3 and set(cyc) == {0, 1, 2}
    rng = random.Random(11)
    for _ in range(20):
        G = random_connected_undirected(rng, 8, extra=3)
        cyc = find_shortest_cycle(G)
        if cyc is None:
            assert G.m == G.n - 1
            continue
        edge_set = {frozenset(e) for e in G.edges}
        for i, v in enumerate(cyc):
            assert frozenset((v, cyc[(i + 1) % len(cyc)])) in edge_set
        assert len(set(cyc)) == len(cyc) >= 3


def test_unreachable_is_infinite():
    assert math.isinf(UNREACHABLE)
