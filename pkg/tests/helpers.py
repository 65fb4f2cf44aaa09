"""Seeded random-graph generators and tiny brute-force oracles for tests."""
from __future__ import annotations

import random
from itertools import combinations

from magsets import OrientedGraph, UndirectedGraph, is_mag_set, monitor_matrix


def random_oriented(rng: random.Random, n: int, p: float = 0.5) -> OrientedGraph:
    """Random orientation of G(n, p); may be disconnected."""
    arcs = []
    for i, j in combinations(range(n), 2):
        if rng.random() < p:
            arcs.append((i, j) if rng.random() < 0.5 else (j, i))
    return OrientedGraph(n, tuple(arcs))


def random_connected_oriented(rng: random.Random, n: int, p: float = 0.5) -> OrientedGraph:
    while True:
        g = random_oriented(rng, n, p)
        if n <= 1 or (g.m > 0 and g.is_weakly_connected()):
            return g


def random_tree(rng: random.Random, n: int) -> UndirectedGraph:
    """Uniform-ish random tree: attach each vertex to a random earlier one."""
    edges = tuple((rng.randrange(i), i) for i in range(1, n))
    return UndirectedGraph(n, edges)


def random_connected_undirected(rng: random.Random, n: int, extra: int = 2) -> UndirectedGraph:
    edges = set(random_tree(rng, n).edges)
    candidates = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(candidates)
    edges.update(candidates[:extra])
    return UndirectedGraph(n, tuple(sorted(edges)))


def brute_min_mag(g: OrientedGraph) -> tuple[int, tuple[int, ...]]:
    """Exhaustive minimum MAG-set; only sane for n <= 9 or so."""
    mat = monitor_matrix(g)
    if g.m == 0:
        return 0, ()
    for k in range(2, g.n + 1):
        for combo in combinations(range(g.n), k):
            if is_mag_set(g, combo, mat)[0]:
                return k, combo
    raise AssertionError("full vertex set must always monitor")


def all_oriented_graphs(n: int):
    """Every orientation of every graph on n labelled vertices."""
    slots = list(combinations(range(n), 2))
    for state in _ternary(len(slots)):
        arcs = []
        for (i, j), s in zip(slots, state):
            if s == 1:
                arcs.append((i, j))
            elif s == 2:
                arcs.append((j, i))
        yield OrientedGraph(n, tuple(arcs))


def _ternary(k: int):
    for code in range(3**k):
        digits = []
        for _ in range(k):
            code, r = divmod(code, 3)
            digits.append(r)
        yield digits
