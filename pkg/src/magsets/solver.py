"""Exact minimum MAG-set computation plus a greedy upper-bound heuristic.

Disconnected inputs are decomposed into weakly connected components,
solved independently, and the witnesses unioned: a pair of vertices in
different components monitors nothing, so the problem is additive.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .cover import CoverProblem, CoverSolution, solve_cover
from .digraph import OrientedGraph
from .monitoring import MonitorMatrix, forced_vertices, monitor_matrix


class Strategy(Enum):
    AUTO = "auto"
    CARDINALITY_SWEEP = "sweep"
    BRANCH_AND_BOUND = "bnb"


@dataclass(frozen=True)
class SolverConfig:
    max_nodes: int = 10_000_000
    strategy: Strategy = Strategy.AUTO
    use_forcing: bool = True


@dataclass(frozen=True)
class MagResult:
    """Certified optimum: size, one witness, the forced seed, and per arc
    one monitoring pair drawn from the witness."""

    size: int
    witness: tuple[int, ...]
    forced: frozenset[int]
    coverage: dict[int, tuple[int, int]]
    optimal: bool
    nodes: int


def greedy_mag_set(g: OrientedGraph, matrix: Optional[MonitorMatrix] = None) -> frozenset[int]:
    """A valid MAG-set: forced seed, then repeatedly the vertex covering the
    most new arcs (ties to the lowest index)."""
    if g.m == 0:
        return frozenset()
    if matrix is None:
        matrix = monitor_matrix(g)
    chosen = sorted(forced_vertices(g).vertices)
    full = (1 << g.m) - 1
    cov = 0
    for i, x in enumerate(chosen):
        for y in chosen[i + 1 :]:
            cov |= matrix.arcs_monitored_by(x, y)
    while cov != full or len(chosen) < 2:
        best_v, best_gain = -1, -1
        for v in range(g.n):
            if v in chosen:
                continue
            gain_mask = 0
            for c in chosen:
                gain_mask |= matrix.arcs_monitored_by(v, c)
            gain = (gain_mask & ~cov).bit_count()
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        chosen.sort()
        for c in chosen:
            if c != best_v:
                cov |= matrix.arcs_monitored_by(best_v, c)
    return frozenset(chosen)


def mag_lower_bound(g: OrientedGraph) -> int:
    """A valid lower bound: 2 when arcs exist, n-1 on complete underlying
    graphs (tournaments), and the forced-set size."""
    if g.m == 0:
        return 0
    bound = 2
    if g.n >= 2 and g.m == g.n * (g.n - 1) // 2:
        bound = max(bound, g.n - 1)
    return max(bound, len(forced_vertices(g).vertices))


def _solve_connected(g: OrientedGraph, cfg: SolverConfig) -> tuple[CoverSolution, frozenset[int]]:
    matrix = monitor_matrix(g)
    forced = forced_vertices(g).vertices if cfg.use_forcing else frozenset()
    pair_masks = {
        (x, y): matrix.arcs_monitored_by(x, y)
        for x in range(g.n)
        for y in range(x + 1, g.n)
    }
    problem = CoverProblem(
        n=g.n,
        full_mask=(1 << g.m) - 1,
        pair_masks=pair_masks,
        forced=forced,
        lower_bound=mag_lower_bound(g) if cfg.use_forcing else 2,
    )
    greedy = tuple(sorted(greedy_mag_set(g, matrix)))
    solution = solve_cover(
        problem, max_nodes=cfg.max_nodes, strategy=cfg.strategy.value, upper_witness=greedy
    )
    if not solution.optimal and len(greedy) < solution.size:
        solution = CoverSolution(len(greedy), greedy, False, solution.nodes)
    return solution, forced


def _coverage_certificate(
    g: OrientedGraph, witness: tuple[int, ...], matrix: MonitorMatrix
) -> dict[int, tuple[int, int]]:
    cert: dict[int, tuple[int, int]] = {}
    members = sorted(witness)
    for a in range(g.m):
        for i, x in enumerate(members):
            done = False
            for y in members[i + 1 :]:
                if matrix.arcs_monitored_by(x, y) >> a & 1:
                    cert[a] = (x, y)
                    done = True
                    break
            if done:
                break
    return cert


def min_mag_set(g: OrientedGraph, cfg: Optional[SolverConfig] = None) -> MagResult:
    """Exact minimum MAG-set with certificate; deterministic for a fixed
    config.  A graph with no arcs has mag 0 and an empty witness."""
    cfg = cfg or SolverConfig()
    if g.m == 0:
        return MagResult(0, (), frozenset(), {}, True, 0)
    comps = g.components()
    if len(comps) == 1:
        solution, forced = _solve_connected(g, cfg)
        cert = _coverage_certificate(g, solution.witness, monitor_matrix(g))
        return MagResult(
            solution.size, solution.witness, forced, cert, solution.optimal, solution.nodes
        )
    # solve per component and merge through the vertex relabeling
    size = 0
    witness: list[int] = []
    forced_all: set[int] = set()
    coverage: dict[int, tuple[int, int]] = {}
    optimal = True
    nodes = 0
    for comp in comps:
        verts = sorted(comp)
        local = {v: i for i, v in enumerate(verts)}
        sub_arcs = [(local[u], local[v]) for u, v in g.arcs if u in comp]
        sub = OrientedGraph(len(verts), tuple(sub_arcs))
        res = min_mag_set(sub, cfg)
        size += res.size
        witness.extend(verts[v] for v in res.witness)
        forced_all.update(verts[v] for v in res.forced)
        for a, (x, y) in res.coverage.items():
            au, av = sub.arcs[a]
            coverage[g.arc_index(verts[au], verts[av])] = (verts[x], verts[y])
        optimal = optimal and res.optimal
        nodes += res.nodes
    return MagResult(size, tuple(sorted(witness)), frozenset(forced_all), coverage, optimal, nodes)
