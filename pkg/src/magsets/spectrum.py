"""Orientation enumeration: spectrum, extremes, and witnesses.

An orientation of an undirected graph is encoded by a bitmask with one bit
per edge index: bit 0 means the arc runs (min, max), bit 1 the reverse.
Reversing every arc preserves mag (monitoring checks both directions), so
the enumeration evaluates only masks with bit 0 clear and mirrors each
result onto the complementary mask.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .digraph import OrientedGraph, UndirectedGraph
from .errors import (
    BudgetExceededError,
    DisconnectedInputError,
    TooManyEdgesError,
    WidthMismatchError,
)
from .monitoring import is_extremal
from .solver import SolverConfig, min_mag_set

DEFAULT_EDGE_CAP = 20


@dataclass(frozen=True)
class SpectrumResult:
    mag_minus: int
    mag_plus: int
    spectrum: frozenset[int]
    gap: int
    witness_min: int
    witness_max: int

    def witness_min_bits(self, m: int) -> str:
        """Bitstring in edge-index order, leftmost = edge 0."""
        return format(self.witness_min, f"0{m}b")[::-1] if m else ""

    def witness_max_bits(self, m: int) -> str:
        return format(self.witness_max, f"0{m}b")[::-1] if m else ""


def orient(G: UndirectedGraph, mask: int) -> OrientedGraph:
    """The orientation encoded by ``mask``; arc indices align with edge
    indices."""
    if not (0 <= mask < 1 << G.m):
        raise WidthMismatchError(f"mask {mask} does not fit {G.m} edge bits")
    arcs = []
    for i, (u, v) in enumerate(G.edges):
        arcs.append((v, u) if mask >> i & 1 else (u, v))
    return OrientedGraph(G.n, tuple(arcs))


def _scan_masks(
    G: UndirectedGraph, lo: int, hi: int, cfg: SolverConfig
) -> dict[int, int]:
    """Evaluate even masks in [lo, hi); map mag value -> smallest attaining
    mask (counting each evaluated mask and its complement)."""
    full = (1 << G.m) - 1
    best: dict[int, int] = {}
    for mask in range(lo, hi):
        if G.m and mask & 1:
            continue
        res = min_mag_set(orient(G, mask), cfg)
        if not res.optimal:
            raise BudgetExceededError("solver budget exhausted during spectrum scan")
        cand = min(mask, full ^ mask)
        if res.size not in best or cand < best[res.size]:
            best[res.size] = cand
    return best


def spectrum(
    G: UndirectedGraph,
    cfg: Optional[SolverConfig] = None,
    max_edges: int = DEFAULT_EDGE_CAP,
    threads: int = 1,
    stop_at_two: bool = False,
    stop_at_n: bool = False,
) -> SpectrumResult:
    """Exact spectrum over all 2^m orientations of a connected graph.

    ``stop_at_two`` / ``stop_at_n`` allow early exit once the trivial
    extreme for mag-minus / mag-plus has been reached (off by default so
    the full spectrum is the canonical output).
    """
    if not G.is_connected():
        raise DisconnectedInputError("spectrum requires a connected graph")
    if G.m > max_edges:
        raise TooManyEdgesError(f"{G.m} edges exceeds the cap of {max_edges}")
    cfg = cfg or SolverConfig()
    total = 1 << G.m
    early = stop_at_two or stop_at_n
    if threads > 1 and not early and G.m >= 6:
        chunk = max(64, total // (threads * 8))
        ranges = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(_scan_masks_star, [(G, lo, hi, cfg) for lo, hi in ranges]))
        best: dict[int, int] = {}
        for part in parts:
            for val, mask in part.items():
                if val not in best or mask < best[val]:
                    best[val] = mask
    elif not early:
        best = _scan_masks(G, 0, total, cfg)
    else:
        full = (1 << G.m) - 1
        best = {}
        for mask in range(total):
            if G.m and mask & 1:
                continue
            res = min_mag_set(orient(G, mask), cfg)
            if not res.optimal:
                raise BudgetExceededError("solver budget exhausted during spectrum scan")
            cand = min(mask, full ^ mask)
            if res.size not in best or cand < best[res.size]:
                best[res.size] = cand
            if stop_at_two and 2 in best:
                break
            if stop_at_n and G.n in best:
                break
    values = frozenset(best)
    mag_minus, mag_plus = min(values), max(values)
    return SpectrumResult(
        mag_minus=mag_minus,
        mag_plus=mag_plus,
        spectrum=values,
        gap=mag_plus - mag_minus,
        witness_min=best[mag_minus],
        witness_max=best[mag_plus],
    )


def _scan_masks_star(args: tuple) -> dict[int, int]:
    return _scan_masks(*args)


def mag_plus_at_least_n(G: UndirectedGraph, max_edges: int = DEFAULT_EDGE_CAP) -> bool:
    """Whether some orientation of connected G is MAG-extremal (mag = n).

    Bipartite graphs with an edge short-circuit to True: orienting every
    edge from one part to the other makes all vertices sources or sinks.
    Otherwise orientations are enumerated with an extremal test and early
    exit on the first success.
    """
    if not G.is_connected():
        raise DisconnectedInputError("requires a connected graph")
    if G.m == 0:
        # a lone vertex has mag 0 != 1
        return G.n == 0
    if G.bipartition() is not None:
        return True
    if G.m > max_edges:
        raise TooManyEdgesError(f"{G.m} edges exceeds the cap of {max_edges}")
    for mask in range(1 << G.m):
        if mask & 1:
            continue  # reversal symmetry: is_extremal is reversal-invariant
        if is_extremal(orient(G, mask))[0]:
            return True
    return False
