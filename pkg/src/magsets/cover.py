"""Exact minimum cover-by-pairs engine.

Given a bitmask of targets per unordered vertex pair, find the smallest
vertex set M such that the union of the masks of pairs inside M covers
everything.  Two strategies:

* cardinality sweep -- enumerate all supersets of the forced set of size
  k, k+1, ... with incremental coverage; best when the residual vertex
  count is small (the default regime at desk scale);
* branch-and-bound  -- pick an uncovered target with the smallest
  admissible pair family, branch over its pairs.

Tie-breaking is by lowest vertex index everywhere, so the witness is
reproducible bit-for-bit.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadParamError


@dataclass(frozen=True)
class CoverProblem:
    n: int
    full_mask: int
    pair_masks: dict[tuple[int, int], int]
    forced: frozenset[int] = frozenset()
    lower_bound: int = 0


@dataclass
class CoverSolution:
    size: int
    witness: tuple[int, ...]
    optimal: bool
    nodes: int


class _Budget:
    __slots__ = ("left",)

    def __init__(self, max_nodes: int) -> None:
        if max_nodes <= 0:
            raise BadParamError("node budget must be positive")
        self.left = max_nodes

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


def coverage_of(problem: CoverProblem, vertices: tuple[int, ...] | list[int]) -> int:
    pm = problem.pair_masks
    cov = 0
    vs = sorted(vertices)
    for i, x in enumerate(vs):
        for y in vs[i + 1 :]:
            cov |= pm[(x, y)]
    return cov


def solve_cover_sweep(problem: CoverProblem, max_nodes: int = 10_000_000) -> CoverSolution:
    """Smallest superset of the forced set covering everything."""
    budget = _Budget(max_nodes)
    forced = tuple(sorted(problem.forced))
    free = [v for v in range(problem.n) if v not in problem.forced]
    pm = problem.pair_masks
    base = coverage_of(problem, forced)
    if base == problem.full_mask and len(forced) >= problem.lower_bound:
        return CoverSolution(len(forced), forced, True, 0)
    with_forced = {v: 0 for v in free}
    for v in free:
        acc = 0
        for f in forced:
            acc |= pm[(min(v, f), max(v, f))]
        with_forced[v] = acc

    nodes = 0
    found: list[int] | None = None

    def rec(start: int, chosen: list[int], cov: int, remaining: int) -> bool:
        nonlocal nodes, found
        if remaining == 0:
            nodes += 1
            if not budget.spend():
                raise _BudgetStop
            if cov == problem.full_mask:
                found = list(chosen)
                return True
            return False
        for idx in range(start, len(free) - remaining + 1):
            v = free[idx]
            extra = with_forced[v]
            for c in chosen:
                extra |= pm[(min(v, c), max(v, c))]
            chosen.append(v)
            if rec(idx + 1, chosen, cov | extra, remaining - 1):
                return True
            chosen.pop()
        return False

    start_k = max(problem.lower_bound, len(forced))
    try:
        for k in range(start_k, problem.n + 1):
            if rec(0, [], base, k - len(forced)):
                assert found is not None
                witness = tuple(sorted(forced + tuple(found)))
                return CoverSolution(k, witness, True, nodes)
    except _BudgetStop:
        fallback = tuple(range(problem.n))
        return CoverSolution(problem.n, fallback, False, nodes)
    # full vertex set always covers (callers only pose feasible problems)
    raise AssertionError("sweep exhausted without finding a cover")


class _BudgetStop(Exception):
    pass


def solve_cover_branch_bound(
    problem: CoverProblem,
    max_nodes: int = 10_000_000,
    upper_witness: tuple[int, ...] | None = None,
) -> CoverSolution:
    """Branch over the admissible pairs of a most-constrained uncovered target."""
    budget = _Budget(max_nodes)
    pm = problem.pair_masks
    full = problem.full_mask
    width = full.bit_length()
    # transpose: per target bit, the pairs that can cover it
    target_pairs: list[list[tuple[int, int]]] = [[] for _ in range(width)]
    for key, mask in pm.items():
        mk = mask
        while mk:
            low = mk & -mk
            target_pairs[low.bit_length() - 1].append(key)
            mk ^= low
    for lst in target_pairs:
        lst.sort()

    forced = tuple(sorted(problem.forced))
    if upper_witness is None:
        upper_witness = tuple(range(problem.n))
    best = list(upper_witness)
    best_optimal = True
    nodes = 0

    def rec(chosen: set[int], cov: int) -> None:
        nonlocal best, nodes, best_optimal
        nodes += 1
        if not budget.spend():
            raise _BudgetStop
        if len(chosen) >= len(best):
            return
        if cov == full:
            best = sorted(chosen)
            return
        # most-constrained uncovered target
        pick, pick_pairs = -1, None
        uncovered = full & ~cov
        mk = uncovered
        while mk:
            low = mk & -mk
            t = low.bit_length() - 1
            cand = target_pairs[t]
            if pick_pairs is None or len(cand) < len(pick_pairs):
                pick, pick_pairs = t, cand
            mk ^= low
        assert pick_pairs is not None
        for x, y in pick_pairs:
            add = [v for v in (x, y) if v not in chosen]
            if len(chosen) + len(add) >= len(best):
                continue
            extra = 0
            new = set(chosen)
            for v in add:
                for c in new:
                    extra |= pm[(min(v, c), max(v, c))]
                new.add(v)
            rec(new, cov | extra)

    try:
        rec(set(forced), coverage_of(problem, forced))
    except _BudgetStop:
        best_optimal = False
    return CoverSolution(len(best), tuple(best), best_optimal, nodes)


def solve_cover(
    problem: CoverProblem,
    max_nodes: int = 10_000_000,
    strategy: str = "auto",
    upper_witness: tuple[int, ...] | None = None,
) -> CoverSolution:
    if strategy == "auto":
        strategy = "sweep" if problem.n - len(problem.forced) <= 24 else "bnb"
    if strategy == "sweep":
        return solve_cover_sweep(problem, max_nodes)
    if strategy == "bnb":
        return solve_cover_branch_bound(problem, max_nodes, upper_witness)
    raise BadParamError(f"unknown strategy {strategy!r}")
