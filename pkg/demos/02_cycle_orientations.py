"""The four ways to orient a cycle, and their exact minimums.

Orienting a cycle leaves few degrees of freedom: it is either a directed
cycle (no sources at all) or an alternating sequence of sources and sinks.
Each shape has a closed-form answer, reproduced here by the exact solver.
"""
from magsets import min_mag_set
from magsets.families import cycle_c0, cycle_c1, cycle_c2, cycle_c3

for n in (6, 8):
    print(f"n = {n}")
    print("  directed cycle           ->", min_mag_set(cycle_c0(n)).size, "(always 2)")
    print("  antipodal source/sink    ->", min_mag_set(cycle_c1(n)).size, "(always 4)")
    print("  off-center source/sink   ->", min_mag_set(cycle_c2(n, 2)).size, "(always 3)")
    g = cycle_c3(n, [0, n // 2])
    sources, sinks = g.sources_and_sinks()
    print(
        "  two sources, two sinks   ->",
        min_mag_set(g).size,
        f"(= {len(sources)} sources + {len(sinks)} sinks)",
    )
