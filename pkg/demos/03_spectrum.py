"""Sweeping every orientation of a small graph.

The spectrum of an undirected graph collects the exact minimum over each of
its 2^m orientations.  The gap between the best and worst orientation can
be made arbitrarily large; even a cycle shows a healthy spread.
"""
from magsets import UndirectedGraph, orient, min_mag_set, spectrum

for n in (5, 6, 7, 8):
    C = UndirectedGraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    sp = spectrum(C)
    print(
        f"C_{n}: spectrum {sorted(sp.spectrum)}, "
        f"min {sp.mag_minus}, max {sp.mag_plus}, gap {sp.gap}"
    )
    best = orient(C, sp.witness_min)
    print(f"  best orientation {best.arcs} -> {min_mag_set(best).size}")
