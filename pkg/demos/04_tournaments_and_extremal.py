"""Tournaments live at the very top of the scale.

Every tournament needs all or all-but-one of its vertices; the transitive
one is extremal (only the full vertex set works), while flipping the arcs
around the last vertex drops the answer by exactly one.
"""
from magsets import is_extremal, is_mag_set, min_mag_set
from magsets.families import flipped_tournament, transitive_tournament

for n in (4, 5, 6):
    t = transitive_tournament(n)
    f = flipped_tournament(n)
    print(f"n = {n}")
    print("  transitive:", min_mag_set(t).size, "extremal?", is_extremal(t)[0])
    print("  flipped:   ", min_mag_set(f).size, "extremal?", is_extremal(f)[0])
    assert is_mag_set(f, range(n - 1))[0]
    print(f"  the first {n - 1} vertices of the flipped tournament suffice")

# the extremality test is local: it names a vertex that can be dropped
ok, vertex = is_extremal(flipped_tournament(5))
print("\ndroppable vertex in the flipped tournament on 5:", vertex)
