"""The two reductions that make these problems hard, checked end to end.

Both gadget builders come with brute-force verifiers: satisfiability of a
monotone not-all-equal formula matches orientability of its gadget to the
maximum possible value, and a vertex-cover budget matches a MAG-set budget
on a layered acyclic gadget.
"""
from magsets import (
    Nae3SatInstance,
    UndirectedGraph,
    VertexCoverInstance,
    brute_vertex_cover,
    extract_vertex_cover,
    min_mag_set,
    nae3sat_to_graph,
    vc_to_mag_instance,
    verify_nae_reduction,
    verify_vc_reduction,
)

phi = Nae3SatInstance(4, (frozenset({0, 1, 2}), frozenset({1, 2, 3})))
art = nae3sat_to_graph(phi)
print("NAE formula on 4 variables, 2 clauses")
print("  gadget:", art.graph.n, "vertices,", art.graph.m, "edges")
print("  equivalence verified:", verify_nae_reduction(phi))

triangle = UndirectedGraph(3, ((0, 1), (1, 2), (0, 2)))
inst = VertexCoverInstance(triangle, 2)
art = vc_to_mag_instance(inst)
print("\nvertex cover on a triangle, budget 2")
print("  gadget:", art.graph.n, "vertices,", art.graph.m, "arcs, target", art.target)
print("  equivalence verified:", verify_vc_reduction(inst))

res = min_mag_set(art.graph)
cover = extract_vertex_cover(inst, art, res.coverage)
print("  extracted cover:", sorted(cover))
print("  brute-force cover:", sorted(brute_vertex_cover(inst)[1]))
