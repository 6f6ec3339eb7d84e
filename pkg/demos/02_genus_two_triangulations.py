"""
Genus two through its hyperelliptic quotient
============================================

Curves through pairs of the six Weierstrass points become edges of a planar
graph, so the biggest 1-systems come from 6-vertex triangulations.
"""

from curvesys import verify_all
from curvesys.quotient import enumerate_max_systems_genus2, graph_to_system, homology_map

res = enumerate_max_systems_genus2()
print("most edges:", res.max_edges)
print("labelled maxima:", res.labeled_count)
for graph in res.iso_classes:
    print(graph.degree_sequence(), graph.edge_list())

# %% Lift each maximum back to curves and check it.
for graph in res.iso_classes:
    system = graph_to_system(graph)
    print(len(system), "curves,", "valid" if verify_all(system).passed else "INVALID")

# %% The class of the curve over edge {1, 2}
phi = homology_map(2)
print(phi.of_edge((1, 2)), phi.of_edge((2, 3)))
