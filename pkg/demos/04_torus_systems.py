"""
Curves on the torus
===================

A curve is a primitive slope (p, q); two of them meet |p q' - p' q| times.
"""

from curvesys.torus import enumerate_curves, search_torus, to_curve_system
from curvesys import verify_all

curves = enumerate_curves(3)
print(len(curves), "slopes of height at most 3:", " ".join(map(str, curves)))

# %% Largest k-systems among slopes of height at most 10
for k in range(1, 5):
    res = search_torus(k, 10)
    print(f"k={k}: {res.size} curves, e.g. {' '.join(map(str, res.witness))}")

# %% The three-curve system with its mod 2 classes
system = to_curve_system(search_torus(1, 10).witness)
for c in system.curves:
    print(c.id, c.homology)
print(verify_all(system).format())
