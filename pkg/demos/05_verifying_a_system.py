"""
Checking a system from a file
=============================

Write a system to JSON, break it by hand and see what the verifier says.
"""

import json
import tempfile
from pathlib import Path

from curvesys import polygon_system, read_system, verify_all, write_system
from curvesys.model import intersection_graph

path = Path(tempfile.mkdtemp()) / "polygon.json"
write_system(polygon_system(2), path)
print(path.read_text())

# %% A clean system passes every check
print(verify_all(read_system(path)).format())

# %% Make two curves meet twice: the k-bound and the parity check both object
doc = json.loads(path.read_text())
doc["intersections"][0][2] = 2
path.write_text(json.dumps(doc))
print(verify_all(read_system(path)).format())

# %% The odd intersection graph in DOT form
print(intersection_graph(polygon_system(2), "odd").to_dot("G_odd"))
