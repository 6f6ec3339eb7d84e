"""
Vectors that pairwise pair to one
=================================

Mod 2 homology classes of curves meeting exactly once pair to 1 under the
symplectic form.  How many such vectors fit in (Z/2Z)^{2g}?
"""

import random

from curvesys import canonical_family, find_symplectic_map, max_odd_family, pair
from curvesys.gf2 import random_symplectic

# %% The explicit family for small genus, written as bitstrings a1 b1 a2 b2 ...
for g in (1, 2, 3):
    print(g, " ".join(str(v) for v in canonical_family(g)))

# %% Every pair pairs to 1, and the last vector is the sum of the others.
fam = canonical_family(4)
print(all(pair(u, w) == 1 for i, u in enumerate(fam) for w in fam[i + 1:]))

# %% Exhaustive search says 2g+1 is the most one can do.
for g in (1, 2, 3):
    size, witness = max_odd_family(g, cutoff=False)
    print(f"g={g}: largest family {size}")

# %% Any other such family is the image of the canonical one under a symplectic map.
rng = random.Random(0)
B = random_symplectic(3, rng)
other = [B @ v for v in canonical_family(3)]
A = find_symplectic_map(canonical_family(3), other)
print([str(A @ v) for v in canonical_family(3)] == [str(w) for w in other])
