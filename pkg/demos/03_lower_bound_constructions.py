"""
Explicit large 1-systems
========================

Compare construction sizes with the known upper bound.
"""

from curvesys import bounds, boundary_system, closed_lower_system, hyperelliptic_system, verify_all

# %% Parallel copies around removed discs
for n in range(4):
    print("g=2 n=%d:" % n, len(boundary_system(2, n)), "curves")

# %% Gluing handles back onto pairs of discs gives a quadratic family on closed surfaces
print(" g  quadratic  linear  lower  upper")
for g in range(4, 11):
    quad = closed_lower_system(g)
    lin = hyperelliptic_system(g)
    t = bounds(g)
    print(f"{g:2d}  {len(quad):9d}  {len(lin):6d}  {t.lower:5d}  {t.upper}")

# %% Every one passes the verifier
print(all(verify_all(closed_lower_system(g)).passed for g in range(4, 11)))
