"""Explicit lower-bound 1-systems with intersection counts and homology classes.

* ``polygon_system``: ``2g+1`` curves pairwise meeting once at one point.
* ``boundary_system``: the all-intersecting family ``Y`` plus ``n`` rounds of
  parallel copies, one round per removed disc.
* ``closed_lower_system``: ``boundary_system(m, 2n)`` with handles glued
  onto pairs of boundary circles, plus one meridian per handle.
* ``hyperelliptic_system``: lift of a stacked triangulation on ``2g+2``
  Weierstrass points.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import PreconditionError
from .gf2 import Gf2Vector, canonical_family
from .model import Curve, CurveSystem
from .quotient import graph_to_system, stacked_triangulation


@dataclass(frozen=True)
class GenerationTag:
    """Which member of the special family ``Y`` a curve copies, and in which round."""

    base: str
    generation: int

    def __str__(self):
        return f"base={self.base} generation={self.generation}"

    @classmethod
    def parse(cls, provenance: str) -> "GenerationTag":
        m = re.search(r"base=(\S+) generation=(\d+)", provenance)
        if not m:
            raise ValueError(f"no generation tag in {provenance!r}")
        return cls(m.group(1), int(m.group(2)))


def _require_genus(g, least):
    if not isinstance(g, int) or g < least:
        raise PreconditionError(f"genus must be an integer >= {least}, got {g!r}")


def _width(count: int) -> int:
    return max(2, len(str(count)))


def polygon_system(g: int) -> CurveSystem:
    """``2g+1`` curves from the ``4g``-gon: arcs across opposite sides plus a diagonal.

    All pairs meet exactly once.  Classes are the canonical family, which
    any valid class assignment is symplectically equivalent to.
    """
    _require_genus(g, 1)
    fam = canonical_family(g)
    w = _width(len(fam))
    curves = [Curve(f"v{i + 1:0{w}d}", v, f"polygon g={g} member={i + 1}") for i, v in enumerate(fam)]
    counts = {(a.id, b.id): 1 for i, a in enumerate(curves) for b in curves[i + 1:]}
    return CurveSystem(g, 0, 1, tuple(curves), counts)


def _duplicated(num_bases, generations):
    """Curves ``(alpha, t)`` and their counts: 1 across bases, 0 along a base."""
    wb, wt = _width(num_bases), _width(max(generations, default=0))
    ids = {}
    for alpha in range(1, num_bases + 1):
        for t in generations:
            ids[alpha, t] = f"y{alpha:0{wb}d}t{t:0{wt}d}"
    counts = {}
    keys = list(ids)
    for i, (alpha, s) in enumerate(keys):
        for beta, t in keys[i + 1:]:
            if alpha != beta:
                counts[(ids[alpha, s], ids[beta, t])] = 1
    base_ids = {alpha: f"y{alpha:0{wb}d}" for alpha in range(1, num_bases + 1)}
    return ids, base_ids, counts


def boundary_system(g: int, n: int) -> CurveSystem:
    """A 1-system on the genus-g surface with ``n`` boundary components.

    For ``g >= 2`` the family ``Y`` of ``2g+1`` curves through one point is
    kept and every removed disc adds a parallel copy of each member, giving
    ``(2g+1)(n+1)`` curves.  For ``g = 1`` the originals would become
    isotopic to their copies, so only the ``3n`` copies are used.
    """
    _require_genus(g, 1)
    if not isinstance(n, int) or n < 0:
        raise PreconditionError(f"boundary count must be >= 0, got {n!r}")
    if g == 1 and n == 0:
        raise PreconditionError("the closed torus case is polygon_system(1)")
    generations = range(0, n + 1) if g >= 2 else range(1, n + 1)
    ids, base_ids, counts = _duplicated(2 * g + 1, generations)
    # with no discs removed the surface is closed and the family is the polygon one
    fam = canonical_family(g) if n == 0 else None
    curves = [
        Curve(cid, fam and fam[alpha - 1], f"boundary g={g} n={n} {GenerationTag(base_ids[alpha], t)}")
        for (alpha, t), cid in ids.items()
    ]
    return CurveSystem(g, n, 1, tuple(curves), counts)


def closed_lower_split(g: int) -> tuple[int, int]:
    """``(m, n)`` with ``m = floor(g/2)`` and ``n = g - m``."""
    m = g // 2
    return m, g - m


def closed_lower_size(g: int) -> int:
    m, n = closed_lower_split(g)
    return (2 * m + 1) * (2 * n + 1) + n


def closed_lower_system(g: int) -> CurveSystem:
    """Quadratic-size 1-system on the closed genus-g surface, ``g >= 4``.

    Round ``t`` of copies lives around the ``t``-th removed disc, and discs
    ``2j-1, 2j`` are capped by handle ``j``.  A copy and its original
    cobound an annulus containing that disc, so their classes differ by the
    handle meridian class ``a_{m+j}``.
    """
    if not isinstance(g, int) or g < 4:
        raise PreconditionError(f"closed_lower_system needs g >= 4 (use hyperelliptic_system for g = 2, 3), got {g!r}")
    m, n = closed_lower_split(g)
    ids, base_ids, counts = _duplicated(2 * m + 1, range(0, 2 * n + 1))
    fam = [v.embed(g) for v in canonical_family(m)]
    meridian = {j: Gf2Vector.unit(g, 2 * (m + j - 1)) for j in range(1, n + 1)}

    curves = []
    for (alpha, t), cid in ids.items():
        cls = fam[alpha - 1]
        handle = (t + 1) // 2
        if t:
            cls = cls + meridian[handle]
        where = f" handle={handle}" if t else ""
        curves.append(Curve(cid, cls, f"closed-lower g={g} m={m} n={n} {GenerationTag(base_ids[alpha], t)}{where}"))
    wh = _width(n)
    for j in range(1, n + 1):
        curves.append(Curve(f"h{j:0{wh}d}", meridian[j], f"closed-lower g={g} m={m} n={n} meridian handle={j}"))
    return CurveSystem(g, 0, 1, tuple(curves), counts)


def hyperelliptic_system(g: int) -> CurveSystem:
    """``6g`` curves: the lift of a stacked triangulation on ``2g+2`` points."""
    _require_genus(g, 2)
    return graph_to_system(stacked_triangulation(2 * g + 2), g)
