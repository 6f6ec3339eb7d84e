"""Curves on the torus as primitive slopes, and exact k-system search.

An essential simple closed curve on the torus is determined up to isotopy
by a primitive vector ``(p, q)`` up to sign, and two such curves meet
``|p1 q2 - p2 q1|`` times in minimal position.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import PreconditionError
from .gf2 import Gf2Vector
from .model import Curve, CurveSystem
from .search import max_clique


@dataclass(frozen=True, order=True)
class TorusCurve:
    """A primitive slope, normalized to ``p > 0`` or ``(p, q) = (0, 1)``."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if math.gcd(p, q) != 1:
            raise PreconditionError(f"({p}, {q}) is not a primitive vector")
        if p < 0 or (p == 0 and q < 0):
            object.__setattr__(self, "p", -p)
            object.__setattr__(self, "q", -q)

    @property
    def height(self) -> int:
        return max(abs(self.p), abs(self.q))

    @property
    def homology(self) -> Gf2Vector:
        return Gf2Vector.from_coords((self.p % 2, self.q % 2))

    def __str__(self):
        return f"({self.p},{self.q})"


def torus_intersection(c1: TorusCurve, c2: TorusCurve) -> int:
    return abs(c1.p * c2.q - c2.p * c1.q)


def stern_brocot(bound: int) -> Iterator[tuple[int, int]]:
    """Reduced positive fractions ``(num, den)`` with both parts at most ``bound``, in increasing order."""
    # in-order walk of the Stern-Brocot tree; mediants only grow, so prune at the bound
    stack = [((0, 1), (1, 0), False)]
    while stack:
        left, right, emit = stack.pop()
        med = (left[0] + right[0], left[1] + right[1])
        if emit:
            yield med
            continue
        if med[0] > bound or med[1] > bound:
            continue
        stack.append((med, right, False))
        stack.append((left, right, True))
        stack.append((left, med, False))


def enumerate_curves(height_bound: int) -> list[TorusCurve]:
    """All normalized curves with ``|p|, |q| <= height_bound``, ordered by slope."""
    if height_bound < 1:
        raise PreconditionError(f"height bound must be >= 1, got {height_bound}")
    fracs = list(stern_brocot(height_bound))
    neg = [TorusCurve(p, -q) for q, p in reversed(fracs)]
    pos = [TorusCurve(p, q) for q, p in fracs]
    return neg + [TorusCurve(1, 0)] + pos + [TorusCurve(0, 1)]


class TorusSearchResult(NamedTuple):
    size: int
    witness: list[TorusCurve]
    candidates: int


def search_torus(k: int, height_bound: int, cutoff: bool = False, workers: int = 1) -> TorusSearchResult:
    """Largest set of curves of height at most ``height_bound`` meeting pairwise at most ``k`` times.

    With ``cutoff`` the search stops once ``2k+3`` curves are found.  The
    result is exact within the height bound, hence a lower bound on the
    size of a maximal k-system on the torus.
    """
    if not isinstance(k, int) or k < 1:
        raise PreconditionError(f"k must be a positive integer, got {k!r}")
    curves = enumerate_curves(height_bound)
    n = len(curves)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if torus_intersection(curves[i], curves[j]) <= k:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    clique = max_clique(adj, stop_at=2 * k + 3 if cutoff else None, workers=workers)
    return TorusSearchResult(len(clique), [curves[i] for i in clique], n)


def to_curve_system(curves: list[TorusCurve], k: int = 1, provenance: str = "torus") -> CurveSystem:
    """Genus-1 curve system with classes ``(p mod 2, q mod 2)``."""
    recs = [Curve(str(c), c.homology, provenance) for c in curves]
    counts = {}
    for i, a in enumerate(curves):
        for b in curves[i + 1:]:
            counts[(str(a), str(b))] = torus_intersection(a, b)
    return CurveSystem(1, 0, k, tuple(recs), counts)
