"""Curve systems as labelled curves plus an intersection-count matrix."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import FormatError
from .gf2 import Gf2Vector


@dataclass(frozen=True)
class Curve:
    id: str
    homology: Gf2Vector | None = None
    provenance: str = ""


def _pair_key(a: str, b: str) -> tuple[str, str]:
    return (a, b) if a < b else (b, a)


def _normalize_intersections(raw) -> dict[tuple[str, str], int]:
    items = raw.items() if isinstance(raw, Mapping) else ((t[:2], t[2]) for t in raw)
    out: dict[tuple[str, str], int] = {}
    for (a, b), count in items:
        if a == b:
            raise FormatError(f"self-intersection entry for {a!r}", "$.intersections")
        key = _pair_key(a, b)
        if key in out and out[key] != count:
            raise FormatError(f"conflicting counts {out[key]} and {count} for pair {key}", "$.intersections")
        out[key] = int(count)
    return {key: c for key, c in sorted(out.items()) if c != 0}


@dataclass(frozen=True, eq=True)
class CurveSystem:
    """A k-system candidate on a genus ``genus`` surface with ``boundary`` holes.

    ``intersections`` maps sorted id pairs to counts; absent pairs are 0.
    Curves are kept sorted by id so that equal systems compare equal.  The
    constructor does not police the k-bound or id uniqueness: that is the
    verifier's job, which reports such problems instead of raising.
    """

    genus: int
    boundary: int
    k: int
    curves: tuple[Curve, ...]
    intersections: Mapping[tuple[str, str], int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(sorted(self.curves, key=lambda c: c.id)))
        object.__setattr__(self, "intersections", MappingProxyType(_normalize_intersections(self.intersections)))

    def __eq__(self, other):
        if not isinstance(other, CurveSystem):
            return NotImplemented
        return (
            (self.genus, self.boundary, self.k, self.curves) == (other.genus, other.boundary, other.k, other.curves)
            and dict(self.intersections) == dict(other.intersections)
        )

    __hash__ = None

    @property
    def ids(self) -> list[str]:
        return [c.id for c in self.curves]

    @property
    def closed(self) -> bool:
        return self.boundary == 0

    def __len__(self):
        return len(self.curves)

    def count(self, a: str, b: str) -> int:
        if a == b:
            return 0
        return self.intersections.get(_pair_key(a, b), 0)

    def curve(self, cid: str) -> Curve:
        for c in self.curves:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def with_k(self, k: int) -> "CurveSystem":
        return replace(self, k=k)

    def with_count(self, a: str, b: str, count: int) -> "CurveSystem":
        inter = dict(self.intersections)
        inter[_pair_key(a, b)] = count
        return replace(self, intersections=inter)

    def with_curve(self, curve: Curve) -> "CurveSystem":
        curves = [curve if c.id == curve.id else c for c in self.curves]
        return replace(self, curves=curves)


class Flavor(enum.Enum):
    ALL = "all"
    ODD = "odd"


@dataclass(frozen=True)
class IntersectionGraph:
    vertices: tuple[str, ...]
    edges: frozenset
    flavor: Flavor = Flavor.ALL

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", frozenset(_pair_key(*e) for e in self.edges))
        vs = set(self.vertices)
        for a, b in self.edges:
            if a == b or a not in vs or b not in vs:
                raise ValueError(f"bad edge ({a!r}, {b!r})")

    @classmethod
    def from_adjacency(cls, n: int, edges: Iterable[tuple[int, int]]) -> "IntersectionGraph":
        """Graph on vertices ``"0".."n-1"`` (zero-padded so that string order is numeric)."""
        width = len(str(max(n - 1, 0)))
        name = lambda i: str(i).zfill(width)
        return cls(tuple(name(i) for i in range(n)), frozenset((name(a), name(b)) for a, b in edges))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def degrees(self) -> dict[str, int]:
        deg = {v: 0 for v in self.vertices}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def average_degree(self) -> Fraction:
        if not self.vertices:
            return Fraction(0)
        return Fraction(2 * len(self.edges), len(self.vertices))

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def is_edgeless(self) -> bool:
        return not self.edges

    def adjacency_bits(self) -> list[int]:
        index = {v: i for i, v in enumerate(self.vertices)}
        adj = [0] * len(self.vertices)
        for a, b in self.edges:
            i, j = index[a], index[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        return adj

    def is_independent(self, vertices: Iterable[str]) -> bool:
        vs = sorted(set(vertices))
        return all(_pair_key(vs[i], vs[j]) not in self.edges for i in range(len(vs)) for j in range(i + 1, len(vs)))

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{", f'  // flavor: {self.flavor.value}']
        for v in sorted(self.vertices):
            lines.append(f'  "{v}";')
        for a, b in sorted(self.edges):
            lines.append(f'  "{a}" -- "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def intersection_graph(sys: CurveSystem, flavor: Flavor | str = Flavor.ALL) -> IntersectionGraph:
    """G(X) (edge iff the curves meet) or G_odd(X) (edge iff they meet an odd number of times)."""
    flavor = Flavor(flavor)
    if flavor is Flavor.ALL:
        edges = [pair for pair, c in sys.intersections.items() if c > 0]
    else:
        edges = [pair for pair, c in sys.intersections.items() if c % 2 == 1]
    return IntersectionGraph(tuple(sys.ids), frozenset(edges), flavor)
