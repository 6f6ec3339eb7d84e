"""Hyperelliptic quotient model: curve systems as graphs on Weierstrass points.

A non-separating curve through two of the ``2g+2`` Weierstrass points is an
edge of a simple graph on those points; edges sharing an endpoint give
curves meeting once and disjoint edges give disjoint curves, as long as the
graph is drawn without crossings.  Maximal genus-2 systems are therefore
the 6-vertex planar triangulations.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

from .errors import PreconditionError
from .gf2 import Gf2Vector, symplectic_gram_schmidt
from .model import Curve, CurveSystem
from .planarity import has_kuratowski_minor, is_planar_graph
from .search import popcount


@dataclass(frozen=True)
class QuotientGraph:
    """Simple graph on Weierstrass vertices ``1..num_vertices``."""

    num_vertices: int
    edges: frozenset

    def __post_init__(self):
        norm = set()
        for e in self.edges:
            a, b = sorted(e)
            if a == b:
                raise ValueError(f"loop at {a}")
            if not (1 <= a and b <= self.num_vertices):
                raise ValueError(f"edge ({a}, {b}) outside 1..{self.num_vertices}")
            norm.add((a, b))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> "QuotientGraph":
        return cls(num_vertices, frozenset(edges))

    @classmethod
    def parse(cls, text: str) -> "QuotientGraph":
        """Inverse of :meth:`edge_list`, e.g. ``"6:1-2,1-3"``."""
        head, _, body = text.partition(":")
        edges = [tuple(int(x) for x in item.split("-")) for item in body.split(",") if item]
        return cls(int(head), frozenset(edges))

    def edge_list(self) -> str:
        return f"{self.num_vertices}:" + ",".join(f"{a}-{b}" for a, b in sorted(self.edges))

    def _zero_based(self):
        return [(a - 1, b - 1) for a, b in self.edges]

    def degrees(self) -> dict[int, int]:
        deg = {v: 0 for v in range(1, self.num_vertices + 1)}
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees().values(), reverse=True))

    def relabel(self, perm) -> "QuotientGraph":
        """Apply ``v -> perm[v-1]`` (``perm`` a permutation of ``1..n``)."""
        return QuotientGraph(self.num_vertices, frozenset((perm[a - 1], perm[b - 1]) for a, b in self.edges))

    def canonical_form(self) -> tuple[int, ...]:
        """Lexicographically least upper-triangle adjacency string over all relabelings."""
        n = self.num_vertices
        slots = list(itertools.combinations(range(n), 2))
        best = None
        for perm in itertools.permutations(range(n)):
            image = {tuple(sorted((perm[a - 1], perm[b - 1]))) for a, b in self.edges}
            key = tuple(1 if s in image else 0 for s in slots)
            if best is None or key < best:
                best = key
        return best

    def is_isomorphic(self, other: "QuotientGraph") -> bool:
        return (
            self.num_vertices == other.num_vertices
            and self.degree_sequence() == other.degree_sequence()
            and self.canonical_form() == other.canonical_form()
        )

    def automorphism_count(self) -> int:
        n = self.num_vertices
        return sum(
            1
            for perm in itertools.permutations(range(1, n + 1))
            if self.relabel(perm).edges == self.edges
        )

    def is_connected_without(self, removed: Iterable[int] = ()) -> bool:
        removed = set(removed)
        verts = [v for v in range(1, self.num_vertices + 1) if v not in removed]
        if not verts:
            return True
        adj = {v: set() for v in verts}
        for a, b in self.edges:
            if a in adj and b in adj:
                adj[a].add(b)
                adj[b].add(a)
        seen, stack = {verts[0]}, [verts[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(verts)

    def is_k_connected(self, k: int) -> bool:
        if self.num_vertices <= k:
            return False
        vs = range(1, self.num_vertices + 1)
        return all(self.is_connected_without(cut) for r in range(k) for cut in itertools.combinations(vs, r))


def is_planar(graph: QuotientGraph, euler_prefilter: bool = True, method: str = "embedding") -> bool:
    """Planarity of a quotient graph.

    ``method="embedding"`` builds a planar embedding block by block;
    ``method="kuratowski"`` excludes K5/K3,3 minors exhaustively (small
    graphs only) and never uses the edge-count bound.
    """
    if method == "embedding":
        return is_planar_graph(graph.num_vertices, graph._zero_based(), euler_prefilter)
    if method == "kuratowski":
        return not has_kuratowski_minor(graph.num_vertices, graph._zero_based())
    raise ValueError(f"unknown planarity method {method!r}")


def octahedron() -> QuotientGraph:
    """K6 minus the perfect matching {1-6, 2-5, 3-4}."""
    missing = {(1, 6), (2, 5), (3, 4)}
    return QuotientGraph(6, frozenset(e for e in itertools.combinations(range(1, 7), 2) if e not in missing))


def complete_graph(n: int) -> QuotientGraph:
    return QuotientGraph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def stacked_triangulation(v: int) -> QuotientGraph:
    """Planar triangulation on ``v`` vertices grown from K4 by stacking.

    Vertex ``t >= 5`` is placed in the face ``{1, 2, t-1}`` and joined to
    its three corners, so vertices 1 and 2 become apexes over the path
    ``3, 4, ..., v``.
    """
    if not isinstance(v, int) or v < 4:
        raise PreconditionError(f"stacked triangulations need v >= 4, got {v!r}")
    edges = set(itertools.combinations(range(1, 5), 2))
    faces = [frozenset(f) for f in itertools.combinations(range(1, 5), 3)]
    for t in range(5, v + 1):
        face = frozenset((1, 2, t - 1))
        faces.remove(face)
        for corner in face:
            edges.add((corner, t))
        faces.extend(frozenset(pair) | {t} for pair in itertools.combinations(sorted(face), 2))
    return QuotientGraph(v, frozenset(edges))


def weierstrass_pairing(e1, e2) -> int:
    """``|e1 ∩ e2| mod 2`` for two Weierstrass vertex pairs."""
    for e in (e1, e2):
        items = list(e)
        if len(items) != 2 or len(set(items)) != 2 or not all(isinstance(x, int) and x >= 1 for x in items):
            raise PreconditionError(f"malformed Weierstrass pair {e!r}")
    return len(set(e1) & set(e2)) % 2


class HomologyMap(NamedTuple):
    genus: int
    pairs: tuple[tuple[int, int], ...]  # hyperbolic pairs of vertex subsets

    def _normalize(self, subset_bits: int) -> int:
        n = 2 * self.genus + 2
        if subset_bits >> (n - 1) & 1:
            subset_bits ^= (1 << n) - 1
        return subset_bits

    def of_subset(self, vertices: Iterable[int]) -> Gf2Vector:
        """Class of the even vertex subset (a sum of edges) in the standard coordinates."""
        bits = 0
        for v in vertices:
            bits ^= 1 << (v - 1)
        if popcount(bits) % 2:
            raise PreconditionError("only even vertex subsets carry a class")
        s = self._normalize(bits)
        g = self.genus
        out = 0
        for x, y in self.pairs:
            a = popcount(s & y) & 1
            b = popcount(s & x) & 1
            out = out << 2 | a << 1 | b
        return Gf2Vector(g, out)

    def of_edge(self, edge) -> Gf2Vector:
        return self.of_subset(edge)


@lru_cache(maxsize=None)
def homology_map(g: int) -> HomologyMap:
    """Pairing-preserving map from the even-subset model to ``(Z/2Z)^{2g}``.

    Even subsets of the ``2g+2`` Weierstrass points modulo complement form a
    ``2g``-dimensional space with pairing ``|S ∩ T| mod 2``.  Gram-Schmidt on
    the chain ``{t, t+1}``, ``t = 1..2g`` gives a symplectic basis there,
    which is sent to the standard ``a_i, b_i``.
    """
    if g < 1:
        raise PreconditionError(f"genus must be >= 1, got {g}")
    chain = [(1 << (t - 1)) | (1 << t) for t in range(1, 2 * g + 1)]
    pairs = symplectic_gram_schmidt(chain, lambda s, t: popcount(s & t) & 1, g)
    return HomologyMap(g, tuple(pairs))


def graph_to_system(graph: QuotientGraph, g: int | None = None) -> CurveSystem:
    """Lift a planar quotient graph to a closed genus-g 1-system, one curve per edge."""
    n = graph.num_vertices
    if g is None:
        if n % 2 or n < 4:
            raise PreconditionError(f"{n} vertices is not 2g+2 for any g >= 1")
        g = (n - 2) // 2
    if n != 2 * g + 2:
        raise PreconditionError(f"genus {g} needs {2 * g + 2} Weierstrass vertices, graph has {n}")
    if not is_planar(graph):
        raise PreconditionError("quotient graph is not planar")
    phi = homology_map(g)
    tag = graph.edge_list()
    edges = sorted(graph.edges)
    width = len(str(n))
    name = lambda e: f"w{e[0]:0{width}d}w{e[1]:0{width}d}"
    curves = [Curve(name(e), phi.of_edge(e), f"hyperelliptic edge {e[0]}-{e[1]} of {tag}") for e in edges]
    counts = {}
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if set(e) & set(f):
                counts[(name(e), name(f))] = 1
    return CurveSystem(g, 0, 1, tuple(curves), counts)


def system_to_graph(sys: CurveSystem) -> QuotientGraph:
    """Recover the quotient graph recorded in a lifted system's provenance."""
    tags = {c.provenance.rsplit(" of ", 1)[-1] for c in sys.curves}
    if len(tags) != 1:
        raise PreconditionError("curves do not share a single quotient-graph provenance")
    return QuotientGraph.parse(tags.pop())


class Genus2Enumeration(NamedTuple):
    max_edges: int
    labeled_count: int
    iso_classes: list[QuotientGraph]
    candidates_checked: int


def enumerate_max_systems_genus2(prefilter: bool = True) -> Genus2Enumeration:
    """Maximum planar graphs on 6 labelled vertices, grouped into isomorphism classes.

    With ``prefilter`` only edge counts at or below ``3V - 6 = 12`` are
    examined, from the top down, using the embedding test.  Without it all
    ``2^15`` graphs are classified by exhaustive Kuratowski-minor exclusion.
    """
    n = 6
    slots = list(itertools.combinations(range(1, n + 1), 2))
    checked = 0
    if prefilter:
        maxima, best = [], None
        for m in range(3 * n - 6, -1, -1):
            for subset in itertools.combinations(slots, m):
                checked += 1
                graph = QuotientGraph(n, frozenset(subset))
                if is_planar(graph):
                    maxima.append(graph)
            if maxima:
                best = m
                break
    else:
        best, maxima = -1, []
        for mask in range(1 << len(slots)):
            m = popcount(mask)
            checked += 1
            graph = QuotientGraph(n, frozenset(s for i, s in enumerate(slots) if mask >> i & 1))
            if is_planar(graph, euler_prefilter=False, method="kuratowski") and m >= best:
                if m > best:
                    best, maxima = m, []
                maxima.append(graph)

    classes: dict[tuple, QuotientGraph] = {}
    for graph in maxima:
        classes.setdefault(graph.canonical_form(), graph)
    reps = [classes[key] for key in sorted(classes)]
    return Genus2Enumeration(best, len(maxima), reps, checked)


def labeled_count_from_automorphisms(classes: Iterable[QuotientGraph]) -> int:
    """Orbit-stabilizer count ``sum n! / |Aut|`` of labelled copies."""
    return sum(math.factorial(c.num_vertices) // c.automorphism_count() for c in classes)
