"""Necessary conditions for 1-systems, the Turán step, and the bound table.

Every check returns a :class:`VerificationReport`; a failing check carries
the offending pairs, classes or counts as witnesses.  Structural problems
with the input itself (a pair naming an unknown curve) raise FormatError.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import FormatError, PreconditionError, UnsupportedError
from .gf2 import pair_bits
from .model import CurveSystem, Flavor, IntersectionGraph, intersection_graph
from .search import max_clique

EXACT_MIS_LIMIT = 24


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: Any = None
    warning: bool = False

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "passed": self.passed,
            "warning": self.warning,
            "detail": self.detail,
            "witness": _jsonable(self.witness),
        }


def _jsonable(x):
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(y) for y in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (int, float, str, bool)) or x is None:
        return x
    return str(x)


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    @property
    def warnings(self) -> list[CheckResult]:
        return [c for c in self.checks if c.warning]

    def __getitem__(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def __contains__(self, name: str) -> bool:
        return any(c.name == name for c in self.checks)

    def __add__(self, other: "VerificationReport") -> "VerificationReport":
        return VerificationReport(self.checks + other.checks)

    def add(self, name, passed, detail="", witness=None, warning=False):
        self.checks.append(CheckResult(name, bool(passed), detail, witness, warning))

    def format(self) -> str:
        lines = []
        for c in self.checks:
            tag = "WARN" if c.warning else ("PASS" if c.passed else "FAIL")
            line = f"[{tag}] {c.name}: {c.detail}"
            if not c.passed or c.warning:
                line += f"  witness={_jsonable(c.witness)}"
            lines.append(line)
        lines.append("overall: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _check_indices(sys: CurveSystem):
    ids = set(sys.ids)
    for i, (a, b) in enumerate(sys.intersections):
        for x in (a, b):
            if x not in ids:
                raise FormatError(f"pair ({a!r}, {b!r}) names unknown curve {x!r}", f"$.intersections[{i}]")


def verify_k_system(sys: CurveSystem, k: int | None = None) -> VerificationReport:
    """Counts bounded by ``k`` (default: the declared ``sys.k``), unique ids, no negative counts."""
    _check_indices(sys)
    k = sys.k if k is None else k
    rep = VerificationReport()

    seen, dups = set(), []
    for cid in sys.ids:
        if cid in seen:
            dups.append(cid)
        seen.add(cid)
    rep.add("ids-unique", not dups, f"{len(sys)} curves", dups or None)

    negative = [(a, b, n) for (a, b), n in sys.intersections.items() if n < 0]
    rep.add("counts-nonnegative", not negative, f"{len(sys.intersections)} non-zero pairs", negative or None)

    over = [(a, b, n) for (a, b), n in sys.intersections.items() if n > k]
    rep.add("k-bound", not over, f"every pair meets at most {k} times", over or None)
    return rep


def _require_classes(sys: CurveSystem):
    if sys.boundary != 0:
        raise PreconditionError("homology checks need a closed surface (boundary = 0)")
    missing = [c.id for c in sys.curves if c.homology is None]
    if missing:
        raise PreconditionError(f"curves without a homology class: {missing}")
    wrong = [c.id for c in sys.curves if c.homology.genus != sys.genus]
    if wrong:
        raise PreconditionError(f"classes of the wrong length on {wrong}")


def verify_homology_consistency(sys: CurveSystem) -> VerificationReport:
    """Intersection parity must equal the symplectic pairing of the classes, pair by pair."""
    _check_indices(sys)
    _require_classes(sys)
    g = sys.genus
    bits = [(c.id, c.homology.bits) for c in sys.curves]
    bad = []
    for i in range(len(bits)):
        a, u = bits[i]
        for j in range(i + 1, len(bits)):
            b, v = bits[j]
            parity = sys.count(a, b) % 2
            p = pair_bits(u, v, g)
            if parity != p:
                bad.append({"pair": (a, b), "count": sys.count(a, b), "pairing": p})
    rep = VerificationReport()
    n = len(bits)
    rep.add("homology-parity", not bad, f"{n * (n - 1) // 2} pairs compared", bad or None)
    return rep


def class_budget(genus: int) -> int:
    """Most curves a 1-system can put in one non-zero mod 2 class.

    ``g - 1`` for ``g >= 2``.  On the torus two distinct curves in the same
    class would have to be disjoint, which distinct torus curves never are,
    so the budget there is 1.
    """
    return genus - 1 if genus >= 2 else 1


def verify_class_budget(sys: CurveSystem) -> VerificationReport:
    _check_indices(sys)
    _require_classes(sys)
    if sys.k != 1:
        raise PreconditionError(f"class budget applies to 1-systems, got k = {sys.k}")
    budget = class_budget(sys.genus)
    groups: dict[int, list[str]] = defaultdict(list)
    for c in sys.curves:
        groups[c.homology.bits].append(c.id)

    rep = VerificationReport()
    zero = groups.pop(0, [])
    over = [
        {"class": format(b, f"0{2 * sys.genus}b"), "count": len(ids), "curves": ids}
        for b, ids in sorted(groups.items())
        if len(ids) > budget
    ]
    peak = max((len(ids) for ids in groups.values()), default=0)
    rep.add("class-budget", not over, f"at most {budget} curves per class; largest class has {peak}", over or None)

    meeting = []
    for ids in groups.values():
        for i in range(len(ids)):
            for j in range(i + 1, len(ids)):
                if sys.count(ids[i], ids[j]) != 0:
                    meeting.append((ids[i], ids[j], sys.count(ids[i], ids[j])))
    rep.add("same-class-disjoint", not meeting, "curves sharing a class are disjoint", meeting or None)

    rep.add(
        "separating-curves",
        True,
        "zero-class curves cannot occur in a maximal system" if zero else "no zero-class curves",
        zero or None,
        warning=bool(zero),
    )
    return rep


def check_degree_bounds(sys: CurveSystem) -> VerificationReport:
    """Odd-graph and intersection-graph degree bounds, plus the two extreme cases.

    The intersection-graph bound and the all-disjoint bound count disjoint
    curves on a closed surface, so they are only evaluated when
    ``boundary == 0`` and ``g >= 2``.
    """
    _check_indices(sys)
    rep = VerificationReport()
    n, g = len(sys), sys.genus
    if n == 0:
        rep.add("degree-bounds", True, "empty system")
        return rep

    g_odd = intersection_graph(sys, Flavor.ODD)
    deficit = n - g_odd.average_degree()
    bound = (deficit + 1) * (2 * g + 1)
    rep.add(
        "odd-degree-bound",
        n <= bound,
        f"N = {n} <= (D+1)(2g+1) = {bound} with D = {deficit}",
        {"N": n, "D": deficit, "bound": bound},
    )
    if n >= 2 and g_odd.is_complete():
        rep.add("all-intersecting-bound", n <= 2 * g + 1, f"G_odd complete: N = {n} <= 2g+1 = {2 * g + 1}", {"N": n})

    if sys.boundary == 0 and g >= 2:
        g_all = intersection_graph(sys, Flavor.ALL)
        d = g_all.average_degree()
        bound = (d + 1) * (3 * g - 3)
        rep.add(
            "low-degree-bound",
            n <= bound,
            f"N = {n} <= (D+1)(3g-3) = {bound} with D = {d}",
            {"N": n, "D": d, "bound": bound},
        )
        if g_all.is_edgeless():
            rep.add("all-disjoint-bound", n <= 3 * g - 3, f"G edgeless: N = {n} <= 3g-3 = {3 * g - 3}", {"N": n})
    return rep


def turan_bound(graph: IntersectionGraph) -> int:
    """``ceil(N / (avg_degree + 1))`` computed exactly."""
    n = graph.order
    if n == 0:
        return 0
    return math.ceil(Fraction(n) / (graph.average_degree() + 1))


def turan_independent_set(graph: IntersectionGraph, mode: str = "exact") -> frozenset:
    """An independent set of size at least ``ceil(N / (avg_degree + 1))``.

    ``exact`` returns a maximum independent set (at most 24 vertices);
    ``greedy`` repeatedly takes a vertex of minimum remaining degree, which
    meets the Caro-Wei bound and hence the Turán bound.
    """
    n = graph.order
    adj = graph.adjacency_bits()
    if mode == "exact":
        if n > EXACT_MIS_LIMIT:
            raise PreconditionError(f"exact mode is limited to {EXACT_MIS_LIMIT} vertices, got {n}")
        full = (1 << n) - 1
        comp = [full & ~adj[v] & ~(1 << v) for v in range(n)]
        chosen = max_clique(comp)
    elif mode == "greedy":
        alive = set(range(n))
        chosen = []
        while alive:
            live = sum(1 << v for v in alive)
            v = min(alive, key=lambda u: (bin(adj[u] & live).count("1"), u))
            chosen.append(v)
            alive -= {v} | {u for u in alive if adj[v] >> u & 1}
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return frozenset(graph.vertices[v] for v in chosen)


@dataclass(frozen=True)
class BoundTable:
    genus: int
    boundary: int
    lower: int
    upper: int
    lower_formula: str
    upper_formula: str

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def symbol(self) -> str:
        return f"N(1,{self.genus})" if self.boundary == 0 else f"N(1,{self.genus},{self.boundary})"

    def describe(self) -> str:
        if self.exact:
            return f"{self.symbol} = {self.lower} (exact)"
        return f"{self.lower} ≤ {self.symbol} ≤ {self.upper}"


def closed_upper(g: int) -> int:
    if g == 1:
        return 3
    if g == 2:
        return 12
    return (g - 1) * (2 ** (2 * g) - 1)


def closed_lower(g: int) -> int:
    if g == 1:
        return 3
    if g == 2:
        return 12
    if g == 3:
        return 6 * g
    return math.ceil(Fraction(2 * g * g + 5 * g, 2))


def bounds(g: int, n: int = 0, k: int = 1) -> BoundTable:
    """Known lower and upper bounds on the size of a 1-system on S_{g,n}."""
    if k != 1:
        raise UnsupportedError(f"only 1-system bounds are tabulated (k = {k})")
    if not isinstance(g, int) or g < 1 or not isinstance(n, int) or n < 0:
        raise PreconditionError(f"need g >= 1 and n >= 0, got g = {g!r}, n = {n!r}")

    if g == 1:
        if n == 0:
            return BoundTable(1, 0, 3, 3, "torus: 3", "torus: 3")
        return BoundTable(1, n, 3 * n, 3 * n, "3n", "3n")
    if n == 0:
        if g == 2:
            return BoundTable(2, 0, 12, 12, "genus 2: 12", "genus 2: 12")
        lower_formula = "6g" if g == 3 else "ceil(g^2 + 5g/2)"
        return BoundTable(g, 0, closed_lower(g), closed_upper(g), lower_formula, "(g-1)(2^(2g)-1)")
    upper_formula = "12 + (2g+1)n" if g == 2 else "(g-1)(2^(2g)-1) + (2g+1)n"
    return BoundTable(
        g, n, (2 * g + 1) * (n + 1), closed_upper(g) + (2 * g + 1) * n, "(2g+1)(n+1)", upper_formula
    )


def verify_global_bound(sys: CurveSystem) -> VerificationReport:
    table = bounds(sys.genus, sys.boundary, 1)
    rep = VerificationReport()
    rep.add(
        "global-upper-bound",
        len(sys) <= table.upper,
        f"N = {len(sys)} <= {table.upper} ({table.upper_formula})",
        {"N": len(sys), "upper": table.upper},
    )
    return rep


def verify_all(sys: CurveSystem, k: int | None = None) -> VerificationReport:
    """Every check that applies to ``sys`` judged as a ``k``-system."""
    k = sys.k if k is None else k
    target = sys if k == sys.k else sys.with_k(k)
    rep = verify_k_system(target)
    if target.closed and all(c.homology is not None for c in target.curves):
        rep = rep + verify_homology_consistency(target)
        if k == 1:
            rep = rep + verify_class_budget(target)
    rep = rep + check_degree_bounds(target)
    if k == 1:
        rep = rep + verify_global_bound(target)
    return rep
