"""Linear algebra over Z/2Z with the standard symplectic form.

A vector of ``(Z/2Z)^{2g}`` is stored as a Python ``int``.  Coordinates are
interleaved ``(a_1, b_1, a_2, b_2, ..., a_g, b_g)`` and the most significant
of the ``2g`` bits is ``a_1``, so ``format(bits, "0{2g}b")`` is the usual
bitstring and appending two coordinates is a left shift by two.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DimensionError, PreconditionError, RankError, StructureError
from .search import max_clique, popcount


def _a_mask(genus: int) -> int:
    # a-coordinates sit on the odd bit positions
    return int("10" * genus, 2)


def _b_mask(genus: int) -> int:
    return int("01" * genus, 2)


def _swap_pairs(bits: int, genus: int) -> int:
    return ((bits & _a_mask(genus)) >> 1) | ((bits & _b_mask(genus)) << 1)


def pair_bits(u: int, v: int, genus: int) -> int:
    """Symplectic pairing of two raw bit vectors of length ``2 * genus``."""
    return popcount(u & _swap_pairs(v, genus)) & 1


@dataclass(frozen=True, order=True)
class Gf2Vector:
    """An element of ``(Z/2Z)^{2g}``."""

    genus: int
    bits: int

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 1:
            raise PreconditionError(f"genus must be a positive integer, got {self.genus!r}")
        if not 0 <= self.bits < 1 << (2 * self.genus):
            raise DimensionError(f"bits {self.bits:#x} do not fit in {2 * self.genus} coordinates")

    @classmethod
    def from_coords(cls, coords: Iterable[int]) -> "Gf2Vector":
        coords = [int(c) for c in coords]
        if not coords or len(coords) % 2:
            raise DimensionError(f"need an even, positive number of coordinates, got {len(coords)}")
        bits = 0
        for c in coords:
            if c not in (0, 1):
                raise ValueError(f"coordinate {c} is not a bit")
            bits = bits << 1 | c
        return cls(len(coords) // 2, bits)

    @classmethod
    def from_string(cls, s: str) -> "Gf2Vector":
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a bitstring: {s!r}")
        return cls.from_coords(int(c) for c in s)

    @classmethod
    def zero(cls, genus: int) -> "Gf2Vector":
        return cls(genus, 0)

    @classmethod
    def unit(cls, genus: int, index: int) -> "Gf2Vector":
        """The standard basis vector with a single 1 in coordinate ``index`` (0-based)."""
        if not 0 <= index < 2 * genus:
            raise DimensionError(f"coordinate {index} out of range for genus {genus}")
        return cls(genus, 1 << (2 * genus - 1 - index))

    @property
    def dimension(self) -> int:
        return 2 * self.genus

    @property
    def coords(self) -> tuple[int, ...]:
        return tuple(int(c) for c in str(self))

    def __len__(self):
        return 2 * self.genus

    def __getitem__(self, index: int) -> int:
        if not -len(self) <= index < len(self):
            raise IndexError(index)
        index %= len(self)
        return self.bits >> (2 * self.genus - 1 - index) & 1

    def __str__(self):
        return format(self.bits, f"0{2 * self.genus}b")

    def __repr__(self):
        return f"Gf2Vector('{self}')"

    def __bool__(self):
        return self.bits != 0

    def _check(self, other):
        if not isinstance(other, Gf2Vector):
            return NotImplemented
        if other.genus != self.genus:
            raise DimensionError(f"length {len(self)} vs {len(other)}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Gf2Vector(self.genus, self.bits ^ other.bits)

    __xor__ = __add__
    __sub__ = __add__

    def extend(self, *coords: int) -> "Gf2Vector":
        """Concatenate two more coordinates, ``(v ; x, y)``."""
        if len(coords) != 2:
            raise DimensionError("extend appends exactly one (a, b) coordinate pair")
        return Gf2Vector(self.genus + 1, self.bits << 2 | coords[0] << 1 | coords[1])

    def embed(self, genus: int) -> "Gf2Vector":
        """Pad with zero coordinates on the right to live in a larger genus."""
        if genus < self.genus:
            raise DimensionError(f"cannot embed genus {self.genus} into genus {genus}")
        return Gf2Vector(genus, self.bits << 2 * (genus - self.genus))


def pair(u: Gf2Vector, v: Gf2Vector) -> int:
    """Standard symplectic pairing ``sum_j (u_aj v_bj + u_bj v_aj) mod 2``."""
    if u.genus != v.genus:
        raise DimensionError(f"cannot pair vectors of length {len(u)} and {len(v)}")
    return pair_bits(u.bits, v.bits, u.genus)


def _common_genus(vs: Sequence[Gf2Vector]) -> int | None:
    genera = {v.genus for v in vs}
    if len(genera) > 1:
        raise DimensionError(f"mixed vector lengths {sorted(2 * g for g in genera)}")
    return genera.pop() if genera else None


def rank_bits(rows: Iterable[int]) -> int:
    basis: dict[int, int] = {}  # leading bit -> reduced vector
    for r in rows:
        while r:
            lead = r.bit_length() - 1
            if lead not in basis:
                basis[lead] = r
                break
            r ^= basis[lead]
    return len(basis)


def rank(vs: Sequence[Gf2Vector]) -> int:
    """Dimension of the span of ``vs`` (0 for an empty list)."""
    _common_genus(vs)
    return rank_bits(v.bits for v in vs)


def canonical_family(g: int) -> list[Gf2Vector]:
    """The ``2g+1`` vectors ``v^g_1, ..., v^g_{2g+1}`` that pairwise pair to 1.

    Built inductively from ``(1,1), (0,1), (1,0)``: the first ``2g-2`` vectors
    of genus ``g-1`` get ``(0,0)`` appended and the last one is extended by
    ``(1,0)``, ``(0,1)`` and ``(1,1)``.
    """
    if not isinstance(g, int) or g < 1:
        raise PreconditionError(f"genus must be >= 1, got {g!r}")
    family = [0b11, 0b01, 0b10]
    for _ in range(2, g + 1):
        last = family[-1]
        family = [v << 2 for v in family[:-1]] + [last << 2 | 0b10, last << 2 | 0b01, last << 2 | 0b11]
    return [Gf2Vector(g, v) for v in family]


@dataclass(frozen=True)
class OddFamilyVerdict:
    size: int
    genus: int | None
    all_nonzero: bool
    all_pairings_one: bool
    bound_respected: bool
    offending_pair: tuple[int, int] | None = None

    @property
    def valid(self) -> bool:
        return self.all_nonzero and self.all_pairings_one


def validate_odd_family(vs: Sequence[Gf2Vector]) -> OddFamilyVerdict:
    """Check that ``vs`` are non-zero and pairwise pair to 1.

    ``bound_respected`` is the statement that such a family has at most
    ``2g+1`` members; it is vacuously true when either flag fails.
    """
    g = _common_genus(vs)
    nonzero = all(vs)
    offending = None
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if pair(vs[i], vs[j]) != 1:
                offending = (i, j)
                break
        if offending:
            break
    ones = offending is None
    bound = not (nonzero and ones) or g is None or len(vs) <= 2 * g + 1
    return OddFamilyVerdict(len(vs), g, nonzero, ones, bound, offending)


def pairing_graph(g: int) -> list[int]:
    """Adjacency bitsets on the non-zero vectors 1..4^g-1 (vertex ``i`` is vector ``i+1``)."""
    n = (1 << 2 * g) - 1
    adj = [0] * n
    for i in range(n):
        u = i + 1
        su = _swap_pairs(u, g)
        bits = 0
        for j in range(n):
            if popcount(su & (j + 1)) & 1:
                bits |= 1 << j
        adj[i] = bits
    return adj


def max_odd_family(g: int, cutoff: bool = True, workers: int = 1) -> tuple[int, list[Gf2Vector]]:
    """Largest family of non-zero vectors pairwise pairing to 1, by exhaustive search.

    With ``cutoff`` the search stops once ``2g+1`` vectors are found; pass
    ``cutoff=False`` for a certified run that proves optimality on its own.
    """
    if not isinstance(g, int) or g < 1:
        raise PreconditionError(f"genus must be >= 1, got {g!r}")
    adj = pairing_graph(g)
    clique = max_clique(adj, stop_at=2 * g + 1 if cutoff else None, workers=workers)
    return len(clique), [Gf2Vector(g, i + 1) for i in clique]


@dataclass(frozen=True)
class Gf2Matrix:
    """A matrix over Z/2Z given by its rows."""

    rows: tuple[Gf2Vector, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        if not self.rows:
            raise DimensionError("matrix needs at least one row")
        _common_genus(self.rows)

    @classmethod
    def from_row_bits(cls, rows: Sequence[int], ncols: int) -> "Gf2Matrix":
        return cls(tuple(Gf2Vector(ncols // 2, r) for r in rows))

    @classmethod
    def identity(cls, genus: int) -> "Gf2Matrix":
        return cls(tuple(Gf2Vector.unit(genus, i) for i in range(2 * genus)))

    @classmethod
    def from_columns(cls, cols: Sequence[Gf2Vector]) -> "Gf2Matrix":
        """Matrix whose ``j``-th column is ``cols[j]``; maps ``e_j`` to ``cols[j]``."""
        g = _common_genus(cols)
        if g is None or len(cols) % 2:
            raise DimensionError("need an even, positive number of columns")
        n, m = 2 * g, len(cols)
        rows = []
        for i in range(n):
            r = 0
            for c in cols:
                r = r << 1 | c[i]
            rows.append(r)
        return cls.from_row_bits(rows, m)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def is_square(self) -> bool:
        n, m = self.shape
        return n == m

    def _row_bits(self):
        return [r.bits for r in self.rows]

    def columns(self) -> list[Gf2Vector]:
        n, m = self.shape
        if n % 2:
            raise DimensionError("columns of odd length are not symplectic vectors")
        return [self @ Gf2Vector.unit(m // 2, j) for j in range(m)]

    def __matmul__(self, other):
        if isinstance(other, Gf2Vector):
            n, m = self.shape
            if len(other) != m:
                raise DimensionError(f"matrix with {m} columns applied to vector of length {len(other)}")
            if n % 2:
                raise DimensionError("result would have odd length")
            out = 0
            for r in self._row_bits():
                out = out << 1 | (popcount(r & other.bits) & 1)
            return Gf2Vector(n // 2, out)
        if isinstance(other, Gf2Matrix):
            if self.shape[1] != other.shape[0]:
                raise DimensionError(f"shapes {self.shape} and {other.shape} do not compose")
            return Gf2Matrix.from_columns([self @ c for c in other.columns()])
        return NotImplemented

    def rank(self) -> int:
        return rank_bits(self._row_bits())

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.shape[0]

    def inverse(self) -> "Gf2Matrix":
        if not self.is_square:
            raise DimensionError(f"non-square matrix {self.shape}")
        n = self.shape[0]
        aug = [(r << n) | (1 << (n - 1 - i)) for i, r in enumerate(self._row_bits())]
        for col in range(n):
            bit = 1 << (2 * n - 1 - col)
            piv = next((i for i in range(col, n) if aug[i] & bit), None)
            if piv is None:
                raise RankError("matrix is singular")
            aug[col], aug[piv] = aug[piv], aug[col]
            for i in range(n):
                if i != col and aug[i] & bit:
                    aug[i] ^= aug[col]
        mask = (1 << n) - 1
        return Gf2Matrix.from_row_bits([r & mask for r in aug], n)

    def __str__(self):
        return "\n".join(str(r) for r in self.rows)


def is_symplectic(A: Gf2Matrix) -> bool:
    """True iff ``A`` is invertible and preserves the symplectic pairing."""
    if not A.is_square:
        raise DimensionError(f"non-square matrix {A.shape}")
    if not A.is_invertible():
        return False
    g = A.shape[0] // 2
    cols = A.columns()
    for i in range(2 * g):
        ei = Gf2Vector.unit(g, i)
        for j in range(i + 1, 2 * g):
            if pair(cols[i], cols[j]) != pair(ei, Gf2Vector.unit(g, j)):
                return False
    return True


def symplectic_gram_schmidt(
    candidates: Sequence[int],
    form: Callable[[int, int], int],
    npairs: int,
) -> list[tuple[int, int]]:
    """Hyperbolic pairs ``(x_i, y_i)`` with ``form(x_i, y_i) = 1``, mutually orthogonal.

    Each ``x_i`` is the first candidate whose projection onto the orthogonal
    complement of the pairs so far is non-zero, and ``y_i`` the first later
    candidate whose projection pairs to 1 with it.  ``form`` must be a
    non-degenerate alternating form and ``candidates`` must span the space.
    """
    pairs: list[tuple[int, int]] = []
    used = [False] * len(candidates)

    def project(z):
        for x, y in pairs:
            cy, cx = form(z, y), form(z, x)
            if cy:
                z ^= x
            if cx:
                z ^= y
        return z

    for i, cand in enumerate(candidates):
        if len(pairs) == npairs:
            break
        if used[i]:
            continue
        x = project(cand)
        if not x:
            continue
        for j in range(i + 1, len(candidates)):
            if used[j]:
                continue
            y = project(candidates[j])
            if form(x, y):
                used[i] = used[j] = True
                pairs.append((x, y))
                break
        else:
            raise StructureError("form is degenerate on the span of the candidates")
    if len(pairs) != npairs:
        raise StructureError(f"found {len(pairs)} hyperbolic pairs, expected {npairs}")
    return pairs


def complete_symplectic_basis(vs: Sequence[Gf2Vector], genus: int | None = None) -> Gf2Matrix:
    """Extend independent ``vs`` to a symplectic basis ``x_1, y_1, ..., x_g, y_g``.

    Returned as the matrix with those basis vectors as columns (so it is
    symplectic); the leading columns span a space containing ``span(vs)``.
    The standard basis is used to fill up whatever ``vs`` does not reach.
    """
    g = _common_genus(vs)
    if g is None:
        g = genus
    elif genus is not None and genus != g:
        raise DimensionError(f"vectors have genus {g}, requested {genus}")
    if g is None:
        raise PreconditionError("genus is required when no vectors are given")
    if rank(vs) != len(vs):
        raise RankError(f"{len(vs)} input vectors have rank {rank(vs)}")
    candidates = [v.bits for v in vs] + [Gf2Vector.unit(g, i).bits for i in range(2 * g)]
    pairs = symplectic_gram_schmidt(candidates, lambda u, w: pair_bits(u, w, g), g)
    cols = [Gf2Vector(g, b) for xy in pairs for b in xy]
    return Gf2Matrix.from_columns(cols)


def find_symplectic_map(vs: Sequence[Gf2Vector], ws: Sequence[Gf2Vector]) -> Gf2Matrix:
    """Symplectic ``A`` with ``A v_i = w_i`` for two maximal pairwise-odd families.

    Both families are sent to a common symplectic normal form by running
    Gram-Schmidt on their first ``2g`` members; the run only looks at
    pairings, which agree, so the two normal forms match and ``A`` is the
    composite.  The last member follows because it is the sum of the others.
    """
    g = _common_genus(list(vs) + list(ws))
    if g is None or len(vs) != 2 * g + 1 or len(ws) != 2 * g + 1:
        raise StructureError(f"both families need 2g+1 = {None if g is None else 2 * g + 1} members")
    for name, fam in (("source", vs), ("target", ws)):
        verdict = validate_odd_family(fam)
        if not verdict.valid:
            raise StructureError(f"{name} family is not pairwise odd (pair {verdict.offending_pair})")
    for i in range(2 * g + 1):
        for j in range(i + 1, 2 * g + 1):
            if pair(vs[i], vs[j]) != pair(ws[i], ws[j]):
                raise StructureError(f"Gram matrices differ at ({i}, {j})")
    if rank(vs[: 2 * g]) != 2 * g or rank(ws[: 2 * g]) != 2 * g:
        raise StructureError("first 2g members are dependent")

    bv = complete_symplectic_basis(vs[: 2 * g])
    bw = complete_symplectic_basis(ws[: 2 * g])
    A = bw @ bv.inverse()
    if any(A @ v != w for v, w in zip(vs, ws)) or not is_symplectic(A):
        raise StructureError("normal forms disagree; families are not symplectically equivalent")
    return A


def transvection(u: Gf2Vector) -> Gf2Matrix:
    """The symplectic transvection ``x -> x + (x, u) u``."""
    g = u.genus
    cols = []
    for i in range(2 * g):
        e = Gf2Vector.unit(g, i)
        cols.append(e + u if pair(e, u) else e)
    return Gf2Matrix.from_columns(cols)


def random_symplectic(g: int, rng: random.Random | None = None, steps: int | None = None) -> Gf2Matrix:
    """A random element of Sp(2g, Z/2Z) as a product of random transvections."""
    rng = rng or random.Random()
    steps = steps if steps is not None else 4 * g + 4
    A = Gf2Matrix.identity(g)
    for _ in range(steps):
        u = Gf2Vector(g, rng.randrange(1, 1 << 2 * g))
        A = transvection(u) @ A
    return A
