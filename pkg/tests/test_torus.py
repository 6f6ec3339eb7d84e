import itertools
import math

import pytest

from curvesys.errors import PreconditionError
from curvesys.torus import (
    TorusCurve,
    enumerate_curves,
    search_torus,
    stern_brocot,
    to_curve_system,
    torus_intersection,
)
from curvesys.verify import verify_all


def primitive_slopes(bound):
    """Independent enumeration: all primitive (p, q) up to sign."""
    out = set()
    for p in range(-bound, bound + 1):
        for q in range(-bound, bound + 1):
            if (p, q) != (0, 0) and math.gcd(p, q) == 1:
                out.add(max((p, q), (-p, -q)))
    return out


def test_normalization():
    assert TorusCurve(-2, -1) == TorusCurve(2, 1)
    assert TorusCurve(0, -1) == TorusCurve(0, 1)
    with pytest.raises(PreconditionError):
        TorusCurve(2, 4)
    with pytest.raises(PreconditionError):
        TorusCurve(0, 0)


def test_intersection():
    assert torus_intersection(TorusCurve(2, 1), TorusCurve(1, 1)) == 1
    assert torus_intersection(TorusCurve(1, 0), TorusCurve(0, 1)) == 1
    assert torus_intersection(TorusCurve(3, 1), TorusCurve(1, 3)) == 8


def test_stern_brocot_order_and_coverage():
    fracs = list(stern_brocot(6))
    values = [a / b for a, b in fracs]
    assert values == sorted(values)
    expected = {(a, b) for a in range(1, 7) for b in range(1, 7) if math.gcd(a, b) == 1}
    assert set(fracs) == expected and len(fracs) == len(expected)


@pytest.mark.parametrize("bound", [1, 2, 5, 10])
def test_enumeration_matches_brute_force(bound):
    curves = enumerate_curves(bound)
    assert len(curves) == len(set(curves))
    assert {(c.p, c.q) for c in curves} == primitive_slopes(bound)


def test_enumeration_domain():
    with pytest.raises(PreconditionError):
        enumerate_curves(0)


@pytest.mark.parametrize("bound", range(1, 11))
def test_k1_maximum_is_three(bound):
    res = search_torus(1, bound)
    assert res.size == 3
    assert all(torus_intersection(a, b) <= 1 for a, b in itertools.combinations(res.witness, 2))


def test_no_fourth_curve_exhaustive():
    # direct oracle: no 4 curves of height <= 5 pairwise meet at most once
    curves = enumerate_curves(5)
    ok = [[torus_intersection(a, b) <= 1 for b in curves] for a in curves]
    n = len(curves)
    for i, j, k in itertools.combinations(range(n), 3):
        if ok[i][j] and ok[i][k] and ok[j][k]:
            assert not any(ok[i][m] and ok[j][m] and ok[k][m] for m in range(n) if m not in (i, j, k))


@pytest.mark.parametrize("k, expected", [(2, 4), (3, 6), (4, 6)])
def test_higher_k_values(k, expected):
    res = search_torus(k, 6)
    assert res.size == expected <= 2 * k + 3


def test_cutoff_stops_at_bound():
    res = search_torus(1, 10, cutoff=True)
    assert res.size == 3


def test_to_curve_system_verifies():
    sys = to_curve_system(search_torus(1, 4).witness)
    assert len(sys) == 3 and verify_all(sys).passed
    sys2 = to_curve_system(search_torus(3, 4).witness, k=3)
    assert verify_all(sys2).passed
