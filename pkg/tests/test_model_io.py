import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from curvesys.errors import FormatError
from curvesys.gf2 import Gf2Vector
from curvesys.io import dumps, from_document, loads, read_system, to_document, write_system
from curvesys.model import Curve, CurveSystem, Flavor, IntersectionGraph, intersection_graph

V = Gf2Vector.from_string


def small_system():
    curves = (Curve("b", V("01"), "p"), Curve("a", V("10")), Curve("c", V("11")))
    return CurveSystem(1, 0, 1, curves, {("b", "a"): 1, ("a", "c"): 1, ("b", "c"): 1})


@st.composite
def systems(draw):
    g = draw(st.integers(1, 4))
    boundary = draw(st.integers(0, 2))
    ids = draw(st.lists(st.text("abcxyz0123", min_size=1, max_size=4), unique=True, max_size=8))
    curves = []
    for cid in ids:
        cls = None if boundary else Gf2Vector(g, draw(st.integers(0, (1 << 2 * g) - 1)))
        curves.append(Curve(cid, cls, draw(st.text(max_size=10))))
    counts = {}
    for i, a in enumerate(ids):
        for b in ids[i + 1:]:
            counts[(a, b)] = draw(st.integers(0, 3))
    return CurveSystem(g, boundary, draw(st.integers(0, 3)), tuple(curves), counts)


class TestModel:
    def test_normalization(self):
        sys = small_system()
        assert sys.ids == ["a", "b", "c"]
        assert dict(sys.intersections) == {("a", "b"): 1, ("a", "c"): 1, ("b", "c"): 1}
        assert sys.count("c", "a") == 1 and sys.count("a", "a") == 0

    def test_zero_counts_dropped(self):
        sys = small_system().with_count("a", "b", 0)
        assert ("a", "b") not in sys.intersections
        assert sys.count("a", "b") == 0

    def test_conflicting_duplicate_pair(self):
        with pytest.raises(FormatError):
            CurveSystem(1, 0, 1, (Curve("a"), Curve("b")), [("a", "b", 1), ("b", "a", 2)])

    def test_self_pair(self):
        with pytest.raises(FormatError):
            CurveSystem(1, 0, 1, (Curve("a"),), {("a", "a"): 1})

    def test_equality_ignores_input_order(self):
        a = small_system()
        b = CurveSystem(1, 0, 1, tuple(reversed(a.curves)), dict(a.intersections))
        assert a == b
        assert a != a.with_k(2)

    def test_graph_flavors(self):
        sys = small_system().with_count("a", "b", 2)
        assert len(intersection_graph(sys).edges) == 3
        odd = intersection_graph(sys, "odd")
        assert odd.edges == frozenset({("a", "c"), ("b", "c")})
        assert odd.is_independent(["a", "b"])

    def test_graph_degrees(self):
        g = IntersectionGraph.from_adjacency(4, [(0, 1), (1, 2)])
        assert g.degrees() == {"0": 1, "1": 2, "2": 1, "3": 0}
        assert g.average_degree() == 1
        assert not g.is_complete() and not g.is_edgeless()

    def test_dot(self):
        dot = intersection_graph(small_system(), Flavor.ODD).to_dot("G_odd")
        assert dot.startswith("graph G_odd {")
        assert dot.count(" -- ") == 3


class TestIO:
    def test_round_trip(self):
        sys = small_system()
        assert loads(dumps(sys)) == sys

    def test_byte_stable(self):
        sys = small_system()
        assert dumps(loads(dumps(sys))) == dumps(sys)
        assert dumps(sys).endswith("}\n")

    @given(systems())
    def test_round_trip_property(self, sys):
        text = dumps(sys)
        back = loads(text)
        assert back == sys
        assert dumps(back) == text

    def test_stream_and_path(self, tmp_path):
        sys = small_system()
        buf = io.StringIO()
        write_system(sys, buf)
        assert read_system(io.StringIO(buf.getvalue())) == sys
        path = tmp_path / "s.json"
        write_system(sys, path)
        assert read_system(path) == sys
        assert [p.name for p in tmp_path.iterdir()] == ["s.json"]

    def doc(self):
        return to_document(small_system())

    @pytest.mark.parametrize(
        "mutate, location",
        [
            (lambda d: d.pop("genus"), "$"),
            (lambda d: d.update(genus=0), "$.genus"),
            (lambda d: d["curves"][1].pop("class"), "$.curves[1]"),
            (lambda d: d["curves"][0].update({"class": "101"}), "$.curves[0].class"),
            (lambda d: d["curves"][0].update({"class": "1x"}), "$.curves[0].class"),
            (lambda d: d["curves"][2].update(id="a"), "$.curves[2].id"),
            (lambda d: d["intersections"][0].__setitem__(1, "zz"), "$.intersections[0][1]"),
            (lambda d: d["intersections"][0].__setitem__(2, -1), "$.intersections[0][2]"),
            (lambda d: d["intersections"].append(["a", "a", 1]), "$.intersections[3]"),
            (lambda d: d["intersections"].append(["b", "a", 5]), "$.intersections[3]"),
            (lambda d: d.update(extra=1), "$"),
        ],
    )
    def test_format_errors(self, mutate, location):
        d = self.doc()
        mutate(d)
        with pytest.raises(FormatError) as exc:
            from_document(d)
        assert exc.value.location == location

    def test_class_with_boundary_rejected(self):
        d = self.doc()
        d["boundary"] = 1
        with pytest.raises(FormatError) as exc:
            from_document(d)
        assert exc.value.location == "$.curves[0].class"

    def test_duplicate_equal_pair_accepted(self):
        d = self.doc()
        d["intersections"].append(["b", "a", 1])
        assert from_document(d) == small_system()

    def test_invalid_json(self):
        with pytest.raises(FormatError, match="invalid JSON"):
            loads("{")

    def test_zero_pairs_omitted(self):
        text = dumps(small_system().with_count("a", "b", 0))
        assert json.loads(text)["intersections"] == [["a", "c", 1], ["b", "c", 1]]
