from __future__ import annotations

import xml.etree.ElementTree as ET
from fractions import Fraction as F

import pytest

from xmono.coloring import color_xmonotone
from xmono.errors import InputError, PreconditionError
from xmono.generators import (
    random_double_magical_graph,
    random_grounded_family,
    random_magical_graph,
    random_polyline_family,
)
from xmono.ordered import OrderedGraph, is_magical, is_semi_comparability
from xmono.realization import (
    CurveFamily,
    Polyline,
    curves_intersect,
    disjointness_graph,
    emit_curves,
    family_from_points,
    parse_curves,
    realize_double_magical,
    realize_magical,
    segments_intersect,
)
from xmono.svg import emit_svg


def P(x, y):
    return (F(x), F(y))


class TestSegments:
    @pytest.mark.parametrize(
        "seg_a, seg_b, meet",
        [
            ((P(0, 0), P(2, 2)), (P(0, 2), P(2, 0)), True),
            ((P(0, 0), P(1, 0)), (P(1, 0), P(2, 1)), True),  # shared endpoint
            ((P(0, 0), P(2, 0)), (P(1, 0), P(1, 1)), True),  # T junction
            ((P(0, 0), P(2, 0)), (P(1, 0), P(3, 0)), True),  # collinear overlap
            ((P(0, 0), P(1, 0)), (P(2, 0), P(3, 0)), False),  # collinear apart
            ((P(0, 0), P(2, 0)), (P(0, 1), P(2, 1)), False),
            ((P(0, 0), P(2, 2)), (P(1, 2), P(3, 4)), False),
        ],
    )
    def test_cases(self, seg_a, seg_b, meet):
        assert segments_intersect(*seg_a, *seg_b) is meet
        assert segments_intersect(*seg_b, *seg_a) is meet

    def test_tiny_gap_is_exact(self):
        eps = F(1, 10**30)
        a = Polyline(1, (P(0, 0), P(1, 0)))
        b = Polyline(2, ((F(0), eps), (F(1), eps)))
        c = Polyline(3, ((F(0), eps), (F(1), -eps)))
        assert not curves_intersect(a, b)
        assert curves_intersect(a, c)


class TestPolyline:
    def test_y_at(self):
        c = Polyline(1, (P(0, 0), P(2, 4), P(3, 1)))
        assert c.y_at(F(1)) == 2
        assert c.y_at(F(2)) == 4
        assert c.y_at(F(5, 2)) == F(5, 2)

    def test_requires_monotone(self):
        with pytest.raises(InputError):
            Polyline(1, (P(0, 0), P(0, 1)))

    def test_single_point(self):
        dot = Polyline(1, (P(1, 1),))
        line = Polyline(2, (P(0, 1), P(2, 1)))
        assert curves_intersect(dot, line)

    def test_family_validation(self):
        with pytest.raises(InputError):
            family_from_points([[(1, 0), (2, 0)]], "grounded")
        with pytest.raises(InputError):
            family_from_points([[(0, 0), (2, 0)], [(0, 0), (1, 5)]], "grounded")
        with pytest.raises(InputError):
            family_from_points([[(1, 0), (2, 0)]], "split")
        with pytest.raises(InputError):
            CurveFamily((Polyline(2, (P(0, 0),)),))


class TestDisjointness:
    def test_grounded_orders(self):
        fam = family_from_points([[(0, 2), (1, 2)], [(0, 1), (3, 1)], [(0, 3), (2, 0)]], "grounded")
        g = disjointness_graph(fam)
        assert g.orders == ((2, 1, 3), (1, 3, 2))
        # curve 3 descends through both others
        assert g.edges == {(1, 2)}

    def test_split_orders(self):
        fam = family_from_points([[(-1, 0), (1, 0)], [(-2, 1), (3, 1)]], "split")
        g = disjointness_graph(fam)
        assert g.orders == ((1, 2), (1, 2), (1, 2))
        assert g.edges == {(1, 2)}

    def test_tie_rejected(self):
        fam = family_from_points([[(0, 0), (1, 0)], [(0, 1), (1, 1)]], "grounded")
        with pytest.raises(InputError):
            disjointness_graph(fam)

    def test_grounded_families_are_magical(self, rng):
        for _ in range(40):
            g = disjointness_graph(random_grounded_family(rng, int(rng.integers(1, 15))))
            assert is_magical(g)
            assert is_semi_comparability(g)


class TestRealize:
    def test_single_edge(self):
        g = OrderedGraph(2, [(1, 2)], [(1, 2), (1, 2)])
        fam = realize_magical(g)
        assert disjointness_graph(fam) == g

    def test_single_nonedge_bends(self):
        g = OrderedGraph(2, [], [(1, 2), (1, 2)])
        fam = realize_magical(g)
        # the longer curve dips to meet the lower curve's flat piece
        assert fam.by_id()[1].points == (P(0, 1), P(1, 1))
        assert fam.by_id()[2].points == (P(0, 2), (F(1, 3), F(1)), P(1, 2), P(2, 2))
        assert disjointness_graph(fam) == g

    def test_rejects_non_magical(self):
        ident = (1, 2, 3)
        with pytest.raises(PreconditionError):
            realize_magical(OrderedGraph(3, [(1, 2), (2, 3)], [ident, ident]))

    def test_magical_round_trip(self, rng):
        for _ in range(60):
            g = random_magical_graph(rng, int(rng.integers(1, 10)), float(rng.uniform(0.1, 0.6)))
            fam = realize_magical(g)
            assert fam.kind == "grounded"
            assert disjointness_graph(fam) == g

    def test_double_magical_round_trip(self, rng):
        for _ in range(40):
            g = random_double_magical_graph(rng, int(rng.integers(1, 10)), float(rng.uniform(0.1, 0.6)))
            fam = realize_double_magical(g)
            assert fam.kind == "split"
            assert disjointness_graph(fam) == g

    def test_rejects_non_double_magical(self):
        ident = (1, 2, 3)
        with pytest.raises(PreconditionError):
            realize_double_magical(OrderedGraph(3, [(1, 2), (2, 3)], [ident] * 3))


class TestCurveFormat:
    def test_round_trip(self, rng):
        for _ in range(20):
            fam = random_polyline_family(rng, int(rng.integers(1, 10)))
            assert parse_curves(emit_curves(fam)) == fam

    def test_text(self):
        fam = family_from_points([[(0, F(1, 3)), (2, -1)]], "grounded")
        assert emit_curves(fam) == "curves 1\nkind grounded\ncurve 1 0 1/3 2 -1\n"

    @pytest.mark.parametrize(
        "text, line",
        [
            ("curve 1 0 0\n", 1),
            ("curves 1\ncurve 1 0 0 1\n", 2),
            ("curves 1\nkind wavy\n", 2),
            ("curves 1\n# c\ncurve 1 0 1/0\n", 3),
            ("curves 1\ncurve 1 1 0 0 0\n", 2),
        ],
    )
    def test_errors(self, text, line):
        with pytest.raises(InputError) as exc:
            parse_curves(text)
        assert exc.value.line == line


class TestSvg:
    def test_structure(self, rng):
        fam = random_polyline_family(rng, 6)
        root = ET.fromstring(emit_svg(fam))
        paths = root.findall("{http://www.w3.org/2000/svg}path")
        assert [p.get("id") for p in paths] == [f"curve-{i}" for i in range(1, 7)]

    def test_ground_line_and_colours(self, rng):
        fam = random_grounded_family(rng, 5)
        text = emit_svg(fam, color_xmonotone(fam))
        root = ET.fromstring(text)
        ns = "{http://www.w3.org/2000/svg}"
        assert root.find(f"{ns}line").get("class") == "ground"
        assert all(p.get("stroke").startswith("#") for p in root.findall(f"{ns}path"))

    def test_y_flipped(self):
        fam = family_from_points([[(0, 0), (1, 2)]])
        root = ET.fromstring(emit_svg(fam))
        path = root.find("{http://www.w3.org/2000/svg}path")
        assert path.get("d") == "M0 0 L1 -2"
