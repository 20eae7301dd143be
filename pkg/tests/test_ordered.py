from __future__ import annotations

import itertools

import pytest

from conftest import NO_WITNESS8_EDGES, complete
from xmono.errors import InputError
from xmono.generators import random_double_magical_graph, random_ordered_graph
from xmono.oracle import closure_oracle
from xmono.ordered import (
    OrderedGraph,
    emit_ograph,
    extract_partial_orders,
    is_double_magical,
    is_magical,
    is_mountain_path,
    is_semi_comparability,
    magical_closure,
    parse_ograph,
)

ID3 = (1, 2, 3)
PATH3 = [(1, 2), (2, 3)]


def brute_semi_violations(g):
    r1 = g.ranks[0]
    out = []
    for quad in itertools.combinations(sorted(range(1, g.n + 1), key=r1.__getitem__), 4):
        a, b, c, d = quad
        if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(c, d):
            if not g.has_edge(a, c) and not g.has_edge(b, d):
                out.append(quad)
    return out


def brute_magical_violations(g):
    r1, r2 = g.ranks[0], g.ranks[1]
    out = []
    for a, b, c in itertools.combinations(sorted(range(1, g.n + 1), key=r1.__getitem__), 3):
        if g.has_edge(a, b) and g.has_edge(b, c) and not g.has_edge(a, c):
            if not (r2[b] < r2[a] and r2[b] < r2[c]):
                out.append((a, b, c))
    return out


class TestModel:
    def test_defaults_to_identity_o1(self):
        g = OrderedGraph(3, [(2, 1)])
        assert g.orders == ((1, 2, 3),)
        assert g.edges == {(1, 2)}

    @pytest.mark.parametrize(
        "edges, orders",
        [([(1, 4)], None), ([(2, 2)], None), ([], [(1, 2, 2)]), ([], [ID3] * 4)],
    )
    def test_rejects_malformed(self, edges, orders):
        with pytest.raises(InputError):
            OrderedGraph(3, edges, orders)

    def test_induced_keeps_relative_orders(self):
        g = OrderedGraph(4, [(1, 3), (3, 4)], [(4, 3, 2, 1), (2, 4, 1, 3)])
        sub, original = g.induced([1, 3, 4])
        assert original == (1, 3, 4)
        assert sub.orders == ((3, 2, 1), (3, 1, 2))
        assert sub.edges == {(1, 2), (2, 3)}


class TestSemiComparability:
    def test_p4_is_forbidden_pattern(self):
        v = is_semi_comparability(OrderedGraph(4, [(1, 2), (2, 3), (3, 4)]))
        assert not v
        assert v.violations == [(1, 2, 3, 4)]

    def test_k4(self):
        assert is_semi_comparability(complete(4))

    def test_no_witness8(self, no_witness8):
        assert no_witness8.n == 8 and len(no_witness8.edges) == 15
        assert set(no_witness8.edges) == {tuple(sorted(e)) for e in NO_WITNESS8_EDGES}
        assert is_semi_comparability(no_witness8)

    def test_matches_bruteforce(self, rng):
        for _ in range(150):
            g = random_ordered_graph(rng, int(rng.integers(4, 9)), float(rng.uniform(0.2, 0.7)), 1)
            assert is_semi_comparability(g).violations == brute_semi_violations(g)


class TestMagical:
    def test_middle_first_in_o2(self):
        assert is_magical(OrderedGraph(3, PATH3, [ID3, (2, 1, 3)]))

    def test_identity_o2_fails(self):
        v = is_magical(OrderedGraph(3, PATH3, [ID3, ID3]))
        assert not v and v.violations == [(1, 2, 3)]

    def test_edgeless(self, rng):
        for _ in range(5):
            assert is_magical(random_ordered_graph(rng, 6, 0.0, 2))

    def test_missing_o2(self):
        with pytest.raises(InputError):
            is_magical(OrderedGraph(3, PATH3))

    def test_matches_bruteforce(self, rng):
        for _ in range(150):
            g = random_ordered_graph(rng, int(rng.integers(3, 9)), float(rng.uniform(0.2, 0.7)), 2)
            assert is_magical(g).violations == brute_magical_violations(g)


class TestClosure:
    def test_rule_fires_once(self):
        g = magical_closure(OrderedGraph(3, PATH3, [ID3, ID3]))
        assert g.edges == {(1, 2), (2, 3), (1, 3)}

    def test_rule_never_fires(self):
        g = OrderedGraph(3, PATH3, [ID3, (2, 1, 3)])
        assert magical_closure(g) == g

    def test_path_becomes_complete(self):
        ident = (1, 2, 3, 4)
        g = OrderedGraph(4, [(1, 2), (2, 3), (3, 4)], [ident, ident])
        expected = closure_oracle(g)
        assert expected.edges == complete(4).edges
        assert magical_closure(g) == expected

    def test_closure_over_o3(self):
        g = OrderedGraph(3, PATH3, [ID3, (2, 1, 3), ID3])
        assert magical_closure(g, 2).edges == set(PATH3)
        assert magical_closure(g, 3).edges == {(1, 2), (2, 3), (1, 3)}


class TestMountainPath:
    def test_single_vertex(self):
        assert is_mountain_path(OrderedGraph(1, [], [(1,), (1,)]), [1])

    def test_endpoint_precedes_interior(self):
        assert is_mountain_path(OrderedGraph(3, PATH3, [ID3, ID3]), [1, 2, 3])

    def test_interior_first_in_o2(self):
        # neither 1 <2 2 nor 3 <2 2: vertex 2 leads the second order
        assert not is_mountain_path(OrderedGraph(3, PATH3, [ID3, (2, 1, 3)]), [1, 2, 3])

    def test_not_increasing(self):
        assert not is_mountain_path(OrderedGraph(3, PATH3, [ID3, ID3]), [3, 2, 1])

    def test_duplicates_rejected(self):
        with pytest.raises(InputError):
            is_mountain_path(OrderedGraph(3, PATH3, [ID3, ID3]), [1, 2, 1])


class TestDoubleMagical:
    def test_edgeless(self):
        assert is_double_magical(OrderedGraph(4, [], [(1, 2, 3, 4)] * 3))

    def test_complete(self):
        assert is_double_magical(complete(4, [(1, 2, 3, 4)] * 3))

    def test_path_identity(self):
        g = OrderedGraph(3, PATH3, [ID3] * 3)
        c2, c3 = magical_closure(g, 2), magical_closure(g, 3)
        assert (1, 3) in c2.edges & c3.edges
        v = is_double_magical(g)
        assert not v and v.violations == [(1, 3)]


class TestPartialOrders:
    @pytest.mark.parametrize(
        "o2, o3, which",
        [((1, 2), (1, 2), 0), ((2, 1), (2, 1), 1), ((1, 2), (2, 1), 2), ((2, 1), (1, 2), 3)],
    )
    def test_single_edge_assignment(self, o2, o3, which):
        po = extract_partial_orders(OrderedGraph(2, [(1, 2)], [(1, 2), o2, o3]))
        for i, rel in enumerate(po.relations):
            assert rel == ({(1, 2)} if i == which else set())

    def test_edgeless(self):
        po = extract_partial_orders(OrderedGraph(3, [], [ID3] * 3))
        assert all(not r for r in po.relations) and po.transitive

    def test_partition_of_edges(self, rng):
        for _ in range(30):
            g = random_ordered_graph(rng, 7, 0.5, 3)
            po = extract_partial_orders(g)
            union = set().union(*po.relations)
            assert sum(len(r) for r in po.relations) == len(g.edges)
            assert {tuple(sorted(e)) for e in union} == set(g.edges)

    def test_double_magical_properties(self, rng):
        for _ in range(60):
            g = random_double_magical_graph(rng, int(rng.integers(3, 10)), float(rng.uniform(0.2, 0.6)))
            po = extract_partial_orders(g)
            assert po.transitive
            rel = po.relations
            # a <1 b and b <i c imply ac; a <i b and b <2 c imply ac
            for a, b in rel[0]:
                for i in range(4):
                    for b2, c in rel[i]:
                        if b2 == b:
                            assert g.has_edge(a, c)
            for i in range(4):
                for a, b in rel[i]:
                    for b2, c in rel[1]:
                        if b2 == b:
                            assert g.has_edge(a, c)


class TestFormat:
    def test_minimal(self):
        g = parse_ograph("ograph 1\nvertices 1\n")
        assert g.n == 1 and not g.edges and g.orders == ((1,),)

    def test_no_witness8_round_trip_bytes(self, data_dir):
        text = (data_dir / "no_witness8.ograph").read_text()
        assert emit_ograph(parse_ograph(text)) == text

    def test_round_trip(self, rng):
        for _ in range(40):
            g = random_ordered_graph(rng, int(rng.integers(0, 9)), 0.4, int(rng.integers(1, 4)))
            assert parse_ograph(emit_ograph(g)) == g

    def test_canonical_edge_order_and_comments(self):
        text = "# hi\nograph 1\nvertices 3  # three\norder o2 3 2 1\nedge 3 2\nedge 1 2\n"
        out = emit_ograph(parse_ograph(text))
        assert out == "ograph 1\nvertices 3\norder o1 1 2 3\norder o2 3 2 1\nedge 1 2\nedge 2 3\n"

    @pytest.mark.parametrize(
        "text, line",
        [
            ("ograph 2\nvertices 1\n", 1),
            ("ograph 1\nvertices 3\norder o1 1 1 2\n", 3),
            ("ograph 1\nvertices 3\nedge 1 4\n", 3),
            ("ograph 1\nvertices 3\n\nedge 2 2\n", 4),
            ("ograph 1\nvertices 3\nfoo 1\n", 3),
            ("ograph 1\nedge 1 2\n", 2),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(InputError) as exc:
            parse_ograph(text)
        assert exc.value.line == line
