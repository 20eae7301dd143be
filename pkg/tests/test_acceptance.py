"""Acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py -v`` to get a PASS/FAIL line per
criterion in the terminal summary.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from xmono.cli import main
from xmono.coloring import (
    color_double_magical,
    color_semi_comparability,
    color_xmonotone,
    double_magical_bound,
    semi_comparability_bound,
    xmonotone_bound,
)
from xmono.construction import (
    check_lex,
    construct,
    find_hole_triangles,
    s_set,
    verify_claim,
)
from xmono.generators import (
    random_double_magical_graph,
    random_grounded_family,
    random_magical_graph,
    random_ordered_graph,
    random_polyline_family,
)
from xmono.oracle import clique_number, closure_oracle, witness_search
from xmono.ordered import (
    is_double_magical,
    is_magical,
    is_semi_comparability,
    magical_closure,
)
from xmono.realization import disjointness_graph, realize_double_magical, realize_magical

WITNESS_SECONDS = 10.0
CLAIM_SECONDS = 60.0


def _corpus(seed, count, make):
    rng = np.random.default_rng(seed)
    return [make(rng) for _ in range(count)]


@pytest.fixture(scope="module")
def magical_corpus():
    return _corpus(101, 200, lambda r: random_magical_graph(r, int(r.integers(1, 10)), float(r.uniform(0.1, 0.6))))


@pytest.fixture(scope="module")
def double_corpus():
    return _corpus(
        202, 100, lambda r: random_double_magical_graph(r, int(r.integers(1, 10)), float(r.uniform(0.1, 0.6)))
    )


def test_c1_no_witness_certificate(data_dir, capsys):
    path = str(data_dir / "no_witness8.ograph")
    assert main(["check", path, "--kind", "semi"]) == 0
    start = time.perf_counter()
    assert main(["oracle", path, "--stat", "witness"]) == 0
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    assert out.endswith("none\norders_covered: 40320\n")
    assert elapsed < WITNESS_SECONDS
    print(f"c1: semi pass, witness none, 40320 orders in {elapsed:.2f}s")


def test_c2_closure_equivalence():
    rng = np.random.default_rng(303)
    for _ in range(500):
        g = random_ordered_graph(rng, int(rng.integers(1, 8)), float(rng.uniform(0.1, 0.7)), 2)
        c = magical_closure(g)
        assert c == closure_oracle(g)
        assert g.edges <= c.edges
        assert magical_closure(c) == c
    print("c2: 500/500 closures equal the mountain-path oracle")


def test_c3_realization_round_trip(magical_corpus, double_corpus):
    for g in magical_corpus:
        assert disjointness_graph(realize_magical(g)) == g
    for g in double_corpus:
        assert disjointness_graph(realize_double_magical(g)) == g
    print("c3: 200 magical and 100 double-magical round trips exact")


def test_c4_coloring_bounds(magical_corpus, double_corpus):
    for g in magical_corpus:
        c = color_semi_comparability(g)
        assert c.is_proper(g)
        assert c.palette_size <= semi_comparability_bound(clique_number(g))
    for g in double_corpus:
        c = color_double_magical(g)
        assert c.is_proper(g)
        omega = clique_number(g)
        assert c.palette_size <= double_magical_bound(omega)
        assert 2 * double_magical_bound(omega) == (omega + 1) * (omega + 2) * (omega + 1) * omega // 6
    rng = np.random.default_rng(404)
    worst = 0.0
    for _ in range(100):
        fam = random_polyline_family(rng, int(rng.integers(1, 31)))
        g = disjointness_graph(fam, attach_orders=False)
        c = color_xmonotone(fam)
        omega = clique_number(g)
        assert c.is_proper(g)
        assert c.palette_size <= xmonotone_bound(omega) == omega**3 * (omega + 1) // 2
        worst = max(worst, c.palette_size / xmonotone_bound(omega))
    print(f"c4: all colorings proper and within bound (worst x-monotone ratio {worst:.3f})")


@pytest.mark.parametrize(
    "claim, k", [("matrix", 2), ("matrix", 3), ("matrix", 4), ("hole3d", 2), ("hole3d", 3)]
)
def test_c5_claims_exhaustive(claim, k):
    start = time.perf_counter()
    report = verify_claim(claim, k)
    elapsed = time.perf_counter() - start
    assert report.passed and report.details["max_free_size"] == k
    assert elapsed < CLAIM_SECONDS
    print(f"c5: {claim} k={k} max free subset {k} in {elapsed:.2f}s")


def test_c5_lex_and_s_sizes():
    start = time.perf_counter()
    assert all(check_lex(k) for k in range(1, 5))
    for k in range(1, 11):
        assert len(s_set(k, "grounded")) == k * (k + 1) // 2
        assert 2 * len(s_set(k, "vertical")) == (k + 1) * (k + 2) * (k + 1) * k // 6
    elapsed = time.perf_counter() - start
    assert elapsed < CLAIM_SECONDS
    print(f"c5: lex k<=4 and s_set sizes k<=10 in {elapsed:.2f}s")


@pytest.mark.parametrize("variant", ["grounded", "vertical"])
def test_c6_construction_post_conditions(variant):
    grid = list(product((2, 3), (5, 10, 20), (Fraction(1, 5), Fraction(2, 5)), range(5)))
    for k, n, p, seed in grid:
        g, report = construct(k, n, p, seed, variant)
        assert report.checks["no_within_group_output_edges"]
        assert report.checks["no_within_group_closure_edges"]
        assert not find_hole_triangles(g)
        assert (is_magical if variant == "grounded" else is_double_magical)(g)
        assert report.omega is not None and report.omega <= k
        assert report.passed
    print(f"c6: {variant} grid of {len(grid)} runs passes all post-conditions")


def test_c7_grounded_families():
    rng = np.random.default_rng(505)
    for _ in range(100):
        fam = random_grounded_family(rng, int(rng.integers(1, 16)))
        g = disjointness_graph(fam)
        assert is_magical(g)
        assert is_semi_comparability(g.with_orders(g.orders[0]))
    print("c7: 100 grounded families magical and semi-comparability")


def test_c1_witness_search_direct(no_witness8):
    found = witness_search(no_witness8)
    assert found.order is None and found.orders_covered == 40320
