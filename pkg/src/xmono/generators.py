"""Seeded random instances for tests, demos and benchmarks."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .ordered import OrderedGraph, magical_closure
from .realization import CurveFamily, Polyline


def _perm(rng: np.random.Generator, n: int) -> list[int]:
    return [int(v) + 1 for v in rng.permutation(n)]


def random_ordered_graph(
    rng: np.random.Generator, n: int, p: float = 0.4, num_orders: int = 2
) -> OrderedGraph:
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < p]
    orders = [_perm(rng, n) for _ in range(num_orders)]
    return OrderedGraph(n, edges, orders)


def random_magical_graph(rng: np.random.Generator, n: int, p: float = 0.3) -> OrderedGraph:
    """Closure of a random double-ordered graph."""
    return magical_closure(random_ordered_graph(rng, n, p, 2))


def random_double_magical_graph(rng: np.random.Generator, n: int, p: float = 0.3) -> OrderedGraph:
    """Intersection of the two closures of a random triple-ordered graph.

    The result is its own closure-intersection, hence double-magical.
    """
    g = random_ordered_graph(rng, n, p, 3)
    c2, c3 = magical_closure(g, 2), magical_closure(g, 3)
    return g.with_edges(c2.edges & c3.edges)


def _grid(rng: np.random.Generator, lo: int, hi: int, den: int) -> Fraction:
    return Fraction(int(rng.integers(lo * den, hi * den + 1)), den)


def random_polyline(
    rng: np.random.Generator, cid: int, xmin: Fraction, xmax: Fraction, height: int, den: int
) -> Polyline:
    inner = int(rng.integers(0, 3))
    xs = {xmin, xmax}
    span = xmax - xmin
    for _ in range(inner):
        if span > 0:
            xs.add(xmin + span * Fraction(int(rng.integers(1, 8)), 8))
    xs_sorted = sorted(xs)
    pts = [(x, _grid(rng, 0, height, den)) for x in xs_sorted]
    return Polyline(cid, tuple(pts))


def random_polyline_family(
    rng: np.random.Generator, n: int, width: int = 10, height: int = 6, den: int = 2
) -> CurveFamily:
    """Generic x-monotone polylines on a coarse rational grid (touching happens)."""
    curves = []
    for cid in range(1, n + 1):
        a = _grid(rng, 0, width, den)
        b = _grid(rng, 0, width, den)
        lo, hi = min(a, b), max(a, b)
        if lo == hi:
            hi = lo + Fraction(1, den)
        curves.append(random_polyline(rng, cid, lo, hi, height, den))
    return CurveFamily(tuple(curves), "generic")


def random_grounded_family(
    rng: np.random.Generator, n: int, width: int = 8, height: int = 6
) -> CurveFamily:
    """Grounded polylines with distinct start heights and distinct right ends."""
    starts = rng.choice(np.arange(1, 4 * n + 1), size=n, replace=False)
    ends = rng.choice(np.arange(1, 4 * n + 1), size=n, replace=False)
    curves = []
    for cid, (s, e) in enumerate(zip(starts, ends), start=1):
        xmax = Fraction(int(e) * width, 4 * n)
        inner = sorted({Fraction(int(rng.integers(1, 16)), 16) * xmax for _ in range(int(rng.integers(0, 4)))})
        pts = [(Fraction(0), Fraction(int(s) * height, 4 * n))]
        pts += [(x, _grid(rng, 0, height, 4)) for x in inner if 0 < x < xmax]
        pts.append((xmax, _grid(rng, 0, height, 4)))
        curves.append(Polyline(cid, tuple(pts)))
    return CurveFamily(tuple(curves), "grounded")
