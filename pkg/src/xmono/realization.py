"""Exact-rational polylines and the graph <-> curve-family round trip.

Coordinates are :class:`fractions.Fraction`; no predicate ever sees a float.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, PreconditionError
from .ordered import OrderedGraph, double_closures, is_double_magical, is_magical

Point = tuple[Fraction, Fraction]
KINDS = ("grounded", "split", "generic")


@dataclass(frozen=True)
class Polyline:
    """Strictly x-monotone polyline; a single point is allowed."""

    id: int
    points: tuple[Point, ...]

    def __post_init__(self) -> None:
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        if not pts:
            raise InputError(f"curve {self.id} has no points")
        for (x0, _), (x1, _) in zip(pts, pts[1:]):
            if x1 <= x0:
                raise InputError(f"curve {self.id} is not strictly x-monotone at x={x1}")
        object.__setattr__(self, "points", pts)

    @property
    def xmin(self) -> Fraction:
        return self.points[0][0]

    @property
    def xmax(self) -> Fraction:
        return self.points[-1][0]

    def y_at(self, x: Fraction) -> Fraction:
        """Height of the curve above ``x`` (which must lie in its x-range)."""
        pts = self.points
        if not self.xmin <= x <= self.xmax:
            raise ValueError(f"x={x} outside curve {self.id}")
        i = bisect_left(pts, x, key=lambda p: p[0])
        if pts[i][0] == x:
            return pts[i][1]
        (x0, y0), (x1, y1) = pts[i - 1], pts[i]
        return y0 + (y1 - y0) * (x - x0) / (x1 - x0)

    def segments(self) -> list[tuple[Point, Point]]:
        if len(self.points) == 1:
            return [(self.points[0], self.points[0])]
        return list(zip(self.points, self.points[1:]))


@dataclass(frozen=True)
class CurveFamily:
    curves: tuple[Polyline, ...]
    kind: str = "generic"

    def __post_init__(self) -> None:
        curves = tuple(self.curves)
        object.__setattr__(self, "curves", curves)
        if self.kind not in KINDS:
            raise InputError(f"unknown curve family kind {self.kind!r}")
        ids = sorted(c.id for c in curves)
        if ids != list(range(1, len(curves) + 1)):
            raise InputError("curve ids must be exactly 1..n")
        if self.kind == "grounded":
            for c in curves:
                if c.xmin != 0:
                    raise InputError(f"grounded curve {c.id} does not start on x=0")
            starts = [c.points[0][1] for c in curves]
            if len(set(starts)) != len(starts):
                raise InputError("grounded curves share a starting height")
        elif self.kind == "split":
            for c in curves:
                if not c.xmin <= 0 <= c.xmax:
                    raise InputError(f"curve {c.id} does not meet x=0")

    def by_id(self) -> dict[int, Polyline]:
        return {c.id: c for c in self.curves}


def _orient(p: Point, q: Point, r: Point) -> int:
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def _in_box(p: Point, q: Point, r: Point) -> bool:
    """``r`` lies in the bounding box of ``pq``."""
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Closed segments meet (touching and collinear overlap included)."""
    d1 = _orient(q1, q2, p1)
    d2 = _orient(q1, q2, p2)
    d3 = _orient(p1, p2, q1)
    d4 = _orient(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and _in_box(q1, q2, p1))
        or (d2 == 0 and _in_box(q1, q2, p2))
        or (d3 == 0 and _in_box(p1, p2, q1))
        or (d4 == 0 and _in_box(p1, p2, q2))
    )


def curves_intersect(a: Polyline, b: Polyline) -> bool:
    if a.xmax < b.xmin or b.xmax < a.xmin:
        return False
    sa, sb = a.segments(), b.segments()
    i = j = 0
    while i < len(sa) and j < len(sb):
        (p1, p2), (q1, q2) = sa[i], sb[j]
        if p1[0] <= q2[0] and q1[0] <= p2[0] and segments_intersect(p1, p2, q1, q2):
            return True
        if p2[0] < q2[0]:
            i += 1
        elif q2[0] < p2[0]:
            j += 1
        else:
            i += 1
            j += 1
    return False


def _order_by(keys: dict[int, Fraction], what: str) -> list[int]:
    if len(set(keys.values())) != len(keys):
        raise InputError(f"tie in {what}; perturb the curves")
    return sorted(keys, key=keys.__getitem__)


def disjointness_graph(fam: CurveFamily, attach_orders: bool = True) -> OrderedGraph:
    """Edge between two curves iff they are disjoint.

    Orders attached by kind: grounded -> (start height, right end x);
    split -> (height at x=0, left reach, right reach); generic -> identity.
    """
    curves = sorted(fam.curves, key=lambda c: c.id)
    n = len(curves)
    edges = [
        (a.id, b.id)
        for i, a in enumerate(curves)
        for b in curves[i + 1:]
        if not curves_intersect(a, b)
    ]
    if not attach_orders or fam.kind == "generic":
        return OrderedGraph(n, edges)
    if fam.kind == "grounded":
        orders = [
            _order_by({c.id: c.points[0][1] for c in curves}, "left endpoint height"),
            _order_by({c.id: c.xmax for c in curves}, "right endpoint x"),
        ]
    else:
        orders = [
            _order_by({c.id: c.y_at(Fraction(0)) for c in curves}, "height at x=0"),
            _order_by({c.id: -c.xmin for c in curves}, "left endpoint reach"),
            _order_by({c.id: c.xmax for c in curves}, "right endpoint x"),
        ]
    return OrderedGraph(n, edges, orders)


def _grounded_points(g: OrderedGraph, second: int) -> dict[int, list[Point]]:
    """Piecewise construction over the ranks of (o1, o<second>)."""
    n = g.n
    y = g.ranks[0]
    x = g.ranks[second - 1]
    by_x = {x[v]: v for v in range(1, n + 1)}
    out: dict[int, list[Point]] = {}
    for v in range(1, n + 1):
        yv = Fraction(y[v])
        pts: list[Point] = [(Fraction(0), yv)]
        for i in range(1, x[v] + 1):
            u = by_x[i]
            if u != v and not g.has_edge(u, v):
                if y[u] < y[v]:
                    bend = (i - Fraction(2, 3), y[u] - Fraction(1, 10) + Fraction(y[v], 10 * n))
                else:
                    bend = (i - Fraction(1, 3), y[u] + Fraction(y[v], 10 * n))
                pts.append(bend)
            pts.append((Fraction(i), yv))
        out[v] = pts
    return out


def realize_magical(g: OrderedGraph) -> CurveFamily:
    """Grounded curves whose disjointness graph is ``g``.

    Curve ``v`` starts at ``(0, y)`` with ``y`` its o1 rank and runs to
    ``x`` equal to its o2 rank, crossing the unit strip of the vertex ranked
    ``i`` in o2 either flat (when adjacent or itself) or with a bend that
    makes it hit that vertex's flat piece.
    """
    verdict = is_magical(g)
    if not verdict:
        raise PreconditionError(f"graph is not magical; violating triple {verdict.violations[0]}")
    pts = _grounded_points(g, 2)
    return CurveFamily(tuple(Polyline(v, tuple(pts[v])) for v in range(1, g.n + 1)), "grounded")


def realize_double_magical(g: OrderedGraph) -> CurveFamily:
    """Curves crossing x=0 whose disjointness graph is ``g``.

    The (o1,o2)-closure is realized mirrored on the left, the
    (o1,o3)-closure on the right, glued at ``(0, o1 rank)``; this matches the
    orders read back by :func:`disjointness_graph`.
    """
    verdict = is_double_magical(g)
    if not verdict:
        raise PreconditionError(f"graph is not double-magical; extra closure edge {verdict.violations[0]}")
    left_graph, right_graph = double_closures(g)
    left = _grounded_points(left_graph, 2)
    right = _grounded_points(right_graph, 3)
    curves = []
    for v in range(1, g.n + 1):
        mirrored = [(-px, py) for px, py in reversed(left[v])]
        curves.append(Polyline(v, tuple(mirrored + right[v][1:])))
    return CurveFamily(tuple(curves), "split")


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def emit_curves(fam: CurveFamily) -> str:
    lines = ["curves 1", f"kind {fam.kind}"]
    for c in sorted(fam.curves, key=lambda c: c.id):
        coords = [_fmt(t) for p in c.points for t in p]
        lines.append(" ".join(["curve", str(c.id), *coords]))
    return "\n".join(lines) + "\n"


def _rational(tok: str, lineno: int) -> Fraction:
    try:
        if "/" in tok:
            num, den = tok.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(tok))
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad rational {tok!r}", lineno) from None


def parse_curves(text: str) -> CurveFamily:
    kind = "generic"
    curves: list[Polyline] = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            if line.split() != ["curves", "1"]:
                raise InputError("expected header 'curves 1'", lineno)
            seen_header = True
            continue
        head, *rest = line.split()
        if head == "kind":
            if len(rest) != 1 or rest[0] not in KINDS:
                raise InputError("kind must be grounded, split or generic", lineno)
            kind = rest[0]
        elif head == "curve":
            if len(rest) < 3 or len(rest) % 2 == 0:
                raise InputError("curve needs an id and x y pairs", lineno)
            try:
                cid = int(rest[0])
            except ValueError:
                raise InputError(f"bad curve id {rest[0]!r}", lineno) from None
            vals = [_rational(t, lineno) for t in rest[1:]]
            try:
                curves.append(Polyline(cid, tuple(zip(vals[0::2], vals[1::2]))))
            except InputError as exc:
                raise InputError(str(exc), lineno) from None
        else:
            raise InputError(f"unknown directive {head!r}", lineno)
    if not seen_header:
        raise InputError("empty input, expected 'curves 1'")
    return CurveFamily(tuple(curves), kind)


def family_from_points(point_lists: Sequence[Iterable[tuple]], kind: str = "generic") -> CurveFamily:
    """Convenience: number the given point lists 1..n."""
    return CurveFamily(
        tuple(Polyline(i, tuple(pts)) for i, pts in enumerate(point_lists, start=1)), kind
    )
