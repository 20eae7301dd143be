"""Constructive colourings with certified palette bounds.

Three algorithms:

* :func:`color_semi_comparability` -- classes by anchored clique size, then
  chain heights inside each class; at most ``C(k+1, 2)`` colours.
* :func:`color_double_magical` -- nested chain heights of the four edge
  relations; at most ``(k+1)/2 * C(k+2, 3)`` colours.
* :func:`color_xmonotone` -- split a curve family into ``k^2`` classes by
  two "below" orders, then colour each class as a semi-comparability graph.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from graphlib import CycleError, TopologicalSorter
from math import comb
from typing import Hashable, Iterable, Mapping, TYPE_CHECKING

from .errors import InputError, PreconditionError
from .ordered import (
    OrderedGraph,
    extract_partial_orders,
    is_double_magical,
    is_semi_comparability,
)

if TYPE_CHECKING:
    from .realization import CurveFamily


@dataclass
class Coloring:
    colors: dict[int, tuple[int, ...]]
    bound: int
    algorithm: str

    @property
    def palette(self) -> set[tuple[int, ...]]:
        return set(self.colors.values())

    @property
    def palette_size(self) -> int:
        return len(self.palette)

    def conflicts(self, g: OrderedGraph) -> list[tuple[int, int]]:
        return sorted((u, v) for u, v in g.edges if self.colors[u] == self.colors[v])

    def is_proper(self, g: OrderedGraph) -> bool:
        return not self.conflicts(g)


def chain_heights(
    dag: Mapping[Hashable, Iterable[Hashable]],
    direction: str = "ending",
    vertices: Iterable[Hashable] = (),
) -> dict[Hashable, int]:
    """Longest-chain length ending (or starting) at each vertex.

    ``dag`` maps a vertex to its successors.  Vertices not mentioned in the
    relation but listed in ``vertices`` get height 1.
    """
    if direction not in ("ending", "starting"):
        raise InputError(f"direction must be 'ending' or 'starting', not {direction!r}")
    preds: dict[Hashable, set[Hashable]] = {v: set() for v in vertices}
    succs: dict[Hashable, set[Hashable]] = {v: set() for v in vertices}
    for u, outs in dag.items():
        preds.setdefault(u, set())
        succs.setdefault(u, set())
        for w in outs:
            preds.setdefault(w, set()).add(u)
            succs.setdefault(w, set())
            succs[u].add(w)
    inbound = preds if direction == "ending" else succs
    try:
        order = list(TopologicalSorter(inbound).static_order())
    except CycleError as exc:
        raise InputError(f"relation has a cycle through {exc.args[1]}") from None
    height: dict[Hashable, int] = {}
    for v in order:
        height[v] = 1 + max((height[u] for u in inbound[v]), default=0)
    return height


def _max_clique_in(cand: int, adj: tuple[int, ...]) -> int:
    best = 0

    def grow(size: int, p: int) -> None:
        nonlocal best
        while p:
            if size + p.bit_count() <= best:
                return
            low = p & -p
            p ^= low
            v = low.bit_length() - 1
            sub = p & adj[v]
            if sub:
                grow(size + 1, sub)
            elif size + 1 > best:
                best = size + 1

    grow(0, cand)
    return best


def anchored_clique_size(g: OrderedGraph, v: int) -> int:
    """Largest clique whose o1-minimum is ``v``."""
    cand = g.adj_bits[v] & g.above(0)[v]
    return 1 + _max_clique_in(cand, g.adj_bits)


def clique_number_by_anchors(g: OrderedGraph) -> int:
    return max((anchored_clique_size(g, v) for v in range(1, g.n + 1)), default=0)


def semi_comparability_bound(k: int) -> int:
    return comb(k + 1, 2)


def double_magical_bound(k: int) -> int:
    return sum((k + 1 - i) * i * i for i in range(1, k + 1))


def xmonotone_bound(k: int) -> int:
    return k * k * comb(k + 1, 2)


def _oriented(g: OrderedGraph, members: set[int]) -> dict[int, set[int]]:
    r1 = g.ranks[0]
    out: dict[int, set[int]] = {v: set() for v in members}
    for u, w in g.edges:
        if u in members and w in members:
            if r1[u] < r1[w]:
                out[u].add(w)
            else:
                out[w].add(u)
    return out


def color_semi_comparability(g: OrderedGraph) -> Coloring:
    verdict = is_semi_comparability(g)
    if not verdict:
        raise PreconditionError(
            f"not a semi-comparability graph under o1; violating quadruple {verdict.violations[0]}"
        )
    f = {v: anchored_clique_size(g, v) for v in range(1, g.n + 1)}
    classes: dict[int, set[int]] = defaultdict(set)
    for v, size in f.items():
        classes[size].add(v)
    colors: dict[int, tuple[int, ...]] = {}
    for size, members in classes.items():
        heights = chain_heights(_oriented(g, members), "ending", members)
        for v in members:
            colors[v] = (size, heights[v])
    k = max(f.values(), default=0)
    return Coloring(colors, semi_comparability_bound(k), "semi")


def _restricted(succ: Mapping[int, set[int]], members: set[int]) -> dict[int, set[int]]:
    return {v: succ.get(v, set()) & members for v in members}


def color_double_magical(g: OrderedGraph) -> Coloring:
    """Colour ``v`` by ``(h, m, r, q)``.

    ``h``: longest chain of relation 1 ending at ``v``; ``m``: longest chain
    of relation 2 starting at ``v`` inside its ``h`` class; ``r``, ``q``:
    longest chains of relations 3 and 4 starting at ``v`` inside its
    ``(h, m)`` class.
    """
    verdict = is_double_magical(g)
    if not verdict:
        raise PreconditionError(
            f"not double-magical; closures share non-edge {verdict.violations[0]}"
        )
    po = extract_partial_orders(g)
    succ = [po.successors(i) for i in (1, 2, 3, 4)]
    everyone = set(range(1, g.n + 1))
    h = chain_heights(succ[0], "ending", everyone)

    by_h: dict[int, set[int]] = defaultdict(set)
    for v in everyone:
        by_h[h[v]].add(v)
    colors: dict[int, tuple[int, ...]] = {}
    for hv, s_h in by_h.items():
        m = chain_heights(_restricted(succ[1], s_h), "starting", s_h)
        by_m: dict[int, set[int]] = defaultdict(set)
        for v in s_h:
            by_m[m[v]].add(v)
        for mv, s_hm in by_m.items():
            r = chain_heights(_restricted(succ[2], s_hm), "starting", s_hm)
            q = chain_heights(_restricted(succ[3], s_hm), "starting", s_hm)
            for v in s_hm:
                colors[v] = (hv, mv, r[v], q[v])
    k = clique_number_by_anchors(g)
    return Coloring(colors, double_magical_bound(k), "double")


def _below_orders(fam: CurveFamily, disjoint: set[tuple[int, int]]) -> tuple[dict, dict]:
    curves = {c.id: c for c in fam.curves}
    first: dict[int, set[int]] = {v: set() for v in curves}
    second: dict[int, set[int]] = {v: set() for v in curves}
    for u, w in disjoint:
        a, b = curves[u], curves[w]
        if not (a.xmin < b.xmin and a.xmax < b.xmax):
            if b.xmin < a.xmin and b.xmax < a.xmax:
                a, b = b, a
            else:
                continue
        lo, hi = b.xmin, a.xmax
        if lo > hi:
            # x-projections are disjoint: "below" holds vacuously both ways
            first[a.id].add(b.id)
            second[a.id].add(b.id)
            continue
        mid = (lo + hi) / 2
        if a.y_at(mid) < b.y_at(mid):
            first[a.id].add(b.id)
        else:
            second[a.id].add(b.id)
    return first, second


def color_xmonotone(fam: CurveFamily) -> Coloring:
    """Colour the disjointness graph of an x-monotone curve family.

    Colour tuples are ``(h1, h2, f, height)``: chain heights in the two
    "below" orders, then the semi-comparability colour within the class
    ordered bottom to top on a vertical line crossing every member.
    """
    from .realization import disjointness_graph

    g = disjointness_graph(fam, attach_orders=False)
    h1_rel, h2_rel = _below_orders(fam, set(g.edges))
    ids = [c.id for c in fam.curves]
    h1 = chain_heights(h1_rel, "ending", ids)
    h2 = chain_heights(h2_rel, "ending", ids)
    classes: dict[tuple[int, int], list[int]] = defaultdict(list)
    for v in ids:
        classes[(h1[v], h2[v])].append(v)

    curves = {c.id: c for c in fam.curves}
    colors: dict[int, tuple[int, ...]] = {}
    for key, members in classes.items():
        x0: Fraction = max(curves[v].xmin for v in members)
        if any(curves[v].xmax < x0 for v in members):
            raise PreconditionError(f"class {key} has no common vertical line")
        stack = sorted(members, key=lambda v: (curves[v].y_at(x0), v))
        sub, original = g.induced(members)
        new_id = {v: i for i, v in enumerate(original, start=1)}
        sub = sub.with_orders([new_id[v] for v in stack])
        inner = color_semi_comparability(sub)
        for i, v in enumerate(original, start=1):
            colors[v] = key + inner.colors[i]
    k = clique_number_by_anchors(g)
    return Coloring(colors, xmonotone_bound(k), "xmono")


def emit_coloring(c: Coloring) -> str:
    lines = [f"# algorithm {c.algorithm}", f"bound {c.bound}"]
    for v in sorted(c.colors):
        lines.append(" ".join(["color", str(v), *map(str, c.colors[v])]))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> Coloring:
    bound = None
    algorithm = ""
    colors: dict[int, tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if raw.startswith("# algorithm"):
            algorithm = raw.split()[-1]
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            nums = [int(t) for t in rest]
        except ValueError:
            raise InputError(f"non-integer token in {line!r}", lineno) from None
        if head == "bound" and len(nums) == 1:
            bound = nums[0]
        elif head == "color" and 2 <= len(nums) <= 5:
            if nums[0] in colors:
                raise InputError(f"vertex {nums[0]} coloured twice", lineno)
            colors[nums[0]] = tuple(nums[1:])
        else:
            raise InputError(f"bad coloring line {line!r}", lineno)
    if bound is None:
        raise InputError("missing 'bound' header")
    return Coloring(colors, bound, algorithm)
