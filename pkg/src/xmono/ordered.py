"""Graphs carrying one to three total orders on their vertices.

Vertices are the integers ``1..n``.  An order is stored as the tuple of
vertices listed from smallest to largest; ``ranks[j][v]`` gives the 1-based
position of ``v`` in order ``j``.  All predicates here compare ranks only.

Most routines work on Python ints used as bitsets (bit ``v`` set means
vertex ``v`` is present), which keeps the closure and the violation scans
fast enough for graphs with a few hundred vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import InputError

ORDER_NAMES = ("o1", "o2", "o3")


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True, init=False)
class OrderedGraph:
    """Undirected simple graph on ``1..n`` with 1-3 total orders."""

    n: int
    edges: frozenset[tuple[int, int]]
    orders: tuple[tuple[int, ...], ...]

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        orders: Sequence[Sequence[int]] | None = None,
    ):
        if n < 0:
            raise InputError(f"negative vertex count {n}")
        norm = set()
        for u, v in edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge {u}-{v} has an endpoint outside 1..{n}")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            norm.add(_edge(int(u), int(v)))
        if not orders:
            orders = [range(1, n + 1)]
        if len(orders) > 3:
            raise InputError(f"at most 3 orders allowed, got {len(orders)}")
        checked = []
        for name, order in zip(ORDER_NAMES, orders):
            order = tuple(int(v) for v in order)
            if sorted(order) != list(range(1, n + 1)):
                raise InputError(f"order {name} is not a permutation of 1..{n}")
            checked.append(order)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "orders", tuple(checked))

    def __repr__(self) -> str:
        return f"OrderedGraph(n={self.n}, m={len(self.edges)}, orders={len(self.orders)})"

    @property
    def num_orders(self) -> int:
        return len(self.orders)

    @cached_property
    def ranks(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for order in self.orders:
            rank = [0] * (self.n + 1)
            for pos, v in enumerate(order, start=1):
                rank[v] = pos
            out.append(tuple(rank))
        return tuple(out)

    @cached_property
    def adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        bits = [0] * (self.n + 1)
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    def has_edge(self, u: int, v: int) -> bool:
        return _edge(u, v) in self.edges

    def below(self, j: int) -> tuple[int, ...]:
        """Bitsets: ``below(j)[v]`` holds the vertices preceding ``v`` in order ``j``."""
        return _order_masks(self.orders[j], self.n)[0]

    def above(self, j: int) -> tuple[int, ...]:
        return _order_masks(self.orders[j], self.n)[1]

    def require_orders(self, count: int, what: str) -> None:
        if self.num_orders < count:
            raise InputError(f"{what} needs order {ORDER_NAMES[count - 1]}, graph has {self.num_orders}")

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> OrderedGraph:
        return OrderedGraph(self.n, edges, self.orders)

    def with_orders(self, *orders: Sequence[int]) -> OrderedGraph:
        return OrderedGraph(self.n, self.edges, orders)

    def complement(self) -> OrderedGraph:
        missing = (
            (u, v)
            for u in range(1, self.n + 1)
            for v in range(u + 1, self.n + 1)
            if (u, v) not in self.edges
        )
        return OrderedGraph(self.n, missing, self.orders)

    def induced(self, vertices: Iterable[int]) -> tuple[OrderedGraph, tuple[int, ...]]:
        """Induced subgraph relabelled to ``1..m`` by increasing original id.

        Returns the subgraph and the tuple of original ids (new id ``i`` is
        ``original[i - 1]``).  Every order is restricted, not re-ranked.
        """
        keep = tuple(sorted(set(vertices)))
        new_id = {v: i for i, v in enumerate(keep, start=1)}
        edges = [(new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id]
        orders = [[new_id[v] for v in order if v in new_id] for order in self.orders]
        return OrderedGraph(len(keep), edges, orders), keep


_MASK_CACHE: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {}


def _order_masks(order: tuple[int, ...], n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    hit = _MASK_CACHE.get(order)
    if hit is not None:
        return hit
    below = [0] * (n + 1)
    above = [0] * (n + 1)
    acc = 0
    for v in order:
        below[v] = acc
        acc |= 1 << v
    acc = 0
    for v in reversed(order):
        above[v] = acc
        acc |= 1 << v
    res = (tuple(below), tuple(above))
    if len(_MASK_CACHE) > 256:
        _MASK_CACHE.clear()
    _MASK_CACHE[order] = res
    return res


class Verdict(NamedTuple):
    """Outcome of a recognition predicate plus its exhaustive violation list."""

    ok: bool
    violations: list[tuple[int, ...]]

    def __bool__(self) -> bool:
        return self.ok


def _sorted_by_rank(items: list[tuple[int, ...]], rank: Sequence[int]) -> list[tuple[int, ...]]:
    return sorted(items, key=lambda t: tuple(rank[v] for v in t))


def is_semi_comparability(g: OrderedGraph) -> Verdict:
    """Check for the forbidden pattern a<b<c<d, ab,bc,cd edges, ac,bd non-edges (order o1)."""
    r1 = g.ranks[0]
    below, above = g.below(0), g.above(0)
    adj = g.adj_bits
    found = []
    for u, v in g.edges:
        b, c = (u, v) if r1[u] < r1[v] else (v, u)
        a_mask = adj[b] & below[b] & ~adj[c]
        if not a_mask:
            continue
        d_mask = adj[c] & above[c] & ~adj[b]
        for a in iter_bits(a_mask):
            for d in iter_bits(d_mask):
                found.append((a, b, c, d))
    return Verdict(not found, _sorted_by_rank(found, r1))


def is_magical(g: OrderedGraph) -> Verdict:
    """Every induced path a<b<c (in o1) must have b first among the three in o2."""
    g.require_orders(2, "is_magical")
    r1, r2 = g.ranks[0], g.ranks[1]
    below1, above1 = g.below(0), g.above(0)
    below2 = g.below(1)
    adj = g.adj_bits
    found = []
    for b in range(1, g.n + 1):
        lo = adj[b] & below1[b]
        hi = adj[b] & above1[b]
        if not lo or not hi:
            continue
        for a in iter_bits(lo):
            missing = hi & ~adj[a]
            if not missing:
                continue
            if r2[a] < r2[b]:
                bad = missing
            else:
                bad = missing & below2[b]
            for c in iter_bits(bad):
                found.append((a, b, c))
    return Verdict(not found, _sorted_by_rank(found, r1))


def _closure_bits(g: OrderedGraph, j: int) -> list[int]:
    below1, above1 = g.below(0), g.above(0)
    below2 = g.below(j)
    adj = list(g.adj_bits)
    changed = True
    while changed:
        changed = False
        for b in range(1, g.n + 1):
            lo = adj[b] & below1[b]
            hi = adj[b] & above1[b]
            if not lo or not hi:
                continue
            for a in iter_bits(lo & below2[b]):
                new = hi & ~adj[a]
                if new:
                    changed = True
                    adj[a] |= new
                    for c in iter_bits(new):
                        adj[c] |= 1 << a
            for c in iter_bits(hi & below2[b]):
                new = lo & ~adj[c]
                if new:
                    changed = True
                    adj[c] |= new
                    for a in iter_bits(new):
                        adj[a] |= 1 << c
    return adj


def _bits_to_edges(adj: Sequence[int]) -> list[tuple[int, int]]:
    return [(u, v) for u in range(1, len(adj)) for v in iter_bits(adj[u]) if u < v]


def magical_closure(g: OrderedGraph, second: int = 2) -> OrderedGraph:
    """Smallest magical supergraph of ``g`` with respect to (o1, o<second>).

    Fixed point of: a<b<c in o1 with ab, bc edges and a or c before b in
    the second order forces the edge ac.  ``second`` selects o2 (default)
    or o3; the returned graph keeps all of ``g``'s orders.
    """
    if second not in (2, 3):
        raise InputError("second order must be 2 or 3")
    g.require_orders(second, "magical_closure")
    return g.with_edges(_bits_to_edges(_closure_bits(g, second - 1)))


def is_mountain_path(g: OrderedGraph, seq: Sequence[int]) -> bool:
    g.require_orders(2, "is_mountain_path")
    if not seq:
        raise InputError("empty vertex sequence")
    if len(set(seq)) != len(seq):
        raise InputError(f"repeated vertex in {tuple(seq)}")
    for v in seq:
        if not 1 <= v <= g.n:
            raise InputError(f"vertex {v} outside 1..{g.n}")
    r1, r2 = g.ranks[0], g.ranks[1]
    for x, y in zip(seq, seq[1:]):
        if r1[x] >= r1[y] or not g.has_edge(x, y):
            return False
    inner = seq[1:-1]
    if not inner:
        return True
    low = min(r2[v] for v in inner)
    return r2[seq[0]] < low or r2[seq[-1]] < low


def double_closures(g: OrderedGraph) -> tuple[OrderedGraph, OrderedGraph]:
    """The (o1,o2)- and (o1,o3)-closures of a triple-ordered graph."""
    g.require_orders(3, "double_closures")
    return magical_closure(g, 2), magical_closure(g, 3)


def is_double_magical(g: OrderedGraph) -> Verdict:
    """E(g) must equal the intersection of its two magical closures.

    Violations are the pairs present in both closures but missing from g.
    """
    c2, c3 = double_closures(g)
    extra = sorted((c2.edges & c3.edges) - g.edges)
    return Verdict(not extra, extra)


@dataclass(frozen=True)
class PartialOrders:
    """The four edge relations of a triple-ordered graph.

    ``relations[i]`` holds pairs ``(a, b)`` meaning ``a`` precedes ``b`` in
    relation ``i + 1``.  ``transitivity_violations`` lists ``(i, a, b, c)``
    with a->b->c in relation ``i`` but not a->c.
    """

    relations: tuple[frozenset[tuple[int, int]], ...]
    transitivity_violations: tuple[tuple[int, int, int, int], ...]

    @property
    def transitive(self) -> bool:
        return not self.transitivity_violations

    def successors(self, i: int) -> dict[int, set[int]]:
        out: dict[int, set[int]] = {}
        for a, b in self.relations[i - 1]:
            out.setdefault(a, set()).add(b)
        return out


def extract_partial_orders(g: OrderedGraph) -> PartialOrders:
    g.require_orders(3, "extract_partial_orders")
    r1, r2, r3 = g.ranks
    rel: list[set[tuple[int, int]]] = [set(), set(), set(), set()]
    for u, v in g.edges:
        a, b = (u, v) if r1[u] < r1[v] else (v, u)
        up2, up3 = r2[a] < r2[b], r3[a] < r3[b]
        if up2 and up3:
            rel[0].add((a, b))
        elif not up2 and not up3:
            rel[1].add((a, b))
        elif up2:
            rel[2].add((a, b))
        else:
            rel[3].add((a, b))
    bad = []
    for i, pairs in enumerate(rel, start=1):
        succ: dict[int, list[int]] = {}
        for a, b in pairs:
            succ.setdefault(a, []).append(b)
        for a, mids in succ.items():
            for b in mids:
                for c in succ.get(b, ()):
                    if (a, c) not in pairs:
                        bad.append((i, a, b, c))
    return PartialOrders(tuple(frozenset(p) for p in rel), tuple(sorted(bad)))


_HEADER = re.compile(r"^ograph\s+(\S+)$")


def parse_ograph(text: str) -> OrderedGraph:
    """Parse the line-based ``ograph 1`` format."""
    n = None
    orders: dict[str, list[int]] = {}
    edges: list[tuple[int, int]] = []
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            m = _HEADER.match(line)
            if not m:
                raise InputError("expected header 'ograph 1'", lineno)
            if m.group(1) != "1":
                raise InputError(f"unsupported ograph version {m.group(1)!r}", lineno)
            seen_header = True
            continue
        head, *rest = line.split()
        try:
            nums = [int(tok) for tok in rest[1:]] if head == "order" else [int(tok) for tok in rest]
        except ValueError:
            raise InputError(f"non-integer token in {line!r}", lineno) from None
        if head == "vertices":
            if n is not None:
                raise InputError("duplicate 'vertices' line", lineno)
            if len(nums) != 1 or nums[0] < 0:
                raise InputError("'vertices' takes one non-negative integer", lineno)
            n = nums[0]
        elif head == "order":
            if n is None:
                raise InputError("'order' before 'vertices'", lineno)
            if not rest or rest[0] not in ORDER_NAMES:
                raise InputError("order name must be o1, o2 or o3", lineno)
            if rest[0] in orders:
                raise InputError(f"duplicate order {rest[0]}", lineno)
            if sorted(nums) != list(range(1, n + 1)):
                raise InputError(f"order {rest[0]} is not a permutation of 1..{n}", lineno)
            orders[rest[0]] = nums
        elif head == "edge":
            if n is None:
                raise InputError("'edge' before 'vertices'", lineno)
            if len(nums) != 2:
                raise InputError("'edge' takes two vertex ids", lineno)
            u, v = nums
            if not (1 <= u <= n and 1 <= v <= n):
                raise InputError(f"edge {u}-{v} outside 1..{n}", lineno)
            if u == v:
                raise InputError(f"self-loop at vertex {u}", lineno)
            edges.append((u, v))
        else:
            raise InputError(f"unknown directive {head!r}", lineno)
    if not seen_header:
        raise InputError("empty input, expected 'ograph 1'")
    if n is None:
        raise InputError("missing 'vertices' line")
    identity = list(range(1, n + 1))
    count = max((ORDER_NAMES.index(name) + 1 for name in orders), default=1)
    seq = [orders.get(name, identity) for name in ORDER_NAMES[:count]]
    return OrderedGraph(n, edges, seq)


def emit_ograph(g: OrderedGraph) -> str:
    lines = ["ograph 1", f"vertices {g.n}"]
    for name, order in zip(ORDER_NAMES, g.orders):
        lines.append(" ".join(["order", name, *map(str, order)]))
    lines.extend(f"edge {u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"
