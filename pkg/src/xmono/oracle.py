"""Brute-force ground truth.

Everything here is exact or refuses: clique, chromatic and independence
numbers, exhaustive search for a second order making a graph magical, and
the magical closure computed straight from the mountain-path definition.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Sequence

from .errors import OracleRefusal
from .ordered import OrderedGraph, iter_bits

CHI_MAX_N = 40
WITNESS_MAX_N = 9
CLOSURE_MAX_N = 7


@dataclass
class OracleStats:
    omega: int | None = None
    chi: int | None = None
    alpha: int | None = None
    witness: tuple[int, ...] | None = None


def _greedy_color_sort(p: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Sequential greedy colouring of the vertex set ``p``.

    Returns vertices grouped by colour class and the running class number,
    which bounds the clique size of every prefix.
    """
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = p
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~low & ~adj[v]
            uncolored &= ~low
            order.append(v)
            bounds.append(color)
    return order, bounds


def _max_clique(adj: Sequence[int], cand: int, max_nodes: int | None = None) -> int:
    best = 0
    nodes = 0

    def expand(size: int, p: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise OracleRefusal(f"clique search exceeded {max_nodes} nodes")
        order, bounds = _greedy_color_sort(p, adj)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best:
                return
            v = order[i]
            sub = p & adj[v]
            if sub:
                expand(size + 1, sub)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    if cand:
        expand(0, cand)
    return best


def _all_vertices(g: OrderedGraph) -> int:
    return ((1 << (g.n + 1)) - 1) & ~1


def clique_number(g: OrderedGraph, max_nodes: int | None = None) -> int:
    """Exact maximum clique size (branch and bound, greedy colouring bound)."""
    return _max_clique(g.adj_bits, _all_vertices(g), max_nodes)


def independence_number(g: OrderedGraph, max_nodes: int | None = None) -> int:
    return clique_number(g.complement(), max_nodes)


def _dsatur_greedy(g: OrderedGraph) -> int:
    adj = g.adj
    color: dict[int, int] = {}
    sat: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    while len(color) < g.n:
        v = max(
            (u for u in sat if u not in color),
            key=lambda u: (len(sat[u]), len(adj[u]), -u),
        )
        c = 0
        while c in sat[v]:
            c += 1
        color[v] = c
        for w in adj[v]:
            sat[w].add(c)
    return max(color.values(), default=-1) + 1


def _colorable(g: OrderedGraph, k: int, seed: Sequence[int], budget: list[int]) -> bool:
    """Backtracking k-colourability with DSATUR branching.

    ``seed`` is a clique, precoloured 0..len-1 to break symmetry.
    """
    adj = g.adj
    color = [-1] * (g.n + 1)
    for c, v in enumerate(seed):
        color[v] = c
    used = len(seed)

    def forbidden(v: int) -> set[int]:
        return {color[w] for w in adj[v] if color[w] >= 0}

    def solve(used: int) -> bool:
        budget[0] -= 1
        if budget[0] < 0:
            raise OracleRefusal("chromatic number search exceeded its node budget")
        best_v, best_key, best_forb = 0, None, set()
        for v in range(1, g.n + 1):
            if color[v] >= 0:
                continue
            forb = forbidden(v)
            key = (len(forb), len(adj[v]))
            if best_key is None or key > best_key:
                best_v, best_key, best_forb = v, key, forb
        if best_key is None:
            return True
        if len(best_forb) >= k:
            return False
        for c in range(min(used + 1, k)):
            if c in best_forb:
                continue
            color[best_v] = c
            if solve(max(used, c + 1)):
                return True
        color[best_v] = -1
        return False

    return solve(used)


def _some_max_clique(g: OrderedGraph) -> list[int]:
    adj = g.adj_bits
    target = clique_number(g)
    clique: list[int] = []
    cand = _all_vertices(g)
    # Greedy extension guided by the exact oracle keeps the witness maximum.
    for v in range(1, g.n + 1):
        if not cand >> v & 1:
            continue
        rest = cand & adj[v]
        if len(clique) + 1 + _max_clique(adj, rest) == target:
            clique.append(v)
            cand = rest
        else:
            cand &= ~(1 << v)
    return clique


def chromatic_number(g: OrderedGraph, max_n: int = CHI_MAX_N, max_nodes: int = 2_000_000) -> int:
    """Exact chromatic number, or :class:`OracleRefusal` past the resource caps."""
    if g.n > max_n:
        raise OracleRefusal(f"chromatic number limited to {max_n} vertices, got {g.n}")
    if g.n == 0:
        return 0
    clique = _some_max_clique(g)
    upper = _dsatur_greedy(g)
    budget = [max_nodes]
    for k in range(len(clique), upper):
        if _colorable(g, k, clique, budget):
            return k
    return upper


@dataclass(frozen=True)
class WitnessResult:
    order: tuple[int, ...] | None
    orders_covered: int


def _precedences(g: OrderedGraph) -> dict[int, set[int]]:
    """``need[c]``: vertices that must precede ``c`` in any magical second order."""
    below1, above1 = g.below(0), g.above(0)
    adj = g.adj_bits
    need: dict[int, set[int]] = {v: set() for v in range(1, g.n + 1)}
    for b in range(1, g.n + 1):
        lo = adj[b] & below1[b]
        hi = adj[b] & above1[b]
        for a in iter_bits(lo):
            missing = hi & ~adj[a]
            if missing:
                need[a].add(b)
                for c in iter_bits(missing):
                    need[c].add(b)
    return need


def witness_search(g: OrderedGraph, max_n: int = WITNESS_MAX_N) -> WitnessResult:
    """Search all second orders for one making ``(o1, o2)`` magical.

    Orders are extended prefix by prefix; a vertex may be appended only once
    every vertex it must follow is placed, and each rejected extension
    accounts for all completions of its prefix.  Returns the
    lexicographically smallest witness, or ``None`` together with the number
    of orders ruled out (``n!`` on exhaustion).
    """
    if g.n > max_n:
        raise OracleRefusal(f"witness search limited to {max_n} vertices, got {g.n}")
    need = _precedences(g)
    placed: list[int] = []
    placed_set: set[int] = set()
    covered = 0

    def extend() -> bool:
        nonlocal covered
        remaining = g.n - len(placed)
        if remaining == 0:
            covered += 1
            return True
        for v in range(1, g.n + 1):
            if v in placed_set:
                continue
            if not need[v] <= placed_set:
                covered += factorial(remaining - 1)
                continue
            placed.append(v)
            placed_set.add(v)
            if extend():
                return True
            placed.pop()
            placed_set.discard(v)
        return False

    if extend():
        return WitnessResult(tuple(placed), covered)
    return WitnessResult(None, covered)


def closure_oracle(g: OrderedGraph, max_n: int = CLOSURE_MAX_N) -> OrderedGraph:
    """Join every pair connected by a mountain path, by explicit enumeration."""
    g.require_orders(2, "closure_oracle")
    if g.n > max_n:
        raise OracleRefusal(f"mountain-path enumeration limited to {max_n} vertices, got {g.n}")
    r1, r2 = g.ranks[0], g.ranks[1]
    adj = g.adj
    joined: set[tuple[int, int]] = set()

    def walk(start: int, last: int, inner_min: int) -> None:
        for nxt in adj[last]:
            if r1[nxt] <= r1[last]:
                continue
            # inner_min is the smallest o2 rank among interior vertices so far
            if last != start:
                lowest = min(inner_min, r2[last])
            else:
                lowest = inner_min
            if lowest > min(r2[start], r2[nxt]):
                joined.add((start, nxt) if start < nxt else (nxt, start))
            walk(start, nxt, lowest)

    for v in range(1, g.n + 1):
        walk(v, v, g.n + 1)
    return g.with_edges(joined)


def stats(g: OrderedGraph, which: Sequence[str] = ("omega", "chi", "alpha")) -> OracleStats:
    out = OracleStats()
    if "omega" in which:
        out.omega = clique_number(g)
    if "chi" in which:
        out.chi = chromatic_number(g)
    if "alpha" in which:
        out.alpha = independence_number(g)
    if "witness" in which:
        out.witness = witness_search(g).order
    return out
