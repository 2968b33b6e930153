"""Matching polynomials of weighted simple graphs and rook polynomials of boards.

Counts come from the vertex-deletion recurrence

    p(G, k) = p(G - v, k) + sum_{u ~ v} w(u, v) p(G - v - u, k - 1),

memoised on the bitmask of surviving vertices.  The pivot ``v`` is a vertex of
highest degree among the survivors, which keeps the recursion shallow.

Graph text format: the first line is the vertex count, then one ``u v [w]``
line per edge with 0-based endpoints (weight 1 if omitted).  Board text format:
one ``r c`` line per cell.  ``#`` starts a comment in both.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .interlace import compare_zero_orders
from .poly import Poly
from .report import CheckReport
from .roots import is_real_rooted

__all__ = [
    "GraphSpec",
    "MAX_VERTICES",
    "matching_counts",
    "matching_counts_bruteforce",
    "matching_polynomial",
    "matching_generating_polynomial",
    "verify_heilmann_lieb",
    "rook_polynomial",
    "board_graph",
    "parse_graph",
    "parse_board",
    "path_graph",
    "random_weighted_graph",
    "small_connected_graphs",
]

MAX_VERTICES = 24


@dataclass(frozen=True)
class GraphSpec:
    """Simple graph on vertices ``0..vertex_count-1`` with nonnegative rational edge weights."""

    vertex_count: int
    edges: tuple = ()

    def __post_init__(self):
        seen = set()
        canon = []
        for e in self.edges:
            u, v = int(e[0]), int(e[1])
            w = Fraction(e[2]) if len(e) > 2 else Fraction(1)
            if isinstance(e[2] if len(e) > 2 else 1, float):
                raise TypeError("edge weights must be rational")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if not (0 <= u and v < self.vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u}, {v})")
            if w < 0:
                raise ValueError(f"negative weight on edge ({u}, {v})")
            seen.add((u, v))
            canon.append((u, v, w))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def adjacency(self) -> list:
        adj = [dict() for _ in range(self.vertex_count)]
        for u, v, w in self.edges:
            adj[u][v] = w
            adj[v][u] = w
        return adj

    def delete_vertex(self, v: int) -> "GraphSpec":
        relabel = lambda x: x - 1 if x > v else x
        return GraphSpec(
            self.vertex_count - 1,
            tuple((relabel(a), relabel(b), w) for a, b, w in self.edges if v not in (a, b)),
        )


def matching_counts(g: GraphSpec) -> list:
    """Weighted matching counts ``[p(G,0), p(G,1), ...]`` (trailing zeros dropped)."""
    n = g.vertex_count
    if n > MAX_VERTICES:
        raise ValueError(f"matching recurrence is capped at {MAX_VERTICES} vertices")
    adj = g.adjacency()
    nbr_mask = [sum(1 << u for u in adj[v]) for v in range(n)]
    memo: dict = {0: (Fraction(1),)}

    def rec(mask: int) -> tuple:
        hit = memo.get(mask)
        if hit is not None:
            return hit
        # pivot: surviving vertex with most surviving neighbours
        best, best_deg = -1, -1
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            d = bin(nbr_mask[v] & mask).count("1")
            if d > best_deg:
                best, best_deg = v, d
            m ^= low
        v = best
        rest = mask & ~(1 << v)
        out = list(rec(rest))
        live = nbr_mask[v] & rest
        while live:
            low = live & -live
            u = low.bit_length() - 1
            w = adj[v][u]
            sub = rec(rest & ~low)
            if len(out) < len(sub) + 1:
                out.extend([Fraction(0)] * (len(sub) + 1 - len(out)))
            for k, c in enumerate(sub):
                out[k + 1] += w * c
            live ^= low
        while len(out) > 1 and not out[-1]:
            out.pop()
        res = tuple(out)
        memo[mask] = res
        return res

    return list(rec((1 << n) - 1))


def matching_counts_bruteforce(g: GraphSpec) -> list:
    """Matching counts by scanning every edge subset (independent oracle)."""
    edges = g.edges
    if len(edges) > 20:
        raise ValueError("brute-force matching enumeration is capped at 20 edges")
    out: dict = {}
    for bits in range(1 << len(edges)):
        used = 0
        weight = Fraction(1)
        k = 0
        ok = True
        for i, (u, v, w) in enumerate(edges):
            if bits >> i & 1:
                if used >> u & 1 or used >> v & 1:
                    ok = False
                    break
                used |= (1 << u) | (1 << v)
                weight *= w
                k += 1
        if ok:
            out[k] = out.get(k, 0) + weight
    res = [Fraction(out.get(k, 0)) for k in range(max(out) + 1)]
    while len(res) > 1 and not res[-1]:
        res.pop()
    return res


def matching_polynomial(g: GraphSpec) -> Poly:
    """Signed form ``Q(G,x) = sum_k (-1)^k p(G,k) x^(n-2k)`` (``M(G,x)`` for unit weights)."""
    n = g.vertex_count
    cs = [Fraction(0)] * (n + 1)
    for k, p in enumerate(matching_counts(g)):
        cs[n - 2 * k] += (-1) ** k * p
    return Poly(cs)


def matching_generating_polynomial(g: GraphSpec) -> Poly:
    """Unsigned form ``sum_k p(G,k) x^k``."""
    return Poly(matching_counts(g))


def verify_heilmann_lieb(g: GraphSpec) -> CheckReport:
    """``Q(G)`` is real-rooted and ``Q(G - v)`` interlaces ``Q(G)`` for every vertex ``v``."""
    rep = CheckReport("heilmann_lieb")
    rep.hyp("nonnegative weights", all(w >= 0 for _, _, w in g.edges))
    q = matching_polynomial(g)
    rep.constructed["Q"] = q
    rep.concl("Q(G) real-rooted", is_real_rooted(q), "Q(G) has non-real zeros")
    if g.vertex_count == 0:
        return rep
    bad = []
    for v in range(g.vertex_count):
        qv = matching_polynomial(g.delete_vertex(v))
        if not is_real_rooted(q) or not is_real_rooted(qv):
            bad.append(f"v={v}: not real-rooted")
            continue
        cert = compare_zero_orders(q, qv)
        if cert.relation not in ("interlaces", "strict_interlaces"):
            bad.append(f"v={v}: {cert.relation} ({cert.witness})")
    rep.concl("Q(G - v) interlaces Q(G) for all v", not bad, "; ".join(bad))
    return rep


# -- boards ----------------------------------------------------------------------

def board_graph(cells: Iterable) -> GraphSpec:
    """Bipartite graph with one vertex per occupied row and column and one edge per cell."""
    cells = sorted({(int(r), int(c)) for r, c in cells})
    rows = sorted({r for r, _ in cells})
    cols = sorted({c for _, c in cells})
    ri = {r: i for i, r in enumerate(rows)}
    ci = {c: len(rows) + i for i, c in enumerate(cols)}
    return GraphSpec(len(rows) + len(cols), tuple((ri[r], ci[c], 1) for r, c in cells))


def rook_polynomial(cells: Iterable) -> Poly:
    """``sum_k r_k x^k`` with ``r_k`` the number of ways to place ``k`` non-attacking rooks."""
    return matching_generating_polynomial(board_graph(cells))


# -- text formats and generators ---------------------------------------------------

def _lines(text: str):
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            yield line


def parse_graph(text: str) -> GraphSpec:
    lines = list(_lines(text))
    if not lines:
        raise ValueError("empty graph text")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            parts = line.split()
            if len(parts) not in (2, 3):
                raise ValueError(f"bad edge line {line!r}")
            w = Fraction(parts[2]) if len(parts) == 3 else Fraction(1)
            edges.append((int(parts[0]), int(parts[1]), w))
    except ValueError as exc:
        raise ValueError(f"cannot parse graph: {exc}") from None
    return GraphSpec(n, tuple(edges))


def parse_board(text: str) -> list:
    cells = []
    for line in _lines(text):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad board line {line!r}")
        cells.append((int(parts[0]), int(parts[1])))
    return cells


def path_graph(n: int, weight=1) -> GraphSpec:
    return GraphSpec(n, tuple((i, i + 1, weight) for i in range(n - 1)))


def random_weighted_graph(rng: random.Random, max_vertices: int = 10, density=0.5, max_weight=5) -> GraphSpec:
    """Random simple graph with positive rational weights (zero weights allowed occasionally)."""
    n = rng.randint(1, max_vertices)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                w = Fraction(rng.randint(0, 4 * max_weight), rng.randint(1, 4))
                edges.append((u, v, w))
    return GraphSpec(n, tuple(edges))


def small_connected_graphs(max_vertices: int = 6) -> list:
    """Every connected simple graph on ``1..max_vertices`` vertices, one per isomorphism class."""
    import networkx as nx

    if max_vertices > 7:
        raise ValueError("the graph atlas covers at most 7 vertices")
    out = []
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if 1 <= n <= max_vertices and nx.is_connected(h):
            out.append(GraphSpec(n, tuple((u, v, 1) for u, v in h.edges())))
    return out
