"""Small undirected graphs on bitsets and the exact combinatorics on them.

Vertices are ``0..n-1``. A vertex set is a plain ``int`` whose bit ``i`` is
set when vertex ``i`` belongs to it, so cliques and stable sets compare and
sort as integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

MAX_VERTICES = 24
PERFECT_CHECK_LIMIT = 12


class GraphError(ValueError):
    pass


class SizeLimitError(GraphError):
    pass


def bitset(vertices: Iterable[int]) -> int:
    bits = 0
    for v in vertices:
        bits |= 1 << v
    return bits


def members(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def popcount(bits: int) -> int:
    return bin(bits).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in members(self.adj[i]) if i < j]

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def is_clique(self, s: int) -> bool:
        return all(s & ~(1 << v) & ~self.adj[v] == 0 for v in members(s))

    def is_stable(self, s: int) -> bool:
        return all(self.adj[v] & s == 0 for v in members(s))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def make_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    if not isinstance(n, int) or not 1 <= n <= MAX_VERTICES:
        raise SizeLimitError(f"vertex count must be in 1..{MAX_VERTICES}, got {n!r}")
    adj = [0] * n
    for edge in edges:
        i, j = edge
        if not (0 <= i < n and 0 <= j < n):
            raise GraphError(f"edge ({i}, {j}) out of range for n={n}")
        if i == j:
            raise GraphError(f"self-loop at vertex {i}")
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def graph_from_json(doc: dict) -> Graph:
    try:
        return make_graph(doc["n"], doc["edges"])
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph document: {exc}") from exc


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~g.adj[v] & ~(1 << v) for v in range(g.n)))


def induced_subgraph(g: Graph, s: int) -> tuple[Graph, list[int]]:
    """Return the subgraph induced on ``s`` and the map new index -> old index."""
    verts = members(s & g.full)
    if not verts:
        raise GraphError("induced subgraph of an empty vertex set")
    pos = {v: k for k, v in enumerate(verts)}
    adj = []
    for v in verts:
        adj.append(bitset(pos[u] for u in members(g.adj[v] & s)))
    return Graph(len(verts), tuple(adj)), verts


def complete_graph(n: int) -> Graph:
    return complement(make_graph(n, []))


def cycle_graph(n: int) -> Graph:
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def maximal_cliques(g: Graph) -> list[int]:
    """Bron-Kerbosch with Tomita pivoting; result sorted by bitset value."""
    adj = g.adj
    out: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(r)
            return
        pivot = max(members(p | x), key=lambda u: popcount(p & adj[u]))
        for v in members(p & ~adj[pivot]):
            bit = 1 << v
            expand(r | bit, p & adj[v], x & adj[v])
            p &= ~bit
            x |= bit

    expand(0, g.full, 0)
    return sorted(out)


def maximal_stable_sets(g: Graph) -> list[int]:
    return maximal_cliques(complement(g))


def clique_number(g: Graph) -> int:
    return max(popcount(c) for c in maximal_cliques(g))


def _greedy_colors(g: Graph) -> int:
    colors = [-1] * g.n
    for v in range(g.n):
        taken = {colors[u] for u in members(g.adj[v]) if colors[u] >= 0}
        c = 0
        while c in taken:
            c += 1
        colors[v] = c
    return max(colors) + 1


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by DSATUR-ordered branch and bound.

    The greedy colouring in index order seeds the upper bound and the clique
    number is the lower bound; the search stops as soon as they meet.
    """
    n = g.n
    lower = clique_number(g)
    best = _greedy_colors(g)
    if best == lower:
        return best
    adj = g.adj
    colors = [-1] * n

    def pick() -> int:
        chosen, key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            nbrs = members(adj[v])
            sat = len({colors[u] for u in nbrs if colors[u] >= 0})
            deg = sum(1 for u in nbrs if colors[u] < 0)
            k = (sat, deg)
            if key is None or k > key:
                chosen, key = v, k
        return chosen

    def search(done: int, used: int) -> None:
        nonlocal best
        if used >= best:
            return
        if done == n:
            best = used
            return
        v = pick()
        forbidden = {colors[u] for u in members(adj[v])}
        for c in range(min(used + 1, best - 1)):
            if c in forbidden:
                continue
            colors[v] = c
            search(done + 1, max(used, c + 1))
            colors[v] = -1
            if best == lower:
                return

    search(0, 0)
    return best


def is_perfect(g: Graph) -> tuple[bool, int | None]:
    """Check omega(H) == chi(H) over every nonempty induced subgraph H.

    Subsets are scanned by size and then by bitset value, so a returned
    witness is a smallest violating vertex set.
    """
    if g.n > PERFECT_CHECK_LIMIT:
        raise SizeLimitError(
            f"exhaustive perfectness check is limited to n <= {PERFECT_CHECK_LIMIT}"
        )
    subsets = sorted(range(1, 1 << g.n), key=lambda s: (popcount(s), s))
    for s in subsets:
        h, _ = induced_subgraph(g, s)
        if clique_number(h) != chromatic_number(h):
            return False, s
    return True, None
