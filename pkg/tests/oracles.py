"""Independent reference implementations used only by the tests."""

import itertools
from fractions import Fraction


def solve_exact(cols, b):
    """Unique solution of [cols] lam = b, or None if inconsistent.

    Assumes the columns are linearly independent.
    """
    rows = len(b)
    k = len(cols)
    M = [[Fraction(cols[c][r]) for c in range(k)] + [Fraction(b[r])] for r in range(rows)]
    piv_row = 0
    pivots = []
    for c in range(k):
        p = next((r for r in range(piv_row, rows) if M[r][c] != 0), None)
        if p is None:
            return None
        M[piv_row], M[p] = M[p], M[piv_row]
        lead = M[piv_row][c]
        M[piv_row] = [v / lead for v in M[piv_row]]
        for r in range(rows):
            if r != piv_row and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * bb for a, bb in zip(M[r], M[piv_row])]
        pivots.append(c)
        piv_row += 1
    if any(M[r][k] != 0 for r in range(piv_row, rows)):
        return None
    return [M[i][k] for i in range(k)]


def rank(vectors):
    M = [[Fraction(v) for v in vec] for vec in vectors]
    r = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
    return r


def conv_oracle(point, generators):
    """Basic-feasible-solution scan: point in conv(generators)?"""
    lifted = [list(g) + [1] for g in generators]
    b = list(point) + [1]
    for size in range(1, len(lifted) + 1):
        for subset in itertools.combinations(range(len(lifted)), size):
            cols = [lifted[i] for i in subset]
            if rank(cols) < size:
                continue
            lam = solve_exact(cols, b)
            if lam is not None and all(v >= 0 for v in lam):
                return True
    return False


def naive_is_perfect(g):
    """omega == chi on every induced subgraph, by plain enumeration."""
    n = g.n
    for mask in range(1, 1 << n):
        verts = [v for v in range(n) if mask >> v & 1]
        adj = {v: {u for u in verts if g.has_edge(u, v)} for v in verts}
        omega = max(len(c) for c in _all_cliques(verts, adj))
        if _colorable(verts, adj, omega) is False:
            return False
    return True


def _all_cliques(verts, adj):
    for size in range(1, len(verts) + 1):
        for combo in itertools.combinations(verts, size):
            if all(b in adj[a] for a, b in itertools.combinations(combo, 2)):
                yield combo


def _colorable(verts, adj, k):
    colors = {}

    def place(i):
        if i == len(verts):
            return True
        v = verts[i]
        for c in range(k):
            if all(colors.get(u) != c for u in adj[v]):
                colors[v] = c
                if place(i + 1):
                    return True
                del colors[v]
        return False

    return place(0)
