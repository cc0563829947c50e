"""Finite-dimensional CL-spaces with an absolute norm, built from their graphs.

A space on ``n`` coordinates is described by the graph whose edges are the
pairs ``(i, j)`` with ``||e_i + e_j|| > 1``. The graph must be perfect and
every maximal clique must meet every maximal stable set in exactly one
vertex. Given such a graph, the dual unit ball is the absolutely convex hull
of the clique sign patterns, so

    ||x||  = max over maximal cliques J      of  sum_{j in J} |x_j|
    ||f||* = max over maximal stable sets S  of  sum_{j in S} |f_j|

Extreme points of the ball are unimodular patterns on maximal stable sets,
extreme points of the dual ball are unimodular patterns on maximal cliques.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from numbers import Rational
from typing import Callable, Sequence

from .graph_core import (
    Graph,
    bitset,
    graph_from_json,
    is_perfect,
    make_graph,
    maximal_cliques,
    maximal_stable_sets,
    members,
    popcount,
)
from .scalars import FLOAT_TOL, add, is_exact, is_real_scalar, moduli, mul

REAL = "real"
COMPLEX = "complex"
FIELDS = (REAL, COMPLEX)
GRAPH_TOL = 1e-9


class DimensionError(ValueError):
    pass


class NotCLSpaceError(ValueError):
    def __init__(self, report: "CLReport"):
        super().__init__(report.summary())
        self.report = report


@dataclass(frozen=True)
class CLReport:
    graph: Graph
    perfect: bool
    perfect_witness: int | None
    intersection_ok: bool
    # (clique, stable set, |clique & stable set|)
    violating_pair: tuple[int, int, int] | None

    @property
    def passed(self) -> bool:
        return self.perfect and self.intersection_ok

    def summary(self) -> str:
        if self.passed:
            return "graph defines a CL-space"
        parts = []
        if not self.perfect:
            parts.append(f"not perfect (witness {members(self.perfect_witness)})")
        if not self.intersection_ok:
            c, s, k = self.violating_pair
            parts.append(f"clique {members(c)} meets stable set {members(s)} in {k} vertices")
        return "; ".join(parts)

    def to_json(self) -> dict:
        pair = None
        if self.violating_pair is not None:
            c, s, k = self.violating_pair
            pair = {"clique": members(c), "stable_set": members(s), "intersection_size": k}
        return {
            "graph": self.graph.to_json(),
            "passed": self.passed,
            "perfect": self.perfect,
            "perfect_witness": None if self.perfect_witness is None else members(self.perfect_witness),
            "intersection_ok": self.intersection_ok,
            "violating_pair": pair,
        }


def reisner_check(g: Graph) -> CLReport:
    perfect, witness = is_perfect(g)
    bad = None
    for clique in maximal_cliques(g):
        for stable in maximal_stable_sets(g):
            k = popcount(clique & stable)
            if k != 1:
                bad = (clique, stable, k)
                break
        if bad:
            break
    return CLReport(g, perfect, witness, bad is None, bad)


@dataclass(frozen=True)
class CLSpace:
    graph: Graph
    field: str
    max_cliques: tuple[int, ...]
    max_stables: tuple[int, ...]
    clique_members: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)
    stable_members: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def is_complex(self) -> bool:
        return self.field == COMPLEX

    def with_field(self, fld: str) -> "CLSpace":
        return space_from_graph(self.graph, fld)

    def to_json(self) -> dict:
        return {**self.graph.to_json(), "field": self.field}


def space_from_graph(g: Graph, fld: str = REAL) -> CLSpace:
    if fld not in FIELDS:
        raise ValueError(f"field must be one of {FIELDS}, got {fld!r}")
    report = reisner_check(g)
    if not report.passed:
        raise NotCLSpaceError(report)
    cliques = tuple(maximal_cliques(g))
    stables = tuple(maximal_stable_sets(g))
    return CLSpace(
        g, fld, cliques, stables,
        tuple(tuple(members(c)) for c in cliques),
        tuple(tuple(members(s)) for s in stables),
    )


def space_from_json(doc: dict) -> CLSpace:
    return space_from_graph(graph_from_json(doc), doc.get("field", REAL))


def ell1(n: int, fld: str = REAL) -> CLSpace:
    return space_from_graph(make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)]), fld)


def ell_infty(n: int, fld: str = REAL) -> CLSpace:
    return space_from_graph(make_graph(n, []), fld)


def _check_vector(s: CLSpace, x: Sequence) -> None:
    if len(x) != s.n:
        raise DimensionError(f"vector of length {len(x)} in a space of dimension {s.n}")
    if not s.is_complex and not all(is_real_scalar(z) for z in x):
        raise ValueError("complex coordinates in a real space")


def _block_max(blocks, x: Sequence):
    mods = moduli(x)
    return max(sum((mods[j] for j in block), Fraction(0) if is_exact(mods) else 0.0)
               for block in blocks)


def norm(s: CLSpace, x: Sequence):
    _check_vector(s, x)
    return _block_max(s.clique_members, x)


def dual_norm(s: CLSpace, f: Sequence):
    _check_vector(s, f)
    return _block_max(s.stable_members, f)


def pairing(f: Sequence, x: Sequence):
    """Bilinear pairing sum_j f_j x_j (no conjugation)."""
    total = Fraction(0) if is_exact(f) and is_exact(x) else 0.0
    for a, b in zip(f, x):
        total = add(total, mul(a, b))
    return total


def unit_vector(n: int, j: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(int(k == j)) for k in range(n))


def graph_of_norm(norm_oracle: Callable[[tuple], object], n: int) -> Graph:
    """Recover the graph of an absolute normalized norm: edge iff ||e_i+e_j|| > 1."""
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            e = [Fraction(0)] * n
            e[i] = e[j] = Fraction(1)
            value = norm_oracle(tuple(e))
            if isinstance(value, Rational):
                exceeds = value > 1
            else:
                exceeds = value > 1 + GRAPH_TOL
            if exceeds:
                edges.append((i, j))
    return make_graph(n, edges)


@dataclass(frozen=True)
class SignedSupport:
    """A unimodular pattern on a vertex set.

    ``signs`` lists the scalar on each support vertex in increasing vertex
    order. With ``orbit=True`` the pattern stands for its whole orbit under
    coordinatewise unimodular scalars (complex spaces).
    """
    support: int
    signs: tuple[int, ...]
    orbit: bool = False

    def to_vector(self, n: int) -> tuple[Fraction, ...]:
        x = [Fraction(0)] * n
        for v, c in zip(members(self.support), self.signs):
            x[v] = Fraction(c)
        return tuple(x)

    def to_json(self) -> dict:
        return {"support": members(self.support), "signs": list(self.signs), "orbit": self.orbit}


def _patterns(s: CLSpace, supports: Sequence[int]) -> list[SignedSupport]:
    out = []
    for sup in supports:
        k = popcount(sup)
        if s.is_complex:
            out.append(SignedSupport(sup, (1,) * k, orbit=True))
        else:
            out.extend(SignedSupport(sup, signs) for signs in product((1, -1), repeat=k))
    return out


def extreme_points(s: CLSpace) -> list[SignedSupport]:
    return _patterns(s, s.max_stables)


def dual_extreme_points(s: CLSpace) -> list[SignedSupport]:
    return _patterns(s, s.max_cliques)


def nonnegative_extreme_points(s: CLSpace) -> list[tuple[Fraction, ...]]:
    """0/1 indicators of the maximal stable sets, in canonical order."""
    return [SignedSupport(sup, (1,) * popcount(sup)).to_vector(s.n) for sup in s.max_stables]


def _unit_or_zero(mods) -> tuple[bool, int]:
    support = 0
    for j, r in enumerate(mods):
        if isinstance(r, Rational):
            if r == 1:
                support |= 1 << j
            elif r != 0:
                return False, 0
        else:
            if abs(r - 1) <= FLOAT_TOL:
                support |= 1 << j
            elif abs(r) > FLOAT_TOL:
                return False, 0
    return True, support


def support_of(x: Sequence) -> int:
    return bitset(j for j, z in enumerate(x) if z != 0)


def is_extreme(s: CLSpace, x: Sequence) -> bool:
    _check_vector(s, x)
    ok, support = _unit_or_zero(moduli(x))
    return ok and support in s.max_stables


def is_dual_extreme(s: CLSpace, f: Sequence) -> bool:
    _check_vector(s, f)
    ok, support = _unit_or_zero(moduli(f))
    return ok and support in s.max_cliques
