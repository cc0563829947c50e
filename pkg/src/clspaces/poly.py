"""Sparse homogeneous polynomials and the peak-polynomial constructions.

A :class:`HomPoly` of degree ``m`` on ``n`` variables maps exponent tuples
(summing to ``m``) to coefficients. Coefficients stay exact (``Fraction`` /
``GaussianRational``) unless a float enters.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import prod
from typing import Iterable, Sequence

import numpy as np

from .clspace import CLSpace, DimensionError, is_extreme, norm, support_of
from .graph_core import members
from .scalars import (
    add,
    as_vector,
    is_exact,
    is_exact_scalar,
    mul,
    scalar_json,
    to_scalar,
)


class DegreeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class HomPoly:
    n: int
    m: int
    terms: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.m < 1:
            raise DegreeError(f"degree must be >= 1, got {self.m}")
        for alpha, c in self.terms.items():
            if len(alpha) != self.n or sum(alpha) != self.m or min(alpha) < 0:
                raise DegreeError(f"multi-index {alpha} is not of degree {self.m} in {self.n} variables")
            if c == 0:
                raise ValueError("zero coefficient stored")

    def __eq__(self, other) -> bool:
        return (isinstance(other, HomPoly) and self.n == other.n and self.m == other.m
                and self.terms == other.terms)

    def __add__(self, other: "HomPoly") -> "HomPoly":
        return add_poly(self, other)

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        return add_poly(self, scale(other, -1))

    def __mul__(self, other: "HomPoly") -> "HomPoly":
        return mul_poly(self, other)

    def __call__(self, x):
        return evaluate(self, x)

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self) -> str:
        if not self.terms:
            return f"HomPoly(n={self.n}, m={self.m}, 0)"
        parts = []
        for alpha, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{j}" + (f"^{a}" if a > 1 else "") for j, a in enumerate(alpha) if a)
            parts.append(f"{c}*{mono}")
        return f"HomPoly(n={self.n}, m={self.m}, " + " + ".join(parts) + ")"

    def to_json(self) -> dict:
        terms = []
        for alpha, c in sorted(self.terms.items(), reverse=True):
            value = scalar_json(c)
            if not isinstance(value, list):
                value = [value, "0" if isinstance(value, str) else 0.0]
            terms.append({"alpha": list(alpha), "coeff": value})
        return {"n": self.n, "m": self.m, "terms": terms}

    def compiled(self) -> "CompiledPoly":
        return CompiledPoly.from_poly(self)


def poly_from_json(doc: dict, exact: bool = True) -> HomPoly:
    try:
        n, m = doc["n"], doc["m"]
        acc: dict = {}
        for t in doc.get("terms", []):
            alpha = tuple(int(a) for a in t["alpha"])
            c = to_scalar(t["coeff"], exact)
            acc[alpha] = add(acc[alpha], c) if alpha in acc else c
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed polynomial document: {exc}") from exc
    return HomPoly(n, m, {a: c for a, c in acc.items() if c != 0})


def zero(n: int, m: int) -> HomPoly:
    return HomPoly(n, m, {})


def monomial(n: int, alpha: Sequence[int], coeff=1) -> HomPoly:
    c = Fraction(coeff) if isinstance(coeff, int) else coeff
    return HomPoly(n, sum(alpha), {tuple(alpha): c} if c != 0 else {})


def linear_form(coeffs: Sequence) -> HomPoly:
    n = len(coeffs)
    terms = {}
    for j, c in enumerate(coeffs):
        if c != 0:
            alpha = [0] * n
            alpha[j] = 1
            terms[tuple(alpha)] = Fraction(c) if isinstance(c, int) else c
    return HomPoly(n, 1, terms)


def add_poly(p: HomPoly, q: HomPoly) -> HomPoly:
    if (p.n, p.m) != (q.n, q.m):
        raise DegreeError(f"cannot add degree {p.m} on {p.n} vars to degree {q.m} on {q.n} vars")
    terms = dict(p.terms)
    for alpha, c in q.terms.items():
        s = add(terms[alpha], c) if alpha in terms else c
        if s == 0:
            terms.pop(alpha, None)
        else:
            terms[alpha] = s
    return HomPoly(p.n, p.m, terms)


def sum_polys(polys: Iterable[HomPoly]) -> HomPoly:
    polys = list(polys)
    out = polys[0]
    for p in polys[1:]:
        out = add_poly(out, p)
    return out


def scale(p: HomPoly, c) -> HomPoly:
    if isinstance(c, int):
        c = Fraction(c)
    terms = {a: mul(v, c) for a, v in p.terms.items()}
    return HomPoly(p.n, p.m, {a: v for a, v in terms.items() if v != 0})


def mul_poly(p: HomPoly, q: HomPoly) -> HomPoly:
    if p.n != q.n:
        raise DimensionError("polynomials in different numbers of variables")
    terms: dict = {}
    for a, c in p.terms.items():
        for b, d in q.terms.items():
            ab = tuple(x + y for x, y in zip(a, b))
            v = mul(c, d)
            terms[ab] = add(terms[ab], v) if ab in terms else v
    return HomPoly(p.n, p.m + q.m, {a: v for a, v in terms.items() if v != 0})


def power(p: HomPoly, k: int) -> HomPoly:
    out = p
    for _ in range(k - 1):
        out = mul_poly(out, p)
    return out


def evaluate(p: HomPoly, x: Sequence):
    if len(x) != p.n:
        raise DimensionError(f"point of length {len(x)} for a polynomial in {p.n} variables")
    exact = is_exact(x) and all(is_exact_scalar(c) for c in p.terms.values())
    if not exact:
        xs = [complex(z) for z in x]
        total = sum(complex(c) * prod(xs[j] ** a for j, a in enumerate(alpha) if a)
                    for alpha, c in p.terms.items())
        return total.real if total.imag == 0 else total
    x = as_vector(x, exact=True)
    total = Fraction(0)
    for alpha, c in p.terms.items():
        term = c
        for j, a in enumerate(alpha):
            for _ in range(a):
                term = mul(term, x[j])
        total = add(total, term)
    return total


@dataclass(frozen=True, eq=False)
class CompiledPoly:
    """Float evaluator for batches of points (rows of an array)."""
    exponents: np.ndarray
    coeffs: np.ndarray
    n: int
    m: int

    @classmethod
    def from_poly(cls, p: HomPoly) -> "CompiledPoly":
        alphas = sorted(p.terms)
        exps = np.array(alphas, dtype=np.int64).reshape(len(alphas), p.n)
        cs = [complex(p.terms[a]) for a in alphas]
        if all(c.imag == 0 for c in cs):
            coeffs = np.array([c.real for c in cs], dtype=float)
        else:
            coeffs = np.array(cs, dtype=complex)
        return cls(exps, coeffs, p.n, p.m)

    def __call__(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X)
        if X.shape[-1] != self.n:
            raise DimensionError("batch has the wrong number of columns")
        if len(self.coeffs) == 0:
            return np.zeros(X.shape[0], dtype=X.dtype)
        mono = np.ones((X.shape[0], len(self.coeffs)), dtype=np.result_type(X, self.coeffs))
        for j in range(self.n):
            e = self.exponents[:, j]
            if e.any():
                mono = mono * X[:, j:j + 1] ** e[None, :]
        return (mono * self.coeffs[None, :]).sum(axis=1)


def q_lemma(N: int, indices: Sequence[int]) -> HomPoly:
    """prod_k x_{j_k} + (sum of x_j over the distinct indices)^m on N variables."""
    m = len(indices)
    if m < 1:
        raise DegreeError("need at least one index")
    if any(not 0 <= j < N for j in indices):
        raise IndexError(f"indices {tuple(indices)} out of range for N={N}")
    counts = Counter(indices)
    alpha = [0] * N
    for j, c in counts.items():
        alpha[j] = c
    product_term = monomial(N, alpha)
    block = linear_form([1 if j in counts else 0 for j in range(N)])
    return add_poly(product_term, power(block, m))


def product_peak(multiplicities: Iterable[int], m: int) -> Fraction:
    """Maximum of prod x_j^{m_j} over the nonnegative l1 sphere."""
    return prod((Fraction(mj, m) ** mj for mj in multiplicities), start=Fraction(1))


@dataclass(frozen=True)
class AttainmentPrediction:
    point: tuple
    predicted_norm: Fraction
    # (clique bitset, hit vertices j_1..j_m, {vertex: multiplicity})
    per_clique: tuple

    def to_json(self) -> dict:
        return {
            "point": [str(z) for z in self.point],
            "predicted_norm": {"value": str(self.predicted_norm), "approx": float(self.predicted_norm),
                               "exact": True},
            "per_clique": [
                {"clique": members(c), "hits": list(hits),
                 "multiplicities": {str(j): k for j, k in sorted(mult.items())}}
                for c, hits, mult in self.per_clique
            ],
        }


def lemma_prediction(N: int, indices: Sequence[int]) -> AttainmentPrediction:
    q_lemma(N, indices)  # validates
    m = len(indices)
    counts = Counter(indices)
    point = tuple(Fraction(counts.get(j, 0), m) for j in range(N))
    value = product_peak(counts.values(), m) + 1
    return AttainmentPrediction(point, value, (((1 << N) - 1, tuple(indices), dict(counts)),))


def _check_generator(s: CLSpace, y: Sequence) -> tuple:
    if len(y) != s.n:
        raise DimensionError(f"extreme point of length {len(y)} in dimension {s.n}")
    if not is_exact(y):
        raise ValueError("extreme points must be given exactly")
    y = as_vector(y, exact=True)
    if any(not isinstance(z, Fraction) or z < 0 for z in y):
        raise ValueError(f"{[str(z) for z in y]} is not a nonnegative real vector")
    if not is_extreme(s, y):
        raise ValueError(f"{[str(z) for z in y]} is not an extreme point of the unit ball")
    return y


def build_Q(s: CLSpace, ys: Sequence[Sequence]) -> tuple[HomPoly, AttainmentPrediction]:
    """Polynomial strongly attaining its norm at the mean of the given extreme points.

    For every maximal clique J, j_k is the vertex where J meets supp(y_k);
    Q = sum_J Q_J + (sum_J L_J)^m with Q_J = q_lemma over (j_1..j_m) and L_J
    the sum of coordinate functionals over the distinct j_k.
    """
    m = len(ys)
    if m < 2:
        raise DegreeError("build_Q needs m >= 2 extreme points")
    ys = [_check_generator(s, y) for y in ys]
    supports = [support_of(y) for y in ys]
    n = s.n
    q_total = zero(n, m)
    l_total = zero(n, 1)
    per_clique = []
    predicted = Fraction(0)
    for clique in s.max_cliques:
        hits = tuple(members(clique & sup)[0] for sup in supports)
        counts = Counter(hits)
        q_total = add_poly(q_total, q_lemma(n, hits))
        l_total = add_poly(l_total, linear_form([1 if j in counts else 0 for j in range(n)]))
        predicted += 1 + product_peak(counts.values(), m)
        per_clique.append((clique, hits, dict(counts)))
    q = add_poly(q_total, power(l_total, m))
    predicted += Fraction(len(s.max_cliques)) ** m
    point = tuple(sum((y[j] for y in ys), Fraction(0)) / m for j in range(n))
    assert norm(s, point) == 1
    return q, AttainmentPrediction(point, predicted, tuple(per_clique))
