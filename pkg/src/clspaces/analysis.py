"""Executable checks on CL-spaces: peak points, attainment, complex extreme
points, the index-one classification, numerical radius bounds and one
perturbation step of the variational argument.

Everything returning a verdict keeps exact (``Fraction``) quantities apart
from float estimates; the ``to_json`` of each report marks which is which.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement, product
from typing import Sequence

import numpy as np

from .clspace import (
    CLSpace,
    DimensionError,
    SignedSupport,
    ell1,
    nonnegative_extreme_points,
    norm,
    unit_vector,
)
from .graph_core import members
from .numerics import (
    DEFAULT_RESTARTS,
    Ball,
    ConvexCombination,
    MaximizeResult,
    Slice,
    _Domain,
    abs_poly_objective,
    clique_face,
    conv_membership,
    maximize,
)
from .poly import AttainmentPrediction, DegreeError, HomPoly, evaluate, monomial, scale
from .scalars import (
    GaussianRational,
    IrrationalModulus,
    is_exact,
    modulus,
    moduli,
    number_json,
    vector_json,
)

INDEX_ONE = "IndexOne_ellInfty"
NOT_INDEX_ONE = "NotIndexOne"


# ------------------------------------------------------------- peak points

def strongly_attaining_points(s: CLSpace, m: int, max_points: int | None = None) -> tuple[list[tuple], bool]:
    """Means (1/m)(y_1 + ... + y_m) over multisets of nonnegative extreme points.

    Returns the deduplicated points and whether the list was truncated.
    """
    if m < 2:
        raise DegreeError("strongly attaining points are produced for m >= 2")
    gens = nonnegative_extreme_points(s)
    seen: dict[tuple, None] = {}
    for combo in combinations_with_replacement(gens, m):
        point = tuple(sum((y[j] for y in combo), Fraction(0)) / m for j in range(s.n))
        if point not in seen:
            if max_points is not None and len(seen) >= max_points:
                return list(seen), True
            seen[point] = None
    return list(seen), False


@dataclass
class AttainmentReport:
    polynomial_id: str
    claimed_point: tuple
    claimed_norm: Fraction
    value_at_point: object
    best_value: float | None
    excess: float | None
    cluster_distance: float | None
    near_maximizers: int
    verdict: bool
    tol_value: float
    tol_point: float
    seed: int
    restarts: int
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "polynomial_id": self.polynomial_id,
            "claimed_point": vector_json(self.claimed_point),
            "claimed_norm": number_json(self.claimed_norm),
            "value_at_point": number_json(self.value_at_point),
            "best_sampled_value": None if self.best_value is None else number_json(self.best_value),
            "max_excess": None if self.excess is None else number_json(self.excess),
            "cluster_distance": None if self.cluster_distance is None else number_json(self.cluster_distance),
            "near_maximizers": self.near_maximizers,
            "verdict": "pass" if self.verdict else "fail",
            "reason": self.reason,
            "tol_value": self.tol_value,
            "tol_point": self.tol_point,
            "seed": self.seed,
            "restarts": self.restarts,
        }


def _batch_norm(s: CLSpace, X: np.ndarray) -> np.ndarray:
    A = np.abs(X)
    return np.max([A[:, list(c)].sum(axis=1) for c in s.clique_members], axis=0)


def orbit_distance(s: CLSpace, X: np.ndarray, point: Sequence) -> np.ndarray:
    """Distance from each row of X to {c * point : |c| = 1} after phase alignment.

    Real spaces try c = +1 and c = -1; complex spaces use the phase of
    sum_j X_j * conj(point_j).
    """
    p = np.array([complex(z) for z in point])
    if not s.is_complex:
        p = p.real
        X = np.real(X)
        return np.minimum(_batch_norm(s, X - p), _batch_norm(s, X + p))
    inner = X @ np.conj(p)
    lam = np.where(np.abs(inner) > 0, inner / np.where(np.abs(inner) > 0, np.abs(inner), 1), 1)
    return _batch_norm(s, X - lam[:, None] * p[None, :])


def verify_attainment(s: CLSpace, q: HomPoly, pred: AttainmentPrediction, tol_value: float = 1e-6,
                      tol_point: float = 5e-2, seed: int = 0, restarts: int = DEFAULT_RESTARTS,
                      polynomial_id: str = "") -> AttainmentReport:
    if q.n != s.n or len(pred.point) != s.n:
        raise DimensionError("polynomial, point and space dimensions differ")
    at_point = evaluate(q, pred.point)
    base = dict(polynomial_id=polynomial_id or f"poly(n={q.n},m={q.m},terms={len(q.terms)})",
                claimed_point=tuple(pred.point), claimed_norm=pred.predicted_norm,
                value_at_point=at_point, tol_value=tol_value, tol_point=tol_point, seed=seed,
                restarts=restarts)
    if at_point != pred.predicted_norm:
        return AttainmentReport(**base, best_value=None, excess=None, cluster_distance=None,
                                near_maximizers=0, verdict=False,
                                reason=f"value at the claimed point is {at_point}, not {pred.predicted_norm}")
    result = maximize(abs_poly_objective(q.compiled()), Ball(s), seed=seed, restarts=restarts)
    claim = float(pred.predicted_norm)
    excess = result.value - claim
    trace = np.array(result.trace)
    near = trace >= claim - tol_value
    dists = orbit_distance(s, result.points[near], pred.point) if near.any() else np.zeros(0)
    cluster = float(dists.max()) if len(dists) else 0.0
    ok = excess <= tol_value and cluster <= tol_point
    if excess > tol_value:
        reason = f"found |Q| = {result.value!r} above the claimed norm"
    elif cluster > tol_point:
        reason = "a near-maximizer lies away from the orbit of the claimed point"
    else:
        reason = "no excess; every near-maximizer lies on the orbit of the claimed point"
    return AttainmentReport(**base, best_value=result.value, excess=excess, cluster_distance=cluster,
                            near_maximizers=int(near.sum()), verdict=ok, reason=reason)


# ------------------------------------------------------ complex extreme points

@dataclass
class MembershipCertificate:
    label: str
    point: tuple
    verdict: bool
    combination: ConvexCombination | None

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "modulus_vector": vector_json(self.point),
            "verdict": self.verdict,
            "certificate": None if self.combination is None else self.combination.to_json(),
        }


def _membership(s: CLSpace, a: Sequence, label: str) -> MembershipCertificate:
    if len(a) != s.n:
        raise DimensionError(f"vector of length {len(a)} in dimension {s.n}")
    if not is_exact(a):
        raise TypeError("exact rational coordinates required")
    mods = tuple(modulus(z) for z in a)  # raises IrrationalModulus
    if norm(s, mods) != 1:
        raise ValueError(f"the vector has norm {norm(s, mods)}, not 1")
    ok, combo = conv_membership(mods, nonnegative_extreme_points(s))
    return MembershipCertificate(label, mods, ok, combo)


def complex_extreme_test(s: CLSpace, a: Sequence) -> MembershipCertificate:
    """Is ``a`` a complex extreme point: is |a| a convex combination of 0/1 extreme points?"""
    if not s.is_complex:
        raise ValueError("complex extreme points are tested in a complex space")
    return _membership(s, a, "complex_extreme")


def upper_monotonicity_test(s: CLSpace, a: Sequence) -> MembershipCertificate:
    if s.is_complex:
        raise ValueError("upper monotonicity is tested in a real space")
    return _membership(s, a, "upper_monotonicity")


# ------------------------------------------------------- index-one verdict

@dataclass
class IndexClassification:
    verdict: str
    k: int
    x: tuple | None = None
    y: tuple | None = None
    clique: int | None = None
    functional: SignedSupport | None = None
    value: Fraction | None = None

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "k": self.k, "witness": None}
        if self.verdict == NOT_INDEX_ONE:
            out["witness"] = {
                "x": vector_json(self.x),
                "y": vector_json(self.y),
                "clique": members(self.clique),
                "functional": vector_json(self.functional.to_vector(len(self.x))),
                "value": number_json(self.value),
            }
        return out


def index_one_classify(s: CLSpace, k: int) -> IndexClassification:
    """n^(k)(X) = 1 exactly when the graph has no edges (X is l_infty^n).

    Otherwise the witness is the midpoint of two nonnegative extreme points
    x, y, which is a strong peak point for 2-homogeneous polynomials, paired
    with a dual extreme functional that is -1 where a clique meets supp(x)
    and +1 on the rest of the clique; that pairing is (-1 + 1)/2 = 0.
    """
    if not s.is_complex:
        raise ValueError("the classification is stated for complex spaces")
    if k < 2:
        raise DegreeError("k must be >= 2")
    if not s.graph.edges():
        return IndexClassification(INDEX_ONE, k)
    stables = sorted(s.max_stables, key=members)
    sx, sy = stables[0], stables[1]
    n = s.n
    x = SignedSupport(sx, (1,) * len(members(sx))).to_vector(n)
    y = SignedSupport(sy, (1,) * len(members(sy))).to_vector(n)
    i = members(sx & ~sy)[0]
    tau = 1 << i
    for v in range(n):
        if v != i and s.graph.adj[v] & tau == tau:
            tau |= 1 << v
    assert tau in s.max_cliques
    signs = tuple(-1 if v == i else 1 for v in members(tau))
    functional = SignedSupport(tau, signs)
    f = functional.to_vector(n)
    mid = tuple((a + b) / 2 for a, b in zip(x, y))
    value = sum((a * b for a, b in zip(f, mid)), Fraction(0))
    return IndexClassification(NOT_INDEX_ONE, k, x, y, tau, functional, value)


@dataclass
class LeeViolation:
    point: tuple
    clique: int
    functional: tuple
    value: object
    kind: str  # "max" or "min" over unimodular choices on the clique

    def to_json(self) -> dict:
        return {"point": vector_json(self.point), "clique": members(self.clique),
                "functional": vector_json(self.functional), "value": number_json(self.value),
                "kind": self.kind}


def _phase(z):
    if isinstance(z, Fraction) or isinstance(z, int):
        return Fraction(1) if z >= 0 else Fraction(-1)
    if isinstance(z, GaussianRational):
        r = modulus(z)
        return GaussianRational(z.re / r, z.im / r) if r else Fraction(1)
    z = complex(z)
    return z / abs(z) if z else 1.0


def _conj(z):
    if isinstance(z, GaussianRational):
        return z.conjugate()
    if isinstance(z, complex):
        return z.conjugate()
    return z


def _closing_phases(a: list[float]) -> list[complex]:
    """Unimodular c with sum c_j a_j = 0, assuming 2 * max(a) <= sum(a)."""
    order = sorted(range(len(a)), key=lambda j: -a[j])
    arms = [[], []]
    lengths = [0.0, 0.0]
    for j in order[1:]:
        side = 0 if lengths[0] <= lengths[1] else 1
        arms[side].append(j)
        lengths[side] += a[j]
    A, B, C = a[order[0]], lengths[0], lengths[1]
    c = [1.0 + 0j] * len(a)
    if B == 0 or C == 0:
        for j in arms[0] + arms[1]:
            c[j] = -1.0
        return c
    # triangle with sides A, B, C: A + B e^{i beta} + C e^{i gamma} = 0
    cos_b = max(-1.0, min(1.0, (C * C - A * A - B * B) / (2 * A * B)))
    beta = math.acos(cos_b)
    w = -(A + B * cmath.exp(1j * beta))
    gamma = cmath.phase(w)
    for j in arms[0]:
        c[j] = cmath.exp(1j * beta)
    for j in arms[1]:
        c[j] = cmath.exp(1j * gamma)
    return c


def lee_condition_check(s: CLSpace, points: Sequence[Sequence], k: int = 2) -> list[LeeViolation]:
    """Pairs (x, f) with f a dual extreme point and |f(x)| != 1.

    Only meaningful as a necessary condition on certified peak points: a
    violation disproves index one, an empty list proves nothing.
    """
    out = []
    for x in points:
        if len(x) != s.n:
            raise DimensionError(f"point of length {len(x)} in dimension {s.n}")
        exact = is_exact(x)
        mods = moduli(x, exact)
        exact = exact and all(isinstance(r, Fraction) for r in mods)
        for tau, block in zip(s.max_cliques, s.clique_members):
            a = [mods[j] for j in block]
            ph = [_conj(_phase(x[j])) for j in block]

            def functional(cs):
                f = [Fraction(0)] * s.n
                for j, c, p in zip(block, cs, ph):
                    f[j] = c * p if not isinstance(p, GaussianRational) else (
                        GaussianRational(c * p.re, c * p.im))
                return tuple(f)

            vals = []
            for cs in product((-1, 1), repeat=len(block)):
                vals.append((abs(sum((c * r for c, r in zip(cs, a)), Fraction(0) if exact else 0.0)), cs))
            vmax = max(vals, key=lambda t: t[0])
            vmin = min(vals, key=lambda t: t[0])
            if vmax[0] != 1:
                out.append(LeeViolation(tuple(x), tau, functional(vmax[1]), vmax[0], "max"))
            if s.is_complex:
                total = sum(a, Fraction(0) if exact else 0.0)
                low = max(0, 2 * max(a) - total)
                if low != 1:
                    if vmin[0] == low:
                        out.append(LeeViolation(tuple(x), tau, functional(vmin[1]), low, "min"))
                    else:
                        cs = _closing_phases([float(r) for r in a])
                        f = [0.0] * s.n
                        for j, c, p in zip(block, cs, ph):
                            f[j] = c * complex(p)
                        out.append(LeeViolation(tuple(x), tau, tuple(f), low, "min"))
            elif vmin[0] != 1:
                out.append(LeeViolation(tuple(x), tau, functional(vmin[1]), vmin[0], "min"))
    return out


# ------------------------------------------------------- numerical radius

@dataclass
class StatePair:
    x: np.ndarray
    f: np.ndarray

    @property
    def pairing(self) -> complex:
        return complex(np.dot(self.f, self.x))

    def to_json(self) -> dict:
        def enc(v):
            if np.iscomplexobj(v):
                return {"coords": [[float(z.real), float(z.imag)] for z in v], "exact": False}
            return {"coords": [float(z) for z in v], "exact": False}
        p = self.pairing
        return {"x": enc(self.x), "f": enc(self.f),
                "pairing": {"value": [p.real, p.imag], "exact": False}}


@dataclass
class RadiusBound:
    value: float
    state: StatePair
    per_functional: list = field(default_factory=list)
    seed: int = 0
    restarts: int = DEFAULT_RESTARTS

    def to_json(self) -> dict:
        return {
            "lower_bound": {"value": self.value, "exact": False, "kind": "lower_bound"},
            "state": self.state.to_json(),
            "per_functional": self.per_functional,
            "seed": self.seed,
            "restarts": self.restarts,
        }


def _check_vector_poly(s: CLSpace, P: Sequence[HomPoly]) -> int:
    if len(P) != s.n:
        raise DimensionError(f"vector polynomial has {len(P)} components, space has dimension {s.n}")
    degrees = {p.m for p in P}
    if len(degrees) != 1 or any(p.n != s.n for p in P):
        raise DegreeError("components must share the degree and the number of variables")
    return degrees.pop()


def _components(P: Sequence[HomPoly]):
    comps = [p.compiled() if not p.is_zero() else None for p in P]

    def values(X):
        return np.stack([c(X) if c is not None else np.zeros(X.shape[0]) for c in comps], axis=1)
    return values


def vector_poly_norm_estimate(s: CLSpace, P: Sequence[HomPoly], seed: int = 0,
                              restarts: int = DEFAULT_RESTARTS) -> MaximizeResult:
    """Lower bound on sup_{x in B_X} ||P(x)||."""
    _check_vector_poly(s, P)
    values = _components(P)
    return maximize(lambda X: _batch_norm(s, values(X)), Ball(s), seed=seed, restarts=restarts)


def numerical_radius_lower(s: CLSpace, P: Sequence[HomPoly], seed: int = 0,
                           restarts: int = DEFAULT_RESTARTS) -> RadiusBound:
    """Lower bound on v(P) = sup |f(P(x))| over states with f(x) = 1.

    For fixed x the supremum over its states is reached at a dual extreme
    point, so only clique patterns are searched. In complex spaces the phases
    of f on the clique are set by x where x is nonzero and aligned with P(x)
    elsewhere.
    """
    _check_vector_poly(s, P)
    values = _components(P)
    best = None
    per = []
    if s.is_complex:
        for tau, block in zip(s.max_cliques, s.clique_members):
            blk = list(block)

            def objective(X, blk=blk):
                PX = values(X)[:, blk]
                XB = X[:, blk]
                live = np.abs(XB) > 1e-15
                ph = np.where(live, np.conj(XB) / np.where(live, np.abs(XB), 1.0), 0)
                det = (ph * PX).sum(axis=1)
                return np.abs(det) + np.where(live, 0.0, np.abs(PX)).sum(axis=1)

            res = maximize(objective, clique_face(s, tau), seed=seed, restarts=restarts)
            per.append({"clique": members(tau), "value": res.value})
            if best is None or res.value > best[0]:
                best = (res.value, res.argmax, blk)
        value, x, blk = best
        PX = values(x[None, :])[0]
        f = np.zeros(s.n, dtype=complex)
        det = 0j
        for j in blk:
            if abs(x[j]) > 1e-15:
                f[j] = np.conj(x[j]) / abs(x[j])
                det += f[j] * PX[j]
        rot = det / abs(det) if abs(det) > 0 else 1.0
        for j in blk:
            if abs(x[j]) <= 1e-15:
                f[j] = np.conj(PX[j]) / abs(PX[j]) * rot if abs(PX[j]) > 0 else 1.0
        state = StatePair(x, f)
    else:
        for tau, block in zip(s.max_cliques, s.clique_members):
            for signs in product((1, -1), repeat=len(block)):
                fvec = [Fraction(0)] * s.n
                for j, c in zip(block, signs):
                    fvec[j] = Fraction(c)
                fa = np.array([float(c) for c in fvec])
                res = maximize(lambda X, fa=fa: np.abs(values(X) @ fa), Slice(s, tuple(fvec)),
                               seed=seed, restarts=restarts)
                per.append({"clique": members(tau), "signs": list(signs), "value": res.value})
                if best is None or res.value > best[0]:
                    best = (res.value, res.argmax, fa)
        value, x, fa = best
        state = StatePair(x, fa)
    if abs(state.pairing - 1) > 1e-9:
        raise ArithmeticError(f"state pairing {state.pairing} is not 1")
    return RadiusBound(value, state, per, seed, restarts)


# ------------------------------------------------------- perturbation step

@dataclass
class PerturbationReport:
    g: HomPoly
    eps: object
    direction: object
    perturbation_norm_bound: object
    value_at_w: object
    sampled_sup: float
    n_ball: int
    holds: bool
    seed: int
    restarts: int
    # |(f-h)(w)| > ||f-h||_bound - eps * delta(1/n_ball), checked exactly
    norming_ok: bool = False

    @property
    def margin(self) -> float:
        return float(self.value_at_w) - self.sampled_sup

    def to_json(self) -> dict:
        return {
            "g": self.g.to_json(),
            "eps": number_json(self.eps),
            "direction": number_json(self.direction),
            "perturbation_norm_bound": number_json(self.perturbation_norm_bound),
            "value_at_w": number_json(self.value_at_w),
            "sampled_sup_outside_orbit_ball": {"value": self.sampled_sup, "exact": False,
                                               "kind": "lower_bound"},
            "margin": {"value": self.margin, "exact": False},
            "n_ball": self.n_ball,
            "holds": self.holds,
            "norming_ok": self.norming_ok,
            "seed": self.seed,
            "restarts": self.restarts,
        }


def l1_norm_bound(p: HomPoly):
    """Triangle-inequality bound on sup over the l1 ball: sum |c| prod (a_j/m)^a_j."""
    total = Fraction(0)
    for alpha, c in p.terms.items():
        peak = Fraction(1)
        for a in alpha:
            if a:
                peak *= Fraction(a, p.m) ** a
        total = total + modulus(c) * peak
    return total


@dataclass(frozen=True)
class _Polytope(_Domain):
    space: CLSpace
    vertices: tuple
    complex_phases: bool = False

    def __post_init__(self):
        self._setup([list(v) for v in self.vertices], {}, self.complex_phases)


def _outside_orbit_ball(n: int, w: int, radius: float, signs: Sequence[int]) -> list[list[float]]:
    """Vertices of {r >= 0, sum r <= 1, r_w - sum_{j != w} r_j <= 1 - radius}, signed."""
    verts = [[0.0] * n]
    for j in range(n):
        if j == w:
            continue
        v = [0.0] * n
        v[j] = 1.0
        verts.append(v)
        v = [0.0] * n
        v[w] = 1.0 - radius / 2
        v[j] = radius / 2
        verts.append(v)
    v = [0.0] * n
    v[w] = 1.0 - radius
    verts.append(v)
    return [[c * sgn for c, sgn in zip(v, signs)] for v in verts]


def perturbation_step(f: HomPoly, h: HomPoly, w_index: int, eps, k: int, n_ball: int,
                      seed: int = 0, restarts: int = DEFAULT_RESTARTS) -> PerturbationReport:
    """g = h - eps * (e*_w)^k * u with u the unit scalar (f-h)(e_w)/|(f-h)(e_w)|, on l1^n.

    The basis vectors of l1^n are uniformly strongly exposed by the coordinate
    functionals with modulus eps/2. The report compares |(f-g)(e_w)| with a
    sampled supremum of |f-g| over the ball minus the 1/n_ball neighbourhood
    of the orbit {c e_w}.
    """
    if f.m != k or h.m != k:
        raise DegreeError(f"f and h must both have degree k={k}")
    if f.n != h.n:
        raise DimensionError("f and h live on different dimensions")
    n = f.n
    if not 0 <= w_index < n:
        raise IndexError(f"w_index {w_index} out of range")
    if n_ball < 1:
        raise ValueError("n_ball must be >= 1")
    eps = Fraction(eps) if isinstance(eps, (int, str)) else eps
    if eps <= 0:
        raise ValueError("eps must be positive")
    diff = f - h
    d = evaluate(diff, unit_vector(n, w_index))
    if d == 0:
        raise ValueError("(f - h)(w) = 0: the perturbation direction is undefined")
    try:
        u = _phase(d)
    except IrrationalModulus:
        u = complex(d) / abs(complex(d))
    alpha = [0] * n
    alpha[w_index] = k
    bump = scale(monomial(n, alpha), u)
    g = h - scale(bump, eps)
    bound = l1_norm_bound(g - h)
    fg = f - g
    norming_ok = None
    if is_exact([d]) and all(is_exact([c]) for c in diff.terms.values()):
        try:
            norming_ok = modulus(d) > l1_norm_bound(diff) - eps * Fraction(1, 2 * n_ball)
        except IrrationalModulus:
            pass
    at_w = evaluate(fg, unit_vector(n, w_index))
    at_w = modulus(at_w) if is_exact([at_w]) else abs(at_w)

    cplx = any(isinstance(c, (complex, GaussianRational)) for p in (f, h) for c in p.terms.values()) \
        or isinstance(u, (complex, GaussianRational))
    space = ell1(n, "complex" if cplx else "real")
    objective = abs_poly_objective(fg.compiled())
    radius = 1.0 / n_ball
    sup = 0.0
    if cplx:
        dom = _Polytope(space, tuple(map(tuple, _outside_orbit_ball(n, w_index, radius, [1] * n))), True)
        sup = maximize(objective, dom, seed=seed, restarts=restarts).value
    else:
        for signs in product((1, -1), repeat=n):
            dom = _Polytope(space, tuple(map(tuple, _outside_orbit_ball(n, w_index, radius, signs))))
            sup = max(sup, maximize(objective, dom, seed=seed, restarts=restarts).value)
    return PerturbationReport(g, eps, u, bound, at_w, sup, n_ball, float(at_w) > sup, seed, restarts,
                              bool(norming_ok))


# ------------------------------------------------------------ Frechet probe

@dataclass
class FrechetProbe:
    ladder: list[float]
    quotients: list[float]
    norm_estimate: float
    decreasing_fraction: float
    directions: int
    seed: int

    def to_json(self) -> dict:
        return {
            "label": "HEURISTIC",
            "note": "sampled sup of estimated norms; no certification",
            "norm_estimate": {"value": self.norm_estimate, "exact": False},
            "ladder": self.ladder,
            "quotients": [{"value": q, "exact": False} for q in self.quotients],
            "decreasing_fraction": self.decreasing_fraction,
            "directions": self.directions,
            "seed": self.seed,
        }


def _all_monomials(n: int, m: int):
    for combo in combinations_with_replacement(range(n), m):
        alpha = [0] * n
        for j in combo:
            alpha[j] += 1
        yield tuple(alpha)


def frechet_probe(s: CLSpace, P: HomPoly, delta_ladder: Sequence[float], direction_samples: int = 50,
                  seed: int = 0, restarts: int = 16) -> FrechetProbe:
    """Difference quotients (||P+dD|| + ||P-dD|| - 2||P||)/d over random unit directions D."""
    if not delta_ladder:
        raise ValueError("empty delta ladder")
    if P.is_zero():
        raise ValueError("P must be nonzero")
    if P.n != s.n:
        raise DimensionError("polynomial and space dimensions differ")

    def est(p: HomPoly) -> float:
        return maximize(abs_poly_objective(p.compiled()), Ball(s), seed=seed, restarts=restarts).value

    base = est(P)
    rng = np.random.default_rng(seed)
    monos = list(_all_monomials(s.n, P.m))
    best = [-math.inf] * len(delta_ladder)
    for _ in range(direction_samples):
        coeffs = rng.standard_normal(len(monos))
        if s.is_complex:
            coeffs = coeffs + 1j * rng.standard_normal(len(monos))
        D = HomPoly(s.n, P.m, {a: (complex(c) if s.is_complex else float(c))
                               for a, c in zip(monos, coeffs) if c != 0})
        D = scale(D, 1.0 / est(D))
        for i, delta in enumerate(delta_ladder):
            up = est(P + scale(D, float(delta)))
            down = est(P - scale(D, float(delta)))
            best[i] = max(best[i], (up + down - 2 * base) / delta)
    order = sorted(range(len(delta_ladder)), key=lambda i: -delta_ladder[i])
    steps = [best[b] <= best[a] for a, b in zip(order, order[1:])]
    frac = sum(steps) / len(steps) if steps else 1.0
    return FrechetProbe([float(d) for d in delta_ladder], best, base, frac, direction_samples, seed)
