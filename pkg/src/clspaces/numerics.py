"""Exact convex-hull membership and seeded multi-start maximization.

``conv_membership`` runs a phase-one simplex with Bland's rule entirely in
``Fraction`` arithmetic, so its verdict is a proof either way.

``maximize`` is a float heuristic: projected ascent with finite-difference
gradients, run from many seeded starts at once. Every iterate is feasible,
so the value it returns is a lower bound on the supremum and nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Sequence

import numpy as np
from scipy import optimize

from .clspace import CLSpace, dual_norm, is_dual_extreme
from .graph_core import members
from .scalars import FLOAT_TOL

DEFAULT_RESTARTS = 64
DEFAULT_ITERS = 200
STEP0 = 0.1
STEP_DECAY = 0.9
FD_H = 1e-7


class EmptyDomainError(ValueError):
    pass


@dataclass(frozen=True)
class ConvexCombination:
    generators: tuple[tuple[Fraction, ...], ...]
    weights: tuple[Fraction, ...]

    def point(self) -> tuple[Fraction, ...]:
        n = len(self.generators[0])
        return tuple(sum((w * g[i] for w, g in zip(self.weights, self.generators)), Fraction(0))
                     for i in range(n))

    def to_json(self) -> dict:
        return {
            "generators": [[str(z) for z in g] for g in self.generators],
            "weights": [str(w) for w in self.weights],
            "exact": True,
        }


def _as_rational(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, Rational):
        raise TypeError(f"exact rational input required, got {v!r}")
    return Fraction(v)


def _phase_one(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Find x >= 0 with A x = b (b >= 0), or None if infeasible."""
    rows, cols = len(A), len(A[0])
    width = cols + rows
    T = [A[r] + [Fraction(int(r == i)) for i in range(rows)] + [b[r]] for r in range(rows)]
    basis = [cols + r for r in range(rows)]
    # reduced costs of sum(artificials), last entry is -objective
    obj = [-sum(T[r][j] for r in range(rows)) for j in range(cols)] + [Fraction(0)] * rows
    obj.append(-sum(b))
    while True:
        entering = next((j for j in range(width) if obj[j] < 0), None)
        if entering is None:
            break
        best = None
        for r in range(rows):
            a = T[r][entering]
            if a > 0:
                key = (T[r][-1] / a, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            # unbounded below cannot happen: objective is bounded by 0
            raise ArithmeticError("phase-one objective unbounded")
        r = best[1]
        piv = T[r][entering]
        T[r] = [v / piv for v in T[r]]
        for i in range(rows):
            if i != r and T[i][entering] != 0:
                f = T[i][entering]
                T[i] = [v - f * w for v, w in zip(T[i], T[r])]
        f = obj[entering]
        obj = [v - f * w for v, w in zip(obj, T[r])]
        basis[r] = entering
    if obj[-1] != 0:
        return None
    x = [Fraction(0)] * cols
    for r, var in enumerate(basis):
        if var < cols:
            x[var] = T[r][-1]
    return x


def conv_membership(point: Sequence, generators: Sequence[Sequence]) -> tuple[bool, ConvexCombination | None]:
    """Decide exactly whether ``point`` lies in the convex hull of ``generators``."""
    if not generators:
        raise ValueError("need at least one generator")
    p = [_as_rational(v) for v in point]
    gens = [tuple(_as_rational(v) for v in g) for g in generators]
    if any(len(g) != len(p) for g in gens):
        raise ValueError("generator dimension does not match the point")
    A = [[g[i] for g in gens] for i in range(len(p))] + [[Fraction(1)] * len(gens)]
    b = p + [Fraction(1)]
    for r in range(len(b)):
        if b[r] < 0:
            A[r] = [-v for v in A[r]]
            b[r] = -b[r]
    lam = _phase_one(A, b)
    if lam is None:
        return False, None
    used = [(g, w) for g, w in zip(gens, lam) if w != 0]
    combo = ConvexCombination(tuple(g for g, _ in used), tuple(w for _, w in used))
    assert sum(combo.weights) == 1 and list(combo.point()) == p
    return True, combo


# ---------------------------------------------------------------- domains
#
# Every domain is written as {(lambda @ V) * phase : lambda in the simplex}
# where the rows of V are vertices of the relevant polytope:
#   real ball        sign patterns on maximal stable sets
#   complex ball     |x| ranges over the stable set polytope (indicators of all
#                    stable sets, empty set included) and phases are free
#   slice <f,x> = 1  the vertices above lying on the face exposed by f
# Points built this way are feasible by construction.


def _project_simplex(V: np.ndarray) -> np.ndarray:
    """Euclidean projection of each row onto the probability simplex."""
    k = V.shape[1]
    U = -np.sort(-V, axis=1)
    css = np.cumsum(U, axis=1) - 1.0
    ind = np.arange(1, k + 1)
    cond = U - css / ind > 0
    rho = k - 1 - np.argmax(cond[:, ::-1], axis=1)
    theta = css[np.arange(V.shape[0]), rho] / (rho + 1)
    return np.maximum(V - theta[:, None], 0.0)


def _stable_sets(space: CLSpace) -> list[int]:
    out = {0}
    for s in space.max_stables:
        sub = s
        while sub:
            out.add(sub)
            sub = (sub - 1) & s
    return sorted(out)


def _indicator(n: int, bits: int) -> list[float]:
    return [float(bits >> j & 1) for j in range(n)]


def _sign_patterns(n: int, support: int) -> list[list[float]]:
    verts = members(support)
    out = []
    for mask in range(1 << len(verts)):
        v = [0.0] * n
        for k, j in enumerate(verts):
            v[j] = -1.0 if mask >> k & 1 else 1.0
        out.append(v)
    return out


class _Domain:
    space: CLSpace

    def _setup(self, generators: list[list[float]], fixed: dict[int, complex], is_complex: bool):
        object.__setattr__(self, "generators", np.array(generators, dtype=float))
        object.__setattr__(self, "fixed_phase", dict(fixed))
        object.__setattr__(self, "is_complex", is_complex)

    def points(self, lam: np.ndarray, phi: np.ndarray | None) -> np.ndarray:
        V = self.generators
        R = np.zeros((lam.shape[0], V.shape[1]))
        for k in range(V.shape[0]):
            R = R + lam[:, k:k + 1] * V[k][None, :]
        if not self.is_complex:
            return R
        ph = np.exp(1j * phi)
        for j, c in self.fixed_phase.items():
            ph[:, j] = c
        return R * ph


@dataclass(frozen=True)
class Ball(_Domain):
    """Unit ball of the space; ``nonnegative`` restricts to its real nonnegative part."""
    space: CLSpace
    nonnegative: bool = False

    def __post_init__(self):
        s = self.space
        if self.nonnegative:
            gens = [_indicator(s.n, b) for b in _stable_sets(s)]
            self._setup(gens, {}, False)
        elif s.is_complex:
            self._setup([_indicator(s.n, b) for b in _stable_sets(s)], {}, True)
        else:
            gens = [v for sup in s.max_stables for v in _sign_patterns(s.n, sup)]
            self._setup(gens, {}, False)

    def describe(self) -> dict:
        return {"kind": "nonnegative_face" if self.nonnegative else "ball"}


@dataclass(frozen=True)
class Slice(_Domain):
    """{x in B_X : <f, x> = 1} for a dual extreme functional ``f``.

    With ``free_phase=True`` (complex spaces only) the phases of ``f`` on its
    clique are left free: the domain is the union of the slices of every dual
    extreme point supported on that clique.
    """
    space: CLSpace
    functional: tuple
    free_phase: bool = False

    def __post_init__(self):
        s, f = self.space, self.functional
        if len(f) != s.n:
            raise ValueError("functional has the wrong dimension")
        if dual_norm(s, f) < 1 - FLOAT_TOL:
            raise EmptyDomainError("the slice <f, x> = 1 misses the unit ball")
        if not is_dual_extreme(s, f):
            raise ValueError("slices are supported for dual extreme functionals only")
        if self.free_phase and not s.is_complex:
            raise ValueError("free-phase slices are a union of faces only in complex spaces")
        tau = sum(1 << j for j, c in enumerate(f) if c != 0)
        coeffs = {j: complex(f[j]) for j in members(tau)}
        if s.is_complex:
            gens = [_indicator(s.n, b) for b in _stable_sets(s) if b & tau]
            fixed = {} if self.free_phase else {j: c.conjugate() for j, c in coeffs.items()}
            self._setup(gens, fixed, True)
        else:
            gens = []
            for sup in s.max_stables:
                (j,) = members(sup & tau)
                gens.extend(v for v in _sign_patterns(s.n, sup) if v[j] == coeffs[j].real)
            self._setup(gens, {}, False)

    @property
    def clique(self) -> list[int]:
        return [j for j, c in enumerate(self.functional) if c != 0]

    def describe(self) -> dict:
        return {"kind": "slice", "clique": self.clique, "free_phase": self.free_phase}


def clique_face(space: CLSpace, clique: int) -> Slice:
    f = tuple(Fraction(1) if j in members(clique) else Fraction(0) for j in range(space.n))
    return Slice(space, f, free_phase=True)


# ------------------------------------------------------------ maximize

@dataclass
class MaximizeResult:
    value: float
    argmax: np.ndarray
    trace: list[float]
    points: np.ndarray
    seed: int
    restarts: int

    def to_json(self) -> dict:
        am = self.argmax
        coords = [[float(z.real), float(z.imag)] for z in am] if np.iscomplexobj(am) else [float(z) for z in am]
        return {
            "value": {"value": float(self.value), "exact": False, "kind": "lower_bound"},
            "argmax": {"coords": coords, "exact": False},
            "trace": [float(v) for v in self.trace],
            "seed": self.seed,
            "restarts": self.restarts,
        }


def _starts(domain: _Domain, seed: int, restarts: int) -> tuple[np.ndarray, np.ndarray]:
    K, n = domain.generators.shape
    lams, phis = [], []
    for i in range(restarts):
        rng = np.random.default_rng([seed, i])
        lams.append(rng.dirichlet(np.ones(K)))
        phis.append(rng.uniform(0.0, 2 * np.pi, n))
    return np.array(lams), np.array(phis)


def _x_gradient(objective, X: np.ndarray, is_complex: bool, h: float) -> tuple[np.ndarray, np.ndarray | None]:
    """Central differences of the objective w.r.t. |x_j| and (complex) arg x_j."""
    B, n = X.shape
    if is_complex:
        r = np.abs(X)
        radial = np.exp(1j * np.angle(X))
        dirs = [radial, 1j * radial]
    else:
        dirs = [np.ones_like(X)]
    pert = []
    for D in dirs:
        for j in range(n):
            E = np.zeros_like(X)
            E[:, j] = h * D[:, j]
            pert.append(X + E)
            pert.append(X - E)
    vals = np.asarray(objective(np.concatenate(pert, axis=0)), dtype=float).reshape(len(pert), B)
    G = ((vals[0::2] - vals[1::2]) / (2 * h)).T
    if not is_complex:
        return G, None
    # d/dphi = r * (derivative along i*radial)
    return G[:, :n], G[:, n:] * r


def _polish(objective, domain: _Domain, lam: np.ndarray, phi: np.ndarray):
    """Local SLSQP refinement of one restart over (simplex weights, free phases)."""
    V = domain.generators
    K = V.shape[0]
    cplx = domain.is_complex
    free = [j for j in range(V.shape[1]) if j not in domain.fixed_phase] if cplx else []

    def unpack(z):
        l = z[:K]
        ph = phi.copy()
        if free:
            ph[free] = z[K:]
        return l, ph

    def fun(z):
        l, ph = unpack(z)
        return -float(objective(domain.points(l[None, :], ph[None, :]))[0])

    def jac(z):
        l, ph = unpack(z)
        X = domain.points(l[None, :], ph[None, :])
        gx, gphi = _x_gradient(objective, X, cplx, FD_H)
        g = V @ gx[0]
        if free:
            g = np.concatenate([g, gphi[0][free]])
        return -g

    z0 = np.concatenate([lam, phi[free]]) if free else lam.copy()
    bounds = [(0.0, 1.0)] * K + [(None, None)] * len(free)
    cons = [{"type": "eq", "fun": lambda z: z[:K].sum() - 1.0, "jac": lambda z: np.r_[np.ones(K), np.zeros(len(free))]}]
    res = optimize.minimize(fun, z0, jac=jac, bounds=bounds, constraints=cons, method="SLSQP",
                            options={"maxiter": 100, "ftol": 1e-15})
    l, ph = unpack(res.x)
    l = np.clip(l, 0.0, None)
    total = l.sum()
    if not np.isfinite(total) or total <= 0:
        return lam, phi
    l = l / total
    if fun(np.concatenate([l, ph[free]]) if free else l) < fun(z0):
        return l, ph
    return lam, phi


def maximize(objective: Callable[[np.ndarray], np.ndarray], domain: _Domain, seed: int = 0,
             restarts: int = DEFAULT_RESTARTS, iters: int = DEFAULT_ITERS,
             step0: float = STEP0, decay: float = STEP_DECAY, polish: bool = True) -> MaximizeResult:
    """Seeded multi-start projected ascent of a batched objective.

    ``objective`` maps an array of points (one per row, complex for complex
    domains) to real values. Each restart draws its start from a generator
    seeded by ``(seed, i)``, so the first ``r`` restarts are the same for any
    larger budget. A restart moves by ``step0 * decay**k`` along its
    normalized gradient, ``k`` counting its rejected moves, and keeps a move
    only if it improves the objective.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    V = domain.generators
    cplx = domain.is_complex
    lam, phi = _starts(domain, seed, restarts)
    X = domain.points(lam, phi)
    F = np.asarray(objective(X), dtype=float)
    rejects = np.zeros(restarts)
    for _ in range(iters):
        gx, gphi = _x_gradient(objective, X, cplx, FD_H)
        glam = np.zeros_like(lam)
        for j in range(V.shape[1]):
            glam = glam + gx[:, j:j + 1] * V[:, j][None, :]
        if cplx:
            gphi = gphi.copy()
            for j in domain.fixed_phase:
                gphi[:, j] = 0.0
            sq = (glam * glam).sum(axis=1) + (gphi * gphi).sum(axis=1)
        else:
            sq = (glam * glam).sum(axis=1)
        gn = np.sqrt(sq)
        scale = (step0 * decay ** rejects) / np.where(gn > 0, gn, 1.0)
        lam_new = _project_simplex(lam + glam * scale[:, None])
        phi_new = phi + gphi * scale[:, None] if cplx else phi
        Y = domain.points(lam_new, phi_new)
        FY = np.asarray(objective(Y), dtype=float)
        better = FY > F
        lam = np.where(better[:, None], lam_new, lam)
        phi = np.where(better[:, None], phi_new, phi)
        X = np.where(better[:, None], Y, X)
        F = np.where(better, FY, F)
        rejects = np.where(better, np.maximum(rejects - 1, 0), rejects + 1)
    if polish:
        for i in range(restarts):
            lam[i], phi[i] = _polish(objective, domain, lam[i], phi[i])
        X = domain.points(lam, phi)
        F = np.asarray(objective(X), dtype=float)
    best = int(np.argmax(F))
    return MaximizeResult(float(F[best]), X[best].copy(), [float(v) for v in F], X, seed, restarts)


def abs_poly_objective(compiled) -> Callable[[np.ndarray], np.ndarray]:
    return lambda X: np.abs(compiled(X))
