"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``python3 -m pytest tests/test_acceptance.py -s`` (or execute
this file directly) to see the summary lines on the terminal.
"""

import itertools
import random
import sys
import time
from fractions import Fraction

import networkx as nx
import numpy as np
import pytest

from clspaces.analysis import (
    INDEX_ONE,
    complex_extreme_test,
    index_one_classify,
    lee_condition_check,
    numerical_radius_lower,
    orbit_distance,
    perturbation_step,
    strongly_attaining_points,
    upper_monotonicity_test,
    vector_poly_norm_estimate,
    verify_attainment,
    l1_norm_bound,
)
from clspaces.clspace import (
    COMPLEX,
    REAL,
    ell1,
    ell_infty,
    graph_of_norm,
    nonnegative_extreme_points,
    norm,
    reisner_check,
    space_from_graph,
)
from clspaces.graph_core import complement, complete_graph, cycle_graph, make_graph
from clspaces.graph_core import is_perfect
from clspaces.numerics import Ball, abs_poly_objective, conv_membership, maximize
from clspaces.poly import HomPoly, build_Q, evaluate, lemma_prediction, q_lemma, zero

from conftest import all_graphs, reisner_graphs
from oracles import conv_oracle, naive_is_perfect


@pytest.fixture
def verdict(capsys):
    """Print one summary line per criterion, then assert."""
    def emit(label, ok, detail, started):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail} ({time.perf_counter() - started:.1f}s)"
        with capsys.disabled():
            print("\n" + line)
        assert ok, line
    return emit


def test_criterion_1_reisner_roundtrip(verdict):
    t0 = time.perf_counter()
    checked = failures = 0
    for n in (2, 3, 4, 5):
        for g in all_graphs(n):
            if not reisner_check(g).passed:
                continue
            s = space_from_graph(g)
            checked += 1
            failures += graph_of_norm(lambda x: norm(s, x), n) != g
    elapsed = time.perf_counter() - t0
    verdict("1 graph/norm roundtrip", failures == 0 and elapsed < 60,
            f"{checked} CL-space graphs, {failures} mismatches", t0)


def _rational_corpus(seed=20240601, count=40, max_n=6):
    rng = random.Random(seed)
    out = [(Fraction(0),), (Fraction(1), Fraction(-1)), (Fraction(0),) * 4]
    for _ in range(count):
        n = rng.randint(1, max_n)
        out.append(tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 12)) for _ in range(n)))
    return out


def test_criterion_2_specializations(verdict):
    t0 = time.perf_counter()
    bad = 0
    vectors = _rational_corpus()
    for x in vectors:
        n = len(x)
        for fld in (REAL, COMPLEX):
            l1 = space_from_graph(complete_graph(n), fld)
            linf = space_from_graph(make_graph(n, []), fld)
            bad += norm(l1, x) != sum(abs(v) for v in x)
            bad += norm(linf, x) != max(abs(v) for v in x)
    elapsed = time.perf_counter() - t0
    verdict("2 l1 / l_infty specializations", bad == 0 and elapsed < 1,
            f"{len(vectors)} rational vectors x 2 fields, {bad} mismatches", t0)


def _l1_ball_grid(N, den):
    rng = range(-den, den + 1)
    pts = np.array([c for c in itertools.product(rng, repeat=N) if sum(map(abs, c)) <= den], dtype=float)
    return pts / den


def test_criterion_3_single_clique_peak(verdict):
    t0 = time.perf_counter()
    tuples = exact_bad = excess_bad = cluster_bad = 0
    worst_excess = -np.inf
    for N in (1, 2, 3):
        grid = _l1_ball_grid(N, 60)
        s = ell1(N)
        for m in (1, 2, 3):
            for idx in itertools.product(range(N), repeat=m):
                tuples += 1
                q = q_lemma(N, idx)
                pred = lemma_prediction(N, idx)
                counts = [idx.count(j) for j in set(idx)]
                closed_form = np.prod([Fraction(c, m) ** c for c in counts]) + 1
                exact_bad += not (evaluate(q, pred.point) == pred.predicted_norm == closed_form)
                claim = float(pred.predicted_norm)
                vals = np.abs(q.compiled()(grid))
                res = maximize(abs_poly_objective(q.compiled()), Ball(s), seed=0)
                excess = max(vals.max(), res.value) - claim
                worst_excess = max(worst_excess, excess)
                excess_bad += excess > 1e-9
                near = np.vstack([grid[vals >= claim - 1e-6],
                                  res.points[np.array(res.trace) >= claim - 1e-6]])
                if len(near):
                    cluster_bad += orbit_distance(s, near, pred.point).max() > 5e-2
    elapsed = time.perf_counter() - t0
    ok = exact_bad == excess_bad == cluster_bad == 0 and elapsed < 300
    verdict("3 single-clique peak polynomial", ok,
            f"{tuples} index tuples; exact {exact_bad}, excess {excess_bad} "
            f"(worst {worst_excess:.2e}), off-orbit {cluster_bad}", t0)


def test_criterion_4_peak_polynomials(verdict):
    t0 = time.perf_counter()
    spaces = reisner_graphs(4)
    identity_bad = perm_bad = attain_bad = multisets = ordered = complex_runs = 0
    for g in spaces:
        real = space_from_graph(g, REAL)
        cplx = space_from_graph(g, COMPLEX)
        ys = nonnegative_extreme_points(real)
        for m in (2, 3):
            for combo in itertools.combinations_with_replacement(ys, m):
                multisets += 1
                q0, pred0 = build_Q(real, combo)
                for perm in set(itertools.permutations(combo)):
                    ordered += 1
                    q, pred = build_Q(real, perm)
                    identity_bad += evaluate(q, pred.point) != pred.predicted_norm
                    perm_bad += q != q0 or pred.predicted_norm != pred0.predicted_norm
                rep = verify_attainment(real, q0, pred0, 1e-6, 5e-2, seed=0, restarts=64)
                attain_bad += not rep.verdict
                if g.n <= 3:
                    complex_runs += 1
                    rep = verify_attainment(cplx, q0, pred0, 1e-6, 5e-2, seed=0, restarts=64)
                    attain_bad += not rep.verdict
    elapsed = time.perf_counter() - t0
    ok = identity_bad == perm_bad == attain_bad == 0 and elapsed < 600
    verdict("4 peak polynomials on CL-spaces", ok,
            f"{len(spaces)} spaces, {ordered} ordered tuples / {multisets} multisets "
            f"(+{complex_runs} complex runs); identity {identity_bad}, order {perm_bad}, "
            f"attainment {attain_bad} failures", t0)


def test_criterion_5_index_one(verdict):
    t0 = time.perf_counter()
    spaces = reisner_graphs(5)
    bad = []
    for g in spaces:
        s = space_from_graph(g, COMPLEX)
        c = index_one_classify(s, 2)
        edgeless = not g.edges()
        if (c.verdict == INDEX_ONE) != edgeless:
            bad.append((g, "verdict"))
            continue
        points, _ = strongly_attaining_points(s, 2)
        violations = lee_condition_check(s, points, 2)
        if edgeless:
            if violations:
                bad.append((g, "lee on edgeless"))
            continue
        if not (isinstance(c.value, Fraction) and c.value == 0):
            bad.append((g, "witness value"))
        mid = tuple((a + b) / 2 for a, b in zip(c.x, c.y))
        f = c.functional.to_vector(s.n)
        if mid not in points or not violations:
            bad.append((g, "cross-check"))
        elif not any(v.point == mid and v.value == 0 and v.kind == "min" for v in violations):
            bad.append((g, "lee value"))
        if sum(a * b for a, b in zip(f, mid)) != 0:
            bad.append((g, "pairing"))
    elapsed = time.perf_counter() - t0
    verdict("5 index-one classification", not bad and elapsed < 60,
            f"{len(spaces)} complex CL-spaces, {len(bad)} failures {bad[:3]}", t0)


def _lp_instances(seed=7, count=400):
    rng = random.Random(seed)
    for _ in range(count):
        d = rng.randint(1, 5)
        k = rng.randint(1, 6)
        gens = [tuple(rng.randint(-2, 2) for _ in range(d)) for _ in range(k)]
        if rng.random() < 0.5:
            w = [Fraction(rng.randint(0, 4)) for _ in gens]
            if sum(w) == 0:
                w[0] = Fraction(1)
            total = sum(w)
            point = tuple(sum(wi * g[i] for wi, g in zip(w, gens)) / total for i in range(d))
        else:
            point = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(d))
        yield point, gens


def _nonneg_sphere_points(n, den, ones):
    """Nonnegative rational vectors (denominators dividing ``den``) on the unit sphere."""
    for c in itertools.product(range(den + 1), repeat=n):
        x = tuple(Fraction(v, den) for v in c)
        if (sum(x) if not ones else max(x)) == 1:
            yield x


def test_criterion_6_complex_extreme(verdict):
    t0 = time.perf_counter()
    lp_bad = lp_total = lp_members = 0
    for point, gens in _lp_instances():
        lp_total += 1
        ok, _ = conv_membership(point, gens)
        lp_members += ok
        lp_bad += ok != conv_oracle(point, gens)
    l1_bad = l1_total = 0
    for n in range(1, 5):
        sc, sr = ell1(n, COMPLEX), ell1(n, REAL)
        for den in (1, 2, 3, 4, 5, 6):
            for x in _nonneg_sphere_points(n, den, ones=False):
                l1_total += 1
                l1_bad += not complex_extreme_test(sc, x).verdict
                l1_bad += not upper_monotonicity_test(sr, x).verdict
    linf_bad = linf_total = 0
    for n in range(1, 5):
        sc, sr = ell_infty(n, COMPLEX), ell_infty(n, REAL)
        for den in (1, 2, 3, 4):
            for x in _nonneg_sphere_points(n, den, ones=True):
                linf_total += 1
                expected = all(v == 1 for v in x)
                linf_bad += complex_extreme_test(sc, x).verdict != expected
                linf_bad += upper_monotonicity_test(sr, x).verdict != expected
    elapsed = time.perf_counter() - t0
    ok = lp_bad == l1_bad == linf_bad == 0 and elapsed < 30
    verdict("6 complex extreme points / upper monotonicity", ok,
            f"LP vs oracle {lp_bad}/{lp_total} mismatches ({lp_members} members); "
            f"l1 {l1_bad}/{l1_total}; l_infty {linf_bad}/{linf_total}", t0)


def test_criterion_7_perfectness(verdict):
    t0 = time.perf_counter()
    bad = total = 0
    for n in range(1, 6):
        for g in all_graphs(n):
            total += 1
            bad += is_perfect(g)[0] != naive_is_perfect(g)
    atlas = [h for h in nx.graph_atlas_g() if 6 <= h.number_of_nodes() <= 7]
    for h in atlas:
        total += 1
        g = make_graph(h.number_of_nodes(), list(h.edges()))
        bad += is_perfect(g)[0] != naive_is_perfect(g)
    holes = [cycle_graph(5), cycle_graph(7), complement(cycle_graph(7))]
    rejected = sum(not is_perfect(g)[0] for g in holes)
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and rejected == 3 and elapsed < 120
    verdict("7 perfectness oracle", ok,
            f"{total} graphs (all labeled n<=5, all unlabeled n=6,7), {bad} disagreements; "
            f"odd hole/antihole rejections {rejected}/3", t0)


def _random_vector_poly(rng, n=2, m=2):
    alphas = [a for a in itertools.product(range(m + 1), repeat=n) if sum(a) == m]
    comps = []
    for _ in range(n):
        terms = {a: Fraction(int(rng.integers(0, 101)), 100) for a in alphas}
        comps.append(HomPoly(n, m, {a: c for a, c in terms.items() if c}))
    return comps


def test_criterion_8_numerical_radius(verdict):
    t0 = time.perf_counter()
    s = ell_infty(2, COMPLEX)
    worst = np.inf
    bad = 0
    for i in range(20):
        P = _random_vector_poly(np.random.default_rng([8, i]))
        if all(p.is_zero() for p in P):
            continue
        est = vector_poly_norm_estimate(s, P, seed=i).value
        bound = numerical_radius_lower(s, P, seed=i).value
        ratio = bound / est
        worst = min(worst, ratio)
        bad += bound < (1 - 1e-3) * est
    elapsed = time.perf_counter() - t0
    verdict("8 numerical radius on complex l_infty^2", bad == 0 and elapsed < 120,
            f"20 polynomials, {bad} below (1-1e-3)||P||, worst ratio {worst:.6f}", t0)


def _poly(n, m, terms):
    return HomPoly(n, m, {tuple(a): Fraction(c) for a, c in terms.items()})


PERTURBATION_CORPUS = [
    # (f, h, w, eps, k, n_ball); f - h is nearly normed at e_w
    (_poly(1, 2, {(2,): 1}), zero(1, 2), 0, "1/10", 2, 4),
    (_poly(2, 2, {(2, 0): 1}), zero(2, 2), 0, "1/10", 2, 4),
    (_poly(2, 2, {(2, 0): 1, (1, 1): "1/20"}), zero(2, 2), 0, "1/2", 2, 4),
    (_poly(2, 2, {(0, 2): -2, (1, 1): "1/50"}), _poly(2, 2, {(2, 0): "1/100"}), 1, "1/3", 2, 3),
    (_poly(2, 3, {(3, 0): 1, (2, 1): "1/100"}), zero(2, 3), 0, "1/4", 3, 5),
    (_poly(3, 2, {(0, 0, 2): 3, (1, 1, 0): "1/10"}), _poly(3, 2, {(0, 1, 1): "1/20"}), 2, "1/5", 2, 2),
    (_poly(3, 3, {(0, 3, 0): -1, (1, 1, 1): "1/50"}), zero(3, 3), 1, "1/2", 3, 4),
    (_poly(3, 2, {(2, 0, 0): 1, (0, 2, 0): "1/50"}), _poly(3, 2, {(0, 0, 2): "1/50"}), 0, "1/2", 2, 2),
]


def test_criterion_9_perturbation(verdict):
    t0 = time.perf_counter()
    bound_bad = sharp_bad = hyp_bad = 0
    margins = []
    for f, h, w, eps, k, n_ball in PERTURBATION_CORPUS:
        rep = perturbation_step(f, h, w, Fraction(eps), k, n_ball, seed=0)
        bound_bad += not (l1_norm_bound(rep.g - h) <= Fraction(eps))
        sharp_bad += not rep.holds
        hyp_bad += not rep.norming_ok
        margins.append(rep.margin)
    elapsed = time.perf_counter() - t0
    ok = bound_bad == sharp_bad == hyp_bad == 0 and elapsed < 60
    verdict("9 perturbation step on l1^n", ok,
            f"{len(PERTURBATION_CORPUS)} configurations; bound {bound_bad}, sharpness {sharp_bad}, "
            f"norming hypothesis {hyp_bad} failures; min margin {min(margins):.4f}", t0)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
