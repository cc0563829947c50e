import itertools
import json
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clspaces.clspace import COMPLEX, ell1, nonnegative_extreme_points, norm, space_from_graph
from clspaces.graph_core import path_graph
from clspaces.poly import (
    DegreeError,
    HomPoly,
    build_Q,
    evaluate,
    lemma_prediction,
    linear_form,
    monomial,
    poly_from_json,
    power,
    q_lemma,
)
from clspaces.scalars import GaussianRational

from conftest import reisner_graphs

small = st.fractions(min_value=-2, max_value=2, max_denominator=6)


@st.composite
def polys(draw, n=3, m=2):
    alphas = [a for a in itertools.product(range(m + 1), repeat=n) if sum(a) == m]
    chosen = draw(st.lists(st.sampled_from(alphas), unique=True, max_size=4))
    coeffs = draw(st.lists(small.filter(bool), min_size=len(chosen), max_size=len(chosen)))
    return HomPoly(n, m, dict(zip(chosen, coeffs)))


def test_validation():
    with pytest.raises(DegreeError):
        HomPoly(2, 2, {(1, 0): Fraction(1)})
    with pytest.raises(ValueError):
        HomPoly(2, 1, {(1, 0): Fraction(0)})
    with pytest.raises(DegreeError):
        linear_form([1, 0]) + monomial(2, (1, 1))


@settings(max_examples=100, deadline=None)
@given(polys(), polys(), st.lists(small, min_size=3, max_size=3))
def test_ring_operations_commute_with_evaluation(p, q, x):
    assert evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x)
    assert evaluate(p - q, x) == evaluate(p, x) - evaluate(q, x)
    assert evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x)


@settings(max_examples=100, deadline=None)
@given(polys(), st.lists(small, min_size=3, max_size=3))
def test_compiled_matches_exact(p, x):
    value = p.compiled()(np.array([[float(a) for a in x]]))[0]
    assert value == pytest.approx(float(evaluate(p, x)), abs=1e-12)


@settings(max_examples=50, deadline=None)
@given(polys())
def test_json_roundtrip(p):
    assert poly_from_json(json.loads(json.dumps(p.to_json()))) == p


def test_complex_coefficients_and_points():
    i = GaussianRational(Fraction(0), Fraction(1))
    p = poly_from_json({"n": 2, "m": 2, "terms": [{"alpha": [1, 1], "coeff": [0, 1]}]})
    assert p.terms[(1, 1)] == i
    assert evaluate(p, (i, Fraction(1))) == -1
    assert p.compiled()(np.array([[1j, 1.0]]))[0] == pytest.approx(-1)


def test_power_expands_binomially():
    assert power(linear_form([1, 1]), 2) == HomPoly(2, 2, {(2, 0): Fraction(1), (1, 1): Fraction(2), (0, 2): Fraction(1)})


def test_q_lemma_examples():
    q = q_lemma(3, (0, 1))
    pred = lemma_prediction(3, (0, 1))
    assert pred.point == (Fraction(1, 2), Fraction(1, 2), 0)
    assert pred.predicted_norm == Fraction(5, 4) == evaluate(q, pred.point)
    q2 = q_lemma(2, (0, 0))
    assert evaluate(q2, (1, 0)) == 2 == lemma_prediction(2, (0, 0)).predicted_norm
    with pytest.raises(IndexError):
        q_lemma(2, (0, 2))


def grid_simplex(N, den):
    for c in itertools.product(range(den + 1), repeat=N):
        if sum(c) == den:
            yield tuple(Fraction(k, den) for k in c)


@pytest.mark.parametrize("indices", [(0, 1), (0, 0, 1), (0, 1, 2), (1, 1)])
def test_q_lemma_grid_oracle(indices):
    """On the nonnegative simplex (where the max of a positive-coefficient poly lives)."""
    q = q_lemma(3, indices)
    pred = lemma_prediction(3, indices)
    best = max(evaluate(q, x) for x in grid_simplex(3, 30))
    assert best <= pred.predicted_norm


def test_build_q_l1_example():
    s = ell1(3)
    q, pred = build_Q(s, [(1, 0, 0), (0, 1, 0)])
    assert q == q_lemma(3, (0, 1)) + power(linear_form([1, 1, 0]), 2)
    assert pred.point == (Fraction(1, 2), Fraction(1, 2), 0)
    assert pred.predicted_norm == Fraction(9, 4) == evaluate(q, pred.point)


def test_build_q_p3_example():
    s = space_from_graph(path_graph(3))
    q, pred = build_Q(s, [(1, 0, 1), (0, 1, 0)])
    assert pred.point == (Fraction(1, 2),) * 3
    assert pred.predicted_norm == Fraction(13, 2) == evaluate(q, pred.point)
    hits = [h for _, h, _ in pred.per_clique]
    assert hits == [(0, 1), (2, 1)]


def test_build_q_rejects_bad_input():
    s = space_from_graph(path_graph(3))
    with pytest.raises(DegreeError):
        build_Q(s, [(1, 0, 1)])
    with pytest.raises(ValueError):
        build_Q(s, [(1, 0, 0), (0, 1, 0)])
    with pytest.raises(ValueError):
        build_Q(s, [(-1, 0, 1), (0, 1, 0)])


@pytest.mark.parametrize("g", reisner_graphs(4), ids=lambda g: str(g.edges()))
def test_build_q_identity_everywhere(g):
    s = space_from_graph(g)
    ys = nonnegative_extreme_points(s)
    for m in (2, 3):
        for tup in itertools.combinations_with_replacement(ys, m):
            q, pred = build_Q(s, tup)
            assert norm(s, pred.point) == 1
            assert evaluate(q, pred.point) == pred.predicted_norm


def test_build_q_same_for_complex_field():
    g = path_graph(3)
    ys = [(1, 0, 1), (0, 1, 0)]
    assert build_Q(space_from_graph(g), ys)[0] == build_Q(space_from_graph(g, COMPLEX), ys)[0]
