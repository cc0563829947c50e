"""Command-line front end: one subcommand per analysis, one JSON document out.

Exit status: 0 for success / positive verdicts, 1 for negative mathematical
verdicts (not a CL-space, attainment fails, not index one, ...), 2 for usage
and input errors. Vertices are 0-based everywhere.
"""

from __future__ import annotations

import argparse
import itertools
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import analysis
from .clspace import (
    COMPLEX,
    REAL,
    NotCLSpaceError,
    dual_extreme_points,
    dual_norm,
    extreme_points,
    norm,
    reisner_check,
    space_from_graph,
)
from .graph_core import (
    GraphError,
    chromatic_number,
    clique_number,
    graph_from_json,
    is_perfect,
    make_graph,
    maximal_cliques,
    maximal_stable_sets,
    members,
    PERFECT_CHECK_LIMIT,
)
from .numerics import DEFAULT_RESTARTS
from .poly import AttainmentPrediction, build_Q, poly_from_json
from .scalars import IrrationalModulus, number_json, to_scalar, vector_json

EXIT_OK, EXIT_VERDICT, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    restarts: int = DEFAULT_RESTARTS
    tol_value: float = 1e-6
    tol_point: float = 5e-2
    mode: str = "exact"

    def __post_init__(self):
        if self.restarts < 1:
            raise UsageError("--restarts must be >= 1")
        if self.tol_value <= 0 or self.tol_point <= 0:
            raise UsageError("tolerances must be positive")
        if self.mode not in ("exact", "float"):
            raise UsageError("--mode must be exact or float")

    @property
    def exact(self) -> bool:
        return self.mode == "exact"

    def to_json(self) -> dict:
        return {"seed": self.seed, "restarts": self.restarts, "tol_value": self.tol_value,
                "tol_point": self.tol_point, "mode": self.mode}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _load(arg: str):
    """A JSON document given inline or as a path to a file."""
    path = Path(arg)
    try:
        text = path.read_text() if path.is_file() else arg
    except OSError as exc:
        raise UsageError(str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON in {arg!r}: {exc}") from exc


def _graph(arg: str):
    doc = _load(arg)
    if isinstance(doc, dict) and "graph" in doc:
        doc = doc["graph"]
    return graph_from_json(doc)


def _space(arg: str, field: str | None = None):
    doc = _load(arg)
    graph = graph_from_json(doc["graph"] if "graph" in doc else doc)
    fld = field or doc.get("field", REAL)
    return space_from_graph(graph, fld)


def _vector(arg, cfg: RunConfig) -> tuple:
    doc = _load(arg) if isinstance(arg, str) else arg
    if not isinstance(doc, list):
        raise UsageError("a vector is a JSON list")
    return tuple(to_scalar(v, cfg.exact) for v in doc)


def _poly(arg: str, cfg: RunConfig):
    return poly_from_json(_load(arg), cfg.exact)


# ------------------------------------------------------------ subcommands

def cmd_graph_info(args, cfg):
    g = _graph(args.graph)
    out = {
        "graph": g.to_json(),
        "maximal_cliques": [members(c) for c in maximal_cliques(g)],
        "maximal_stable_sets": [members(s) for s in maximal_stable_sets(g)],
        "clique_number": clique_number(g),
        "chromatic_number": chromatic_number(g),
    }
    if g.n <= PERFECT_CHECK_LIMIT:
        ok, wit = is_perfect(g)
        out["perfect"] = ok
        out["perfect_witness"] = None if wit is None else members(wit)
    return out, EXIT_OK


def cmd_check_cl(args, cfg):
    report = reisner_check(_graph(args.graph))
    return report.to_json(), EXIT_OK if report.passed else EXIT_VERDICT


def cmd_norm(args, cfg):
    s = _space(args.space)
    x = _vector(args.vector, cfg)
    value = dual_norm(s, x) if args.dual else norm(s, x)
    return {"space": s.to_json(), "vector": vector_json(x), "dual": args.dual,
            "norm": number_json(value)}, EXIT_OK


def cmd_extremes(args, cfg):
    s = _space(args.space)
    pts = dual_extreme_points(s) if args.dual else extreme_points(s)
    return {"space": s.to_json(), "dual": args.dual,
            "representatives": [p.to_json() for p in pts],
            "orbits": s.is_complex}, EXIT_OK


def _ys(arg, cfg):
    doc = _load(arg)
    if not isinstance(doc, list) or not doc:
        raise UsageError("--ys must be a nonempty JSON list of vectors")
    return [_vector(y, RunConfig(mode="exact")) for y in doc]


def cmd_build_q(args, cfg):
    s = _space(args.space)
    q, pred = build_Q(s, _ys(args.ys, cfg))
    return {"space": s.to_json(), "polynomial": q.to_json(), "prediction": pred.to_json()}, EXIT_OK


def cmd_verify_attainment(args, cfg):
    s = _space(args.space)
    if args.ys:
        q, pred = build_Q(s, _ys(args.ys, cfg))
    else:
        if not (args.poly and args.point and args.claimed_norm):
            raise UsageError("give --ys, or all of --poly, --point and --claimed-norm")
        q = _poly(args.poly, RunConfig(mode="exact"))
        point = _vector(args.point, RunConfig(mode="exact"))
        pred = AttainmentPrediction(point, to_scalar(args.claimed_norm, True), ())
    report = analysis.verify_attainment(s, q, pred, cfg.tol_value, cfg.tol_point, cfg.seed, cfg.restarts)
    out = {"space": s.to_json(), "polynomial": q.to_json(), "report": report.to_json(),
           "config": cfg.to_json()}
    return out, EXIT_OK if report.verdict else EXIT_VERDICT


def cmd_attaining_points(args, cfg):
    s = _space(args.space)
    pts, truncated = analysis.strongly_attaining_points(s, args.m, args.cap)
    return {"space": s.to_json(), "m": args.m, "points": [vector_json(p) for p in pts],
            "truncated": truncated}, EXIT_OK


def cmd_complex_extreme(args, cfg):
    if not cfg.exact:
        raise UsageError("membership certificates need --mode exact")
    if args.upper_monotonicity:
        s = _space(args.space, REAL)
        cert = analysis.upper_monotonicity_test(s, _vector(args.vector, cfg))
    else:
        s = _space(args.space, COMPLEX)
        cert = analysis.complex_extreme_test(s, _vector(args.vector, cfg))
    return {"space": s.to_json(), "result": cert.to_json()}, EXIT_OK if cert.verdict else EXIT_VERDICT


def cmd_classify_index(args, cfg):
    s = _space(args.space, COMPLEX)
    c = analysis.index_one_classify(s, args.k)
    return {"space": s.to_json(), "classification": c.to_json()}, (
        EXIT_OK if c.verdict == analysis.INDEX_ONE else EXIT_VERDICT)


def cmd_lee_check(args, cfg):
    s = _space(args.space)
    pts, truncated = analysis.strongly_attaining_points(s, args.k, args.cap)
    violations = analysis.lee_condition_check(s, pts, args.k)
    return {
        "space": s.to_json(), "k": args.k, "points_checked": len(pts), "truncated": truncated,
        "violations": [v.to_json() for v in violations],
        "note": "a violation disproves index one; no violation proves nothing",
    }, EXIT_VERDICT if violations else EXIT_OK


def _vector_poly(arg, cfg):
    doc = _load(arg)
    comps = doc["components"] if isinstance(doc, dict) else doc
    return [poly_from_json(c, cfg.exact) for c in comps]


def cmd_numerical_radius(args, cfg):
    s = _space(args.space)
    P = _vector_poly(args.poly, cfg)
    bound = analysis.numerical_radius_lower(s, P, cfg.seed, cfg.restarts)
    est = analysis.vector_poly_norm_estimate(s, P, cfg.seed, cfg.restarts)
    return {"space": s.to_json(), "bound": bound.to_json(),
            "norm_estimate": {"value": est.value, "exact": False, "kind": "lower_bound"},
            "config": cfg.to_json()}, EXIT_OK


def cmd_perturb(args, cfg):
    f = _poly(args.f, cfg)
    h = _poly(args.h, cfg)
    eps = to_scalar(args.eps, cfg.exact)
    rep = analysis.perturbation_step(f, h, args.w, eps, args.k, args.n_ball, cfg.seed, cfg.restarts)
    return {"report": rep.to_json(), "config": cfg.to_json()}, EXIT_OK if rep.holds else EXIT_VERDICT


def cmd_frechet_probe(args, cfg):
    s = _space(args.space)
    P = _poly(args.poly, cfg)
    try:
        ladder = [float(t) for t in args.ladder.split(",") if t.strip()]
    except ValueError as exc:
        raise UsageError(f"bad --ladder: {exc}") from exc
    probe = analysis.frechet_probe(s, P, ladder, args.directions, cfg.seed, cfg.restarts)
    return {"space": s.to_json(), "probe": probe.to_json(), "config": cfg.to_json()}, EXIT_OK


def cmd_enumerate_reisner(args, cfg):
    n = args.n
    if not 1 <= n <= 5:
        raise UsageError("enumerate-reisner supports 1 <= n <= 5")
    pairs = list(itertools.combinations(range(n), 2))
    found = []
    for mask in range(1 << len(pairs)):
        g = make_graph(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if reisner_check(g).passed:
            s = space_from_graph(g, COMPLEX)
            c = analysis.index_one_classify(s, args.k)
            found.append({"graph": g.to_json(), "classification": c.verdict})
    return {"n": n, "k": args.k, "count": len(found), "spaces": found}, EXIT_OK


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    common.add_argument("--tol-value", type=float, default=1e-6)
    common.add_argument("--tol-point", type=float, default=5e-2)
    common.add_argument("--mode", choices=("exact", "float"), default="exact")

    parser = _Parser(prog="clspaces", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("graph-info", cmd_graph_info, "cliques, stable sets, omega, chi, perfectness")
    p.add_argument("graph")
    p = add("check-cl", cmd_check_cl, "does the graph define a CL-space")
    p.add_argument("graph")
    p = add("norm", cmd_norm, "norm (or dual norm) of a vector")
    p.add_argument("space")
    p.add_argument("--vector", required=True)
    p.add_argument("--dual", action="store_true")
    p = add("extremes", cmd_extremes, "extreme points of the (dual) unit ball")
    p.add_argument("space")
    p.add_argument("--dual", action="store_true")
    p = add("build-q", cmd_build_q, "peak polynomial for a tuple of nonnegative extreme points")
    p.add_argument("space")
    p.add_argument("--ys", required=True)
    p = add("verify-attainment", cmd_verify_attainment, "numerically verify strong norm attainment")
    p.add_argument("space")
    p.add_argument("--ys")
    p.add_argument("--poly")
    p.add_argument("--point")
    p.add_argument("--claimed-norm")
    p = add("attaining-points", cmd_attaining_points, "certified strongly norm-attaining points")
    p.add_argument("space")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--cap", type=int, default=None)
    p = add("complex-extreme", cmd_complex_extreme, "complex extreme point test with certificate")
    p.add_argument("space")
    p.add_argument("--vector", required=True)
    p.add_argument("--upper-monotonicity", action="store_true",
                   help="run the real-space upper monotonicity test instead")
    p = add("classify-index", cmd_classify_index, "decide whether n^(k)(X) = 1")
    p.add_argument("space")
    p.add_argument("--k", type=int, default=2)
    p = add("lee-check", cmd_lee_check, "pair certified peak points with dual extreme points")
    p.add_argument("space")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--cap", type=int, default=None)
    p = add("numerical-radius", cmd_numerical_radius, "lower bound on the numerical radius")
    p.add_argument("space")
    p.add_argument("--poly", required=True, help="list of component polynomials")
    p = add("perturb", cmd_perturb, "one perturbation step on l1^n")
    p.add_argument("--f", required=True)
    p.add_argument("--h", required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--eps", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-ball", type=int, required=True)
    p = add("frechet-probe", cmd_frechet_probe, "heuristic Frechet differentiability probe")
    p.add_argument("space")
    p.add_argument("--poly", required=True)
    p.add_argument("--ladder", default="1e-1,1e-2,1e-3")
    p.add_argument("--directions", type=int, default=50)
    p = add("enumerate-reisner", cmd_enumerate_reisner, "all CL-space graphs on n <= 5 vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    return parser


def run(argv: list[str] | None = None, stream=None) -> int:
    stream = stream or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing subcommand")
        cfg = RunConfig(args.seed, args.restarts, args.tol_value, args.tol_point, args.mode)
        out, code = args.func(args, cfg)
    except NotCLSpaceError as exc:
        out, code = {"error": {"type": "NotCLSpace", "message": str(exc)},
                     "report": exc.report.to_json()}, EXIT_VERDICT
    except (UsageError, GraphError, IrrationalModulus, ValueError, TypeError, KeyError,
            IndexError, ArithmeticError) as exc:
        out, code = {"error": {"type": type(exc).__name__, "message": str(exc)}}, EXIT_USAGE
    json.dump(out, stream, indent=2)
    stream.write("\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
