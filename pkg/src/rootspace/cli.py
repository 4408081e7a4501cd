"""Command-line front end.

Exit codes: 0 success, 1 bad input, 2 solver or tracking failure,
3 a certificate that does not hold.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import io
from .core import MonicPolynomial, RootMultiset, multiset_metric, poly_metric
from .ordering import discontinuity_witness
from .paths import TrackingError, track
from .perturbation import RS_SMALL_DELTA, BoundName, certify
from .rootfinder import ConvergenceError, SolverConfig, cauchy_bound, solve
from .vieta import expand

EXIT_OK, EXIT_INPUT, EXIT_SOLVER, EXIT_CERTIFICATE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load_poly(path: str) -> MonicPolynomial:
    try:
        return io.parse_poly(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _load_multiset(path: str) -> RootMultiset:
    try:
        return io.parse_multiset(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(args, doc) -> None:
    text = io.dumps(doc) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _solver_config(args) -> SolverConfig:
    kw = {}
    if args.tol is not None:
        kw["residual_tolerance"] = args.tol
    if args.max_iter is not None:
        kw["max_iterations"] = args.max_iter
    try:
        return SolverConfig(**kw)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_roots(args) -> int:
    p = _load_poly(args.input)
    report = solve(p, _solver_config(args))
    doc = io.multiset_document(report.roots)
    doc["report"] = {
        "converged": report.converged,
        "iterations": report.iterations,
        "max_residual": report.max_residual,
        "cauchy_bound": cauchy_bound(p),
    }
    _emit(args, doc)
    return EXIT_OK if report.converged else EXIT_SOLVER


def cmd_metric(args) -> int:
    if args.space == "poly":
        f, g = _load_poly(args.a), _load_poly(args.b)
        if f.degree != g.degree:
            raise InputError("size mismatch: degrees differ")
        _emit(args, {"space": "poly", "value": poly_metric(f, g)})
    else:
        U, V = _load_multiset(args.a), _load_multiset(args.b)
        if U.size != V.size:
            raise InputError("size mismatch: multisets differ in size")
        m = multiset_metric(U, V)
        _emit(args, {"space": "roots", "value": m.value, "permutation": list(m.permutation)})
    return EXIT_OK


def cmd_expand(args) -> int:
    _emit(args, io.poly_document(expand(_load_multiset(args.input))))
    return EXIT_OK


def cmd_certify(args) -> int:
    f, g = _load_poly(args.f), _load_poly(args.g)
    if f.degree != g.degree:
        raise InputError("degree mismatch")
    cert = certify(f, g, args.bound, small_delta=args.small_delta)
    _emit(args, {
        "bound": cert.bound_name.value,
        "bound_value": cert.bound_value,
        "measured_dF": cert.measured_dF,
        "holds": cert.holds,
        "applicable": cert.applicable,
    })
    return EXIT_OK if cert.holds else EXIT_CERTIFICATE


def cmd_track(args) -> int:
    p, q = _load_poly(args.p), _load_poly(args.q)
    if p.degree != q.degree:
        raise InputError("degree mismatch")
    if args.steps < 1:
        raise InputError("--steps must be at least 1")
    traj = track(p, q, args.steps)
    rows = [
        {"t": t, "elems": io.multiset_document(V)["elems"], "step_dF": d}
        for t, V, d in zip(traj.ts[1:], traj.root_sets[1:], traj.step_dFs)
    ]
    _emit(args, {"start": {"t": traj.ts[0], "elems": io.multiset_document(traj.root_sets[0])["elems"]},
                 "rows": rows})
    return EXIT_OK


def cmd_demo_discontinuity(args) -> int:
    if args.k_max < 2:
        raise InputError("--k-max must be at least 2")
    w = discontinuity_witness(args.k_max)
    _emit(args, {
        "limit_poly": io.poly_document(w.limit_poly),
        "rows": [
            {"k": k, "poly": io.poly_document(p), "dF_gap": d, "ordered_gap": o}
            for k, (p, d, o) in enumerate(zip(w.sequence_polys, w.dF_gaps, w.ordered_gaps), start=1)
        ],
    })
    return EXIT_OK


def cmd_sample(args) -> int:
    if args.n < 2:
        raise InputError("--n must be at least 2")
    rng = np.random.default_rng(args.seed)
    z = args.radius * np.sqrt(rng.uniform(size=args.n)) * np.exp(2j * np.pi * rng.uniform(size=args.n))
    if args.kind == "poly":
        _emit(args, io.poly_document(MonicPolynomial(z)))
    else:
        _emit(args, io.multiset_document(RootMultiset(z)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rootspace", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("-o", "--out", help="write the result here instead of stdout")
        return sp

    sp = add("roots", cmd_roots, "roots of a polynomial file")
    sp.add_argument("input")
    sp.add_argument("--tol", type=float, help="residual tolerance")
    sp.add_argument("--max-iter", type=int, help="iteration cap")

    sp = add("metric", cmd_metric, "distance between two files")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--space", choices=["poly", "roots"], default="roots")

    sp = add("expand", cmd_expand, "polynomial with the given roots")
    sp.add_argument("input")

    sp = add("certify", cmd_certify, "check a perturbation bound")
    sp.add_argument("f")
    sp.add_argument("g")
    sp.add_argument("--bound", choices=["ostrowski", "rs"], default="ostrowski")
    sp.add_argument("--small-delta", type=float, default=RS_SMALL_DELTA,
                    help="largest coefficient change for which the rs bound is claimed")

    sp = add("track", cmd_track, "follow roots along the segment from p to q")
    sp.add_argument("p")
    sp.add_argument("q")
    sp.add_argument("--steps", type=int, default=16)

    sp = add("demo-discontinuity", cmd_demo_discontinuity, "lexicographic root order jumps")
    sp.add_argument("--k-max", type=int, default=10)

    sp = add("sample", cmd_sample, "random polynomial or multiset file")
    sp.add_argument("--kind", choices=["poly", "roots"], default="poly")
    sp.add_argument("--n", type=int, default=4)
    sp.add_argument("--radius", type=float, default=1.0)
    sp.add_argument("--seed", type=int, default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConvergenceError as exc:
        print(f"error: {exc} (max_residual={exc.report.max_residual:.3g})", file=sys.stderr)
        return EXIT_SOLVER
    except TrackingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
