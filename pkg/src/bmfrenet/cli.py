"""Command-line interface: ``bmfrenet {frame,curve,classify,structure,verify}``.

Exit codes: 0 success, 1 usage error, 2 domain error (degenerate or
unsupported slant constants), 3 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys

import numpy as np

from . import matrix_repr as mr
from .errors import GeometryError
from .lie_model import LieModel
from .null_frenet import (
    SlantParams,
    classify_null_curve,
    frenet_residuals,
    general_frame,
    unique_frame_f1,
)
from .structure import assoc_metric, f_table_from_nabla, lee_forms
from .tensor import PREDICATE_TOL
from .tilde import (
    classify_helix,
    legendre_tilde_geodesic_residual,
    tilde_character,
    tilde_frenet_order3,
    tilde_frenet_residuals,
)
from .verify import run_checks

TOL_ENV = "BMFRENET_TOL"
CSV_HEADER = ["t", "m11", "m12", "m13", "m21", "m22", "m23", "m31", "m32", "m33", "det_residual"]

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


def fmt_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot emit non-finite number {x!r}")
    return format(x + 0.0, ".17g")


def to_json(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 17 significant digits.

    Lists of scalars stay on one line so vectors and matrix rows read
    naturally.
    """
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    if isinstance(obj, (bool, np.bool_)):
        return "true" if obj else "false"
    if obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt_float(obj)
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, (list, tuple)):
        items = [to_json(v, indent, _level + 1) for v in obj]
        if all(not isinstance(v, (list, tuple, dict, np.ndarray)) for v in obj):
            return "[" + ", ".join(items) + "]"
        return "[\n" + ",\n".join(pad + i for i in items) + "\n" + end + "]"
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _finite(text: str) -> float:
    x = float(text)
    if not math.isfinite(x):
        raise argparse.ArgumentTypeError("must be finite")
    return x


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=_finite, help="slant constant eta(C')")
    common.add_argument("--b", type=_finite, help="slant constant g(C', phi C')")
    common.add_argument("--alpha", type=_finite, default=1.0, help="structure constant alpha = theta(xi)/2")
    common.add_argument("--beta", type=_finite, help="screen parameter of a general frame")
    common.add_argument("--t-min", type=_finite, default=0.0)
    common.add_argument("--t-max", type=_finite, default=1.0)
    common.add_argument("--steps", type=_positive_int, default=11)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--tol", type=_finite, help=f"tolerance (default from ${TOL_ENV})")

    parser = _Parser(prog="bmfrenet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_ in (
        ("frame", "distinguished Frenet frame and curvatures of a null curve"),
        ("curve", "sample the adjoint matrix Ad(C(t)) along a curve"),
        ("classify", "g~ character, Frenet apparatus and helix class"),
        ("structure", "connection, F tensor, Lee forms and g~ of the Lie model"),
        ("verify", "run the seeded verification suite"),
    ):
        sub.add_parser(name, parents=[common], help=help_)
    return parser


def _tolerance(args) -> float | None:
    if args.tol is not None:
        tol = args.tol
    elif os.environ.get(TOL_ENV):
        try:
            tol = float(os.environ[TOL_ENV])
        except ValueError:
            raise UsageError(f"${TOL_ENV} is not a number: {os.environ[TOL_ENV]!r}") from None
    else:
        return None
    if not tol > 0:
        raise UsageError("tolerance must be positive")
    return tol


def _slant(args) -> SlantParams:
    if args.a is None or args.b is None:
        raise UsageError(f"{args.command} requires --a and --b")
    return SlantParams(args.a, args.b)


def _t_grid(args) -> np.ndarray:
    if args.t_min > args.t_max:
        raise UsageError("--t-min must not exceed --t-max")
    return np.linspace(args.t_min, args.t_max, args.steps)


def _require_json(args):
    if args.format != "json":
        raise UsageError(f"{args.command} only supports --format json")


def _params(args, p: SlantParams | None = None) -> dict:
    out = {}
    if p is not None:
        out.update(a=p.a, b=p.b)
    out.update(alpha=args.alpha, theta_xi=2.0 * args.alpha)
    return out


def cmd_frame(args) -> dict:
    _require_json(args)
    p = _slant(args)
    model = LieModel(args.alpha)
    frame = unique_frame_f1(p, model)
    doc = {
        "params": _params(args, p),
        "tangent": frame.tangent,
        "W1": frame.W,
        "N1": frame.N,
        "h": frame.h,
        "k1": frame.k1,
        "k2": frame.k2,
        "flags": classify_null_curve(p, model).as_dict(),
        "frenet_residuals": frenet_residuals(frame, model, _t_grid(args)),
    }
    if args.beta is not None:
        fam = general_frame(p, model, args.beta)
        doc["family"] = {"beta": args.beta, "W": fam.W, "N": fam.N, "h": fam.h, "k1": fam.k1, "k2": fam.k2}
    return doc


def curve_rows(args) -> list[tuple[float, np.ndarray, dict]]:
    p = _slant(args)
    rows = []
    for t in _t_grid(args):
        M = mr.adjoint_curve(p, args.alpha, float(t))
        rows.append((float(t), M, mr.group_residuals(M)))
    return rows


def cmd_curve(args) -> str:
    rows = curve_rows(args)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for t, M, res in rows:
            w.writerow([fmt_float(t), *(fmt_float(x) for x in M.ravel()), fmt_float(res["det"])])
        return buf.getvalue()
    doc = {
        "params": _params(args, _slant(args)),
        "rows": [
            {"t": t, "matrix": M, "det_residual": res["det"], "residuals": res}
            for t, M, res in rows
        ],
    }
    return to_json(doc) + "\n"


def cmd_classify(args) -> dict:
    _require_json(args)
    p = _slant(args)
    model = LieModel(args.alpha)
    tol = _tolerance(args) or PREDICATE_TOL
    character = tilde_character(p, model.structure)
    ts = _t_grid(args)
    doc = {"params": _params(args, p), "tilde_character": character.value}
    if p.a == 0:
        doc.update(order=1, k_tilde=0.0, tau_tilde=0.0)
        doc["geodesic_residual"] = legendre_tilde_geodesic_residual(p, model)
    else:
        app = tilde_frenet_order3(p, model)
        doc.update(order=app.order, k_tilde=app.k_tilde, tau_tilde=app.tau_tilde)
        doc["signs"] = app.signs()
        doc["frame"] = {f"E{i + 1}": v for i, v in enumerate(app.vectors())}
        doc["frenet_residuals"] = tilde_frenet_residuals(app, model)
    # the apparatus has constant coefficients, so each t sample sees the same k~, tau~
    n = len(ts)
    doc["helix_class"] = classify_helix([doc["k_tilde"]] * n, [doc["tau_tilde"]] * n, tol).value
    return doc


def cmd_structure(args) -> dict:
    _require_json(args)
    model = LieModel(args.alpha)
    S = model.structure
    F = f_table_from_nabla(model.connection, S)
    lf = lee_forms(F, S)
    return {
        "params": _params(args),
        "connection": model.connection,
        "f_nonzero": F.nonzero(),
        "f_table": F.f,
        "lee_forms": {"theta": lf.theta, "theta_star": lf.theta_star, "omega": lf.omega},
        "theta_xi": lf.theta_xi(S),
        "g_tilde": assoc_metric(S).m,
        "f0": F.is_zero(),
    }


def cmd_verify(args) -> tuple[dict, bool]:
    _require_json(args)
    tol = _tolerance(args)
    results = run_checks(seed=args.seed, tol=tol)
    ok = all(r.passed for r in results)
    doc = {
        "seed": args.seed,
        "tol": tol,
        "checks": [
            {"name": r.name, "max_residual": r.max_residual, "threshold": r.threshold, "passed": r.passed}
            for r in results
        ],
        "passed": ok,
    }
    return doc, ok


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "curve":
            sys.stdout.write(cmd_curve(args))
            return EXIT_OK
        if args.command == "verify":
            doc, ok = cmd_verify(args)
            sys.stdout.write(to_json(doc) + "\n")
            return EXIT_OK if ok else EXIT_VERIFY
        handler = {"frame": cmd_frame, "classify": cmd_classify, "structure": cmd_structure}[args.command]
        sys.stdout.write(to_json(handler(args)) + "\n")
        return EXIT_OK
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"bmfrenet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"bmfrenet: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
