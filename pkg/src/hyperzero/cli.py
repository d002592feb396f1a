"""Command-line front end: classify, roots, verify, sweep, identity.

Parameters written as fractions ("7/3") or integers are parsed exactly and
routed through the exact arithmetic path; decimals route to float mode.
Exit codes: 0 success, 1 usage or invalid parameter, 2 theorem boundary,
3 oracle mismatch.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from . import klein, oracle, transforms
from .core import (
    BoundaryParameterError,
    InvalidParameterError,
    NonConvergenceError,
    Params,
    Scalar,
    coefficients,
    evaluate,
    gegenbauer,
    jacobi,
    pochhammer,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_BOUNDARY = 2
EXIT_MISMATCH = 3

SEED_ENV = "HYPERZERO_SEED"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Let negative rationals like -3/2 and ranges like -5:8:14 pass as
        # option values instead of being mistaken for option names.
        self._negative_number_matcher = re.compile(
            r"^-(\d+(/\d+)?|\d*\.\d+([eE][+-]?\d+)?)(:\S*)?$"
        )

    def error(self, message):
        raise UsageError(message)


def parse_scalar(text: str) -> Scalar:
    """Exact Fraction for "p/q" and integer literals, float for decimals."""
    text = text.strip()
    if "/" in text:
        num, _, den = text.partition("/")
        try:
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational {text!r}: {exc}") from None
    try:
        return Fraction(int(text))
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"cannot parse scalar {text!r}") from None


def format_scalar(v: Scalar) -> str:
    if isinstance(v, Fraction):
        return str(v)
    return repr(v)


def format_complex(z: complex, digits: int = 10) -> str:
    head = f"{z.real:.{digits}g}"
    if z.imag == 0:
        return head
    sign = "+" if z.imag >= 0 else "-"
    return f"{head}{sign}{abs(z.imag):.{digits}g}i"


def _params_from(args) -> Params:
    if args.b is None or args.c is None:
        raise UsageError("this command needs -b and -c")
    return Params(args.n, parse_scalar(args.b), parse_scalar(args.c))


def _jsonify_scalar(v: Scalar):
    return str(v) if isinstance(v, Fraction) else v


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _rng() -> random.Random:
    seed = os.environ.get(SEED_ENV)
    return random.Random(int(seed)) if seed is not None else random.Random()


# ---------------------------------------------------------------------------
# classify


def _prediction_dict(pred: klein.CountPrediction, mode: str) -> dict:
    return {
        "n1": pred.n1,
        "n2": pred.n2,
        "n3": pred.n3,
        "nonreal_pairs": pred.nonreal_pairs,
        "provenance": pred.provenance,
        "mode": mode,
    }


SWEEP_COLUMNS = "n,b,c,mode,provenance,n1,n2,n3,nonreal_pairs,status"


def _sweep_row(n, b, c, mode, pred, status) -> str:
    if pred is None:
        return f"{n},{format_scalar(b)},{format_scalar(c)},{mode},,,,,,{status}"
    return (
        f"{n},{format_scalar(b)},{format_scalar(c)},{mode},{pred.provenance},"
        f"{pred.n1},{pred.n2},{pred.n3},{pred.nonreal_pairs},{status}"
    )


def cmd_classify(args) -> int:
    p = _params_from(args)
    pred = klein.classify_region(p)
    if args.format == "json":
        print(_dumps(_prediction_dict(pred, p.mode)))
    elif args.format == "csv":
        print(SWEEP_COLUMNS)
        print(_sweep_row(p.n, p.b, p.c, p.mode, pred, "ok"))
    else:
        print(f"n1 (1,inf)     {pred.n1}")
        print(f"n2 (0,1)       {pred.n2}")
        print(f"n3 (-inf,0)    {pred.n3}")
        print(f"nonreal pairs  {pred.nonreal_pairs}")
        print(f"provenance     {pred.provenance}")
        print(f"mode           {p.mode}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# roots


def cmd_roots(args) -> int:
    p = _params_from(args)
    q = coefficients(p)
    rs = oracle.all_roots(q, tol=args.tol)
    if args.format == "json":
        payload = {
            "mode": p.mode,
            "effective_degree": q.effective_degree,
            "iterations": rs.iterations,
            "roots": [
                {
                    "re": r.value.real,
                    "im": r.value.imag,
                    "multiplicity": r.multiplicity,
                    "residual": r.residual,
                }
                for r in rs.roots
            ],
        }
        print(_dumps(payload))
    else:
        for r in rs.roots:
            suffix = f"  (multiplicity {r.multiplicity})" if r.multiplicity > 1 else ""
            print(f"{format_complex(r.value)}{suffix}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify


def _report_dict(rep: oracle.VerificationReport) -> dict:
    p = rep.params
    out = {
        "n": p.n,
        "b": _jsonify_scalar(p.b),
        "c": _jsonify_scalar(p.c),
        "mode": rep.mode,
        "confidence": rep.confidence,
        "status": rep.status,
        "prediction": _prediction_dict(rep.prediction, rep.mode) if rep.prediction else None,
        "checks": [
            {"name": c.name, "predicted": c.predicted, "observed": c.observed, "ok": c.ok}
            for c in rep.checks
        ],
        "notes": list(rep.notes),
    }
    if rep.geometry_prediction is not None:
        g = rep.geometry_prediction
        out["geometry"] = {
            "on_circle": g.on_circle,
            "real_gt1": g.real_gt1,
            "real_in01": g.real_in01,
            "real_neg": g.real_neg,
            "quadrant_pairs": g.quadrant_pairs,
            "nonreal_pairs": g.nonreal_pairs,
            "provenance": g.provenance,
        }
    return out


def _print_report_text(rep: oracle.VerificationReport) -> None:
    p = rep.params
    print(
        f"verify n={p.n} b={format_scalar(p.b)} c={format_scalar(p.c)} "
        f"[{rep.mode}, {rep.confidence}] -> {rep.status.upper()}"
    )
    if rep.prediction is not None:
        pr = rep.prediction
        print(
            f"  predicted counts: ({pr.n1},{pr.n2},{pr.n3}) "
            f"pairs={pr.nonreal_pairs} via {pr.provenance}"
        )
    if rep.geometry_prediction is not None:
        print(f"  geometry via {rep.geometry_prediction.provenance}")
    for c in rep.checks:
        mark = "ok " if c.ok else "FAIL"
        print(f"  [{mark}] {c.name}: predicted {c.predicted}, observed {c.observed}")
    for note in rep.notes:
        print(f"  note: {note}")


def _verify_exit(status: str) -> int:
    if status == "fail":
        return EXIT_MISMATCH
    if status == "boundary":
        return EXIT_BOUNDARY
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.b_range or args.c_range:
        return _verify_sweep(args)
    p = _params_from(args)
    rep = oracle.verify(p, tol=args.tol)
    if args.format == "json":
        print(_dumps(_report_dict(rep)))
    else:
        _print_report_text(rep)
    return _verify_exit(rep.status)


def _verify_sweep(args) -> int:
    worst = EXIT_OK
    for b, c in _grid(args):
        try:
            p = Params(args.n, b, c)
        except InvalidParameterError:
            line = {"b": _jsonify_scalar(b), "c": _jsonify_scalar(c), "status": "undefined"}
            print(_dumps(line) if args.format == "json" else
                  f"verify n={args.n} b={format_scalar(b)} c={format_scalar(c)} -> UNDEFINED")
            continue
        rep = oracle.verify(p, tol=args.tol)
        if args.format == "json":
            print(_dumps(_report_dict(rep)))
        else:
            _print_report_text(rep)
        if rep.status == "fail":
            worst = EXIT_MISMATCH
    return worst


# ---------------------------------------------------------------------------
# sweep


@dataclass(frozen=True)
class SweepSpec:
    """A (b, c) grid: degree, two (min, max, steps) ranges, optional margin.

    Ranges step exactly when their endpoints are rational.  The margin is a
    rational offset added to every grid point to land strictly inside
    theorem windows; when supplied it must be positive.
    """

    n: int
    b_range: Tuple[Scalar, Scalar, int]
    c_range: Tuple[Scalar, Scalar, int]
    margin: Optional[Scalar] = None

    def __post_init__(self):
        for lo, hi, steps in (self.b_range, self.c_range):
            if steps < 1:
                raise UsageError("steps must be >= 1")
        if self.margin is not None and not self.margin > 0:
            raise UsageError("margin must be > 0")

    @staticmethod
    def _points(rng: Tuple[Scalar, Scalar, int], margin: Scalar) -> List[Scalar]:
        lo, hi, steps = rng
        if lo > hi:
            return []
        if steps == 1:
            # a single-step range is a pinned value; the boundary-avoidance
            # offset only makes sense for generated grids
            return [lo]
        span = hi - lo
        return [lo + span * k / (steps - 1) + margin for k in range(steps)]

    def grid(self) -> List[Tuple[Scalar, Scalar]]:
        """Row-ordered grid, c outer and b inner, deterministic."""
        margin = self.margin if self.margin is not None else Fraction(0)
        bs = self._points(self.b_range, margin)
        cs = self._points(self.c_range, margin)
        return [(b, c) for c in cs for b in bs]


def _parse_range(text: str) -> Tuple[Scalar, Scalar, int]:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be MIN:MAX:STEPS, got {text!r}")
    lo, hi = parse_scalar(parts[0]), parse_scalar(parts[1])
    try:
        steps = int(parts[2])
    except ValueError:
        raise UsageError(f"steps must be an integer in {text!r}") from None
    return lo, hi, steps


def _sweep_spec(args) -> SweepSpec:
    if args.b_range:
        b_range = _parse_range(args.b_range)
    elif args.b is not None:
        v = parse_scalar(args.b)
        b_range = (v, v, 1)
    else:
        raise UsageError("need -b or --b-range")
    if args.c_range:
        c_range = _parse_range(args.c_range)
    elif args.c is not None:
        v = parse_scalar(args.c)
        c_range = (v, v, 1)
    else:
        raise UsageError("need -c or --c-range")
    margin = parse_scalar(args.margin) if args.margin else None
    return SweepSpec(args.n, b_range, c_range, margin)


def _grid(args) -> List[Tuple[Scalar, Scalar]]:
    return _sweep_spec(args).grid()


def cmd_sweep(args) -> int:
    lines = [SWEEP_COLUMNS]
    for b, c in _grid(args):
        mode = "exact" if isinstance(b, Fraction) and isinstance(c, Fraction) else "float"
        try:
            p = Params(args.n, b, c)
        except InvalidParameterError:
            lines.append(_sweep_row(args.n, b, c, mode, None, "undefined"))
            continue
        try:
            pred = klein.classify_region(p)
        except BoundaryParameterError:
            lines.append(_sweep_row(args.n, b, c, p.mode, None, "boundary"))
            continue
        lines.append(_sweep_row(args.n, b, c, p.mode, pred, "ok"))
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------
# identity


def _random_rational(rng: random.Random, lo: float, hi: float, den: int = 8) -> Fraction:
    return Fraction(rng.randint(int(lo * den), int(hi * den)), den)


def _random_params(rng: random.Random, avoid_invert: bool = False,
                   avoid_euler: bool = False) -> Params:
    while True:
        n = rng.randint(1, 8)
        b = _random_rational(rng, -8, 8)
        c = _random_rational(rng, -8, 8)
        try:
            p = Params(n, b, c)
        except InvalidParameterError:
            continue
        try:
            if avoid_euler:
                transforms.euler_reflect(p)
            if avoid_invert:
                transforms.invert(p)
        except InvalidParameterError:
            continue
        return p


def _random_z(rng: random.Random, avoid_one: bool = False, annulus: bool = False) -> complex:
    while True:
        if rng.random() < 0.5:
            z = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        else:
            z = complex(rng.uniform(-3, 3), 0.0)
        if annulus and not (0.1 <= abs(z) <= 10):
            continue
        if abs(z) < 0.05:
            continue
        if avoid_one and abs(z - 1) < 0.05:
            continue
        return z


def _deviation(lhs: complex, rhs: complex) -> float:
    scale = max(abs(lhs), abs(rhs))
    if scale <= 1e-12:
        return 0.0
    return abs(lhs - rhs) / scale


def _identity_sample(which: str, rng: random.Random, fixed: Optional[Params],
                     n_fixed: Optional[int]) -> float:
    if which == "euler":
        p = fixed or _random_params(rng, avoid_euler=True)
        target, scale = transforms.euler_reflect(p)
        z = _random_z(rng)
        lhs = evaluate(coefficients(p), 1 - z)
        rhs = scale * evaluate(coefficients(target), z)
        return _deviation(lhs, rhs)
    if which == "invert":
        p = fixed or _random_params(rng, avoid_invert=True)
        target, pref = transforms.invert(p)
        z = _random_z(rng, annulus=True)
        lhs = evaluate(coefficients(p), z)
        rhs = pref.apply(z) * evaluate(coefficients(target), 1 / z)
        return _deviation(lhs, rhs)
    if which == "pfaff":
        p = fixed or _random_params(rng)
        target = transforms.pfaff(p)
        z = _random_z(rng, avoid_one=True)
        lhs = evaluate(coefficients(p), z)
        rhs = (1 - z) ** p.n * evaluate(coefficients(target), z / (z - 1))
        return _deviation(lhs, rhs)
    if which == "jacobi":
        # Covers both the classical argument form at 1-2z and the inverse
        # argument form at 1-2/z; -b and -c play alpha and beta.
        if fixed is not None:
            n, alpha, beta = fixed.n, fixed.b, fixed.c
        else:
            n = n_fixed or rng.randint(1, 8)
            while True:
                alpha = _random_rational(rng, -6, 6)
                beta = _random_rational(rng, -6, 6)
                try:
                    Params(n, alpha + beta + 1 + n, alpha + 1)
                    break
                except InvalidParameterError:
                    continue
        p = Params(n, alpha + beta + 1 + n, alpha + 1)
        z = _random_z(rng)
        lhs = evaluate(coefficients(p), z)
        rhs = math.factorial(n) / pochhammer(alpha + 1, n) * jacobi(n, alpha, beta, 1 - 2 * z)
        dev = _deviation(lhs, rhs)
        w = _random_z(rng)
        lhs = evaluate(coefficients(p), w)
        rhs = (
            math.factorial(n) * w ** n / pochhammer(p.c, n)
            * jacobi(n, -n - p.b, p.b - p.c - n, 1 - 2 / w)
        )
        return max(dev, _deviation(lhs, rhs))
    if which == "gegenbauer":
        if fixed is not None:
            n, lam = fixed.n, fixed.b
        else:
            n = n_fixed or rng.randint(1, 8)
            while True:
                lam = _random_rational(rng, -5, 5)
                if all(2 * lam + i != 0 for i in range(n)) and lam + Fraction(1, 2) != 0:
                    try:
                        Params(n, n + 2 * lam, lam + Fraction(1, 2))
                        break
                    except InvalidParameterError:
                        continue
        half = Fraction(1, 2) if isinstance(lam, Fraction) else 0.5
        z = _random_z(rng)
        lhs = evaluate(coefficients(Params(n, n + 2 * lam, lam + half)), z)
        rhs = math.factorial(n) / pochhammer(2 * lam, n) * gegenbauer(n, lam, 1 - 2 * z)
        return _deviation(lhs, rhs)
    raise UsageError(f"unknown identity {which!r}")


def cmd_identity(args) -> int:
    rng = _rng()
    fixed = None
    if args.b is not None and args.c is not None:
        fixed = Params(args.n, parse_scalar(args.b), parse_scalar(args.c))
    failures = 0
    worst = 0.0
    for _ in range(args.samples):
        dev = _identity_sample(args.which, rng, fixed, args.n)
        worst = max(worst, dev)
        if dev > args.tol:
            failures += 1
    ok = failures == 0
    if args.format == "json":
        print(_dumps({
            "identity": args.which,
            "samples": args.samples,
            "failures": failures,
            "max_deviation": worst,
            "tol": args.tol,
            "pass": ok,
        }))
    else:
        verdict = "PASS" if ok else "FAIL"
        print(
            f"{args.which}: {args.samples - failures}/{args.samples} samples within "
            f"tol={args.tol:g} (max deviation {worst:.3g}): {verdict}"
        )
    return EXIT_OK if ok else EXIT_MISMATCH


# ---------------------------------------------------------------------------
# driver


def build_parser() -> _Parser:
    parser = _Parser(prog="hyperzero", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp, need_n=True):
        if need_n:
            sp.add_argument("-n", type=int, required=True, help="polynomial degree")
        sp.add_argument("-b", type=str, default=None, help="b parameter (rational p/q or float)")
        sp.add_argument("-c", type=str, default=None, help="c parameter (rational p/q or float)")
        sp.add_argument("--format", choices=("json", "csv", "text"), default="text")
        sp.add_argument("--tol", type=float, default=1e-9)
        sp.add_argument("--out", type=str, default=None)
        sp.add_argument("--samples", type=int, default=100)

    sp = sub.add_parser("classify", help="predict per-interval zero counts")
    add_common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("roots", help="compute all complex roots")
    add_common(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("verify", help="check predictions against the oracle")
    add_common(sp)
    sp.add_argument("--b-range", type=str, default=None, help="MIN:MAX:STEPS")
    sp.add_argument("--c-range", type=str, default=None, help="MIN:MAX:STEPS")
    sp.add_argument("--margin", type=str, default=None, help="offset added to every grid point")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="CSV region map over a (b, c) grid")
    add_common(sp)
    sp.add_argument("--b-range", type=str, default=None, help="MIN:MAX:STEPS")
    sp.add_argument("--c-range", type=str, default=None, help="MIN:MAX:STEPS")
    sp.add_argument("--margin", type=str, default=None, help="offset added to every grid point")
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("identity", help="random-sample functional identity checks")
    sp.add_argument("which", choices=("pfaff", "euler", "invert", "jacobi", "gegenbauer"))
    sp.add_argument("-n", type=int, default=None)
    sp.add_argument("-b", type=str, default=None)
    sp.add_argument("-c", type=str, default=None)
    sp.add_argument("--format", choices=("json", "csv", "text"), default="text")
    sp.add_argument("--tol", type=float, default=1e-9)
    sp.add_argument("--samples", type=int, default=100)
    sp.set_defaults(func=cmd_identity)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvalidParameterError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundaryParameterError as exc:
        print(f"boundary parameters: {exc}", file=sys.stderr)
        return EXIT_BOUNDARY
    except NonConvergenceError as exc:
        print(f"solver did not converge: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def entrypoint() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entrypoint()
