"""
Command line interface.

::

    sig3 verify --kappa 0.7071067811865476 [--tol 1e-8] [--json]
    sig3 periods --grid 0.1:0.9:0.1 [--format csv|json] [--jobs N]
    sig3 eval dn3 --kappa 0.6 --z "2/3*Omega"
    sig3 sample W --kappa 0.5 --from 0 --to "2*Omega" --n 101 --out w.csv

Points accept plain complex numbers (``0.3+0.2i``) or arithmetic on the
names ``omega``, ``omega_prime``, ``Omega``, ``Omega_prime`` and ``pi``.
Exit codes: 0 success, 1 verification failure, 2 usage error. The
environment variable ``SIG3_TOL`` supplies the ``verify`` tolerance when
``--tol`` is absent.
"""
from __future__ import annotations

import argparse
import ast
import csv
import json
import math
import operator
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor

from . import system as s3
from .errors import NearPole
from .hyper import Modulus
from .verify import run_verification
from .wp import wp

__all__ = ["main", "cmd_verify", "cmd_periods", "cmd_eval", "cmd_sample",
           "PERIOD_COLUMNS", "SAMPLE_COLUMNS", "fmt", "parse_point", "parse_grid"]

PERIOD_COLUMNS = ["kappa", "omega", "omega_prime_im", "Omega", "Omega_prime_im",
                  "ratio_small_im", "ratio_big_im"]
SAMPLE_COLUMNS = ["index", "z_re", "z_im", "value_re", "value_im", "pole"]
FUNCTIONS = ("dn3", "W", "y6sq", "p", "P")
POLE_TOKEN = "pole"


def fmt(x: float) -> str:
    """15 significant digits, lowercase scientific notation."""
    return f"{x:.14e}"


# -- argument parsing -------------------------------------------------------------

def _kappa(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 < value < 1.0:
        raise argparse.ArgumentTypeError(f"kappa must lie in (0, 1), got {text}")
    return value


def _positive(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return value


def parse_grid(text: str) -> list[float]:
    """``start:stop:step`` (stop included) or a single value."""
    parts = text.split(":")
    try:
        nums = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed grid {text!r}")
    if len(nums) == 1:
        values = nums
    elif len(nums) == 3:
        start, stop, step = nums
        if not step > 0 or stop < start:
            raise argparse.ArgumentTypeError(f"malformed grid {text!r}")
        count = (stop - start) / step
        n = int(round(count))
        if abs(count - n) > 1e-9 * max(1.0, count):
            raise argparse.ArgumentTypeError(f"step does not divide the range in {text!r}")
        values = [float(f"{start + i * step:.15g}") for i in range(n + 1)]
    else:
        raise argparse.ArgumentTypeError(f"malformed grid {text!r}")
    for v in values:
        if not 0.0 < v < 1.0:
            raise argparse.ArgumentTypeError(f"grid value {v} outside (0, 1)")
    return values


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub,
           ast.Mult: operator.mul, ast.Div: operator.truediv}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}


def parse_point(text: str, names: dict | None = None) -> complex:
    """Evaluate a point such as ``0.3-0.2i`` or ``2/3*Omega + 0.1i``."""
    names = dict(names or {})
    names.setdefault("pi", math.pi)
    names.setdefault("i", 1j)
    names.setdefault("j", 1j)
    src = re.sub(r"(\d|\.)\s*[ij]\b", r"\1j", text.strip())
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError:
        raise ValueError(f"cannot parse point {text!r}")

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float, complex)):
            return node.value
        if isinstance(node, ast.Name) and node.id in names:
            return names[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
            return _UNARY[type(node.op)](ev(node.operand))
        raise ValueError(f"unsupported element in point {text!r}")

    value = complex(ev(tree))
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise ValueError(f"point {text!r} is not finite")
    return value


def _period_names(sys_):
    return {"omega": sys_.omega, "omega_prime": sys_.omega_prime,
            "Omega": sys_.Omega, "Omega_prime": sys_.Omega_prime}


# -- commands -------------------------------------------------------------------------

def cmd_verify(kappa: float, tol: float | None = None):
    """Run the verification suite; returns the report."""
    return run_verification(kappa, tol)


def period_row(kappa: float) -> dict:
    m = Modulus.from_kappa(kappa)
    omega, omega_p = s3.periods_small(m)
    Omega, Omega_p = s3.periods_big(m)
    small, big = s3.lattice_ratios(m)
    return {"kappa": m.kappa, "omega": omega, "omega_prime_im": omega_p.imag,
            "Omega": Omega, "Omega_prime_im": Omega_p.imag,
            "ratio_small_im": small.imag, "ratio_big_im": big.imag}


def cmd_periods(grid: list[float], jobs: int = 1) -> list[dict]:
    """Period table rows, ordered as ``grid``."""
    if jobs > 1 and len(grid) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(period_row, grid))
    return [period_row(k) for k in grid]


def _evaluator(which, sys_):
    if which == "dn3":
        return lambda z: s3.dn3(sys_, z)
    if which == "W":
        return lambda z: s3.big_W(sys_, z)
    if which == "y6sq":
        return lambda z: s3.y6_squared(sys_, z)
    ctx = sys_.small if which == "p" else sys_.big
    return lambda z: wp(ctx, z)


def cmd_eval(which: str, kappa: float, z: complex):
    """Value of ``which`` at ``z``, or ``None`` at a pole."""
    sys_ = s3.Sig3System.from_kappa(kappa)
    try:
        return complex(_evaluator(which, sys_)(z))
    except NearPole:
        return None


def _pole_set(which, sys_):
    """Lattice context and pole representatives of ``which``."""
    if which == "p":
        return sys_.small, [0j]
    if which == "P":
        return sys_.big, [0j]
    if which == "dn3":
        return sys_.small, [2.0 / 3.0 * sys_.omega_prime, -2.0 / 3.0 * sys_.omega_prime]
    return sys_.big, [2.0 / 3.0 * sys_.Omega + 0j, -2.0 / 3.0 * sys_.Omega + 0j]


def cmd_sample(which: str, kappa: float, z0: complex, z1: complex, n: int) -> list[dict]:
    """``n`` equally spaced samples on the segment ``[z0, z1]``.

    A sample is flagged as a pole when a pole lies within half a step of it
    (or when evaluation itself reports a pole); its value is then nan if it
    could not be computed.
    """
    if n < 2:
        raise ValueError("need at least two samples")
    sys_ = s3.Sig3System.from_kappa(kappa)
    f = _evaluator(which, sys_)
    ctx, poles = _pole_set(which, sys_)
    step = (z1 - z0) / (n - 1)
    radius = 0.5 * abs(step)
    rows = []
    for k in range(n):
        z = z0 + k * step
        flag = any(abs(ctx.reduce(z - q)) < radius for q in poles)
        try:
            value = complex(f(z))
        except NearPole:
            value, flag = complex(math.nan, math.nan), True
        rows.append({"index": k, "z_re": z.real, "z_im": z.imag,
                     "value_re": value.real, "value_im": value.imag, "pole": int(flag)})
    return rows


# -- output -----------------------------------------------------------------------------

def _write_csv(rows, columns, stream):
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([row[c] if isinstance(row[c], int) else fmt(row[c]) for c in columns])


def _build_parser():
    parser = argparse.ArgumentParser(prog="sig3", description="Signature-three elliptic functions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the verification suite at one modulus")
    p.add_argument("--kappa", type=_kappa, required=True)
    p.add_argument("--tol", type=_positive, default=None)
    p.add_argument("--json", action="store_true", help="print the report as JSON")

    p = sub.add_parser("periods", help="tabulate half-periods over a modulus grid")
    p.add_argument("--grid", type=parse_grid, required=True, help="start:stop:step or a single value")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("eval", help="evaluate a function at one point")
    p.add_argument("fn", choices=FUNCTIONS)
    p.add_argument("--kappa", type=_kappa, required=True)
    p.add_argument("--z", required=True)

    p = sub.add_parser("sample", help="sample a function along a segment")
    p.add_argument("fn", choices=FUNCTIONS)
    p.add_argument("--kappa", type=_kappa, required=True)
    p.add_argument("--from", dest="z0", required=True)
    p.add_argument("--to", dest="z1", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "verify":
        tol = args.tol
        if tol is None and os.environ.get("SIG3_TOL"):
            try:
                tol = _positive(os.environ["SIG3_TOL"])
            except argparse.ArgumentTypeError as exc:
                parser.print_usage(sys.stderr)
                print(f"sig3: error: SIG3_TOL: {exc}", file=sys.stderr)
                return 2
        report = cmd_verify(args.kappa, tol)
        print(json.dumps(report.to_dict(), indent=2) if args.json else report.format())
        return 0 if report.overall else 1

    if args.command == "periods":
        rows = cmd_periods(args.grid, max(1, args.jobs))
        if args.format == "json":
            print(json.dumps({"kappa": args.grid, "rows": rows}, indent=2))
        else:
            _write_csv(rows, PERIOD_COLUMNS, sys.stdout)
        return 0

    sys_ = s3.Sig3System.from_kappa(args.kappa)
    names = _period_names(sys_)
    try:
        if args.command == "eval":
            z = parse_point(args.z, names)
        else:
            z0, z1 = parse_point(args.z0, names), parse_point(args.z1, names)
    except (ValueError, ZeroDivisionError) as exc:
        parser.print_usage(sys.stderr)
        print(f"sig3: error: {exc}", file=sys.stderr)
        return 2

    if args.command == "eval":
        value = cmd_eval(args.fn, args.kappa, z)
        print(POLE_TOKEN if value is None else f"{fmt(value.real)} {fmt(value.imag)}")
        return 0

    if args.n < 2:
        parser.print_usage(sys.stderr)
        print("sig3: error: --n must be at least 2", file=sys.stderr)
        return 2
    rows = cmd_sample(args.fn, args.kappa, z0, z1, args.n)
    try:
        with open(args.out, "w", newline="") as fh:
            if args.format == "json":
                clean = [{k: (None if isinstance(v, float) and math.isnan(v) else v)
                          for k, v in row.items()} for row in rows]
                json.dump({"kappa": args.kappa, "function": args.fn, "rows": clean}, fh, indent=2)
            else:
                _write_csv(rows, SAMPLE_COLUMNS, fh)
    except OSError as exc:
        print(f"sig3: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
