"""Command-line interface.

Usage:
    bellsym check state.json [--grid 32] [--json]
    bellsym derive phi+ [--out phi_plus.json]
    bellsym concurrence state.json
    bellsym atomic state.json --mode parallel [--grid 32]
    bellsym chsh state.json [--angles 0 45 22.5 67.5] [--radians]
    bellsym sweep --c middle --eps-max 0.1 --steps 11 --out sweep.csv

Matrix files are JSON documents ``{"matrix": [[[re, im], ...], ...]}`` (4x4).
Exit status: 0 ok, 2 parse error, 3 validation error, 4 infeasible
parameters, 5 unknown Bell state or mode.
"""
import argparse
import json
import math
import sys
from math import pi

import numpy as np

from . import __version__
from .constraints import DEFAULT_GRID, full_report
from .derivation import STANDARD_CHSH_ANGLES, AtomicMode, BellKind, atomic_residual, chsh_score, solve_atomic
from .entanglement import CChoice, concurrence, fitted_slope, linearity_scan
from .errors import BellSymError, InfeasibleEpsilon, ParseError, UnknownKind
from .states import validate_density


def _num(x):
    """Round-trip-safe rendering (17 significant digits)."""
    return format(float(x), ".17g")


def _short(x):
    return format(float(x), ".6g")


def _clean(x):
    # drops round-off noise from values that are exact in closed form
    return round(float(x), 12) + 0.0


def _json(obj, indent=0):
    """JSON text with every float written to 17 significant digits."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in obj):
            return "[" + ", ".join(_json(v) for v in obj) + "]"
        return "[\n" + ",\n".join(pad + _json(v, indent + 1) for v in obj) + "\n" + end + "]"
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    return _num(obj)


def read_matrix_file(path):
    """Parse a matrix file into a 4x4 complex array; raises ParseError."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise ParseError(f'{path}: expected an object with a "matrix" field')
    rows = doc["matrix"]
    if not isinstance(rows, list) or len(rows) != 4:
        raise ParseError(f"{path}: matrix must have 4 rows")
    out = np.empty((4, 4), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 4:
            raise ParseError(f"{path}: row {i} must have 4 entries")
        for j, entry in enumerate(row):
            if (not isinstance(entry, list) or len(entry) != 2
                    or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)
                    or not all(math.isfinite(x) for x in entry)):
                raise ParseError(f"{path}: entry ({i}, {j}) must be a pair of finite numbers [re, im]")
            out[i, j] = complex(entry[0], entry[1])
    return out


def write_matrix_file(path, m):
    m = np.asarray(m)
    doc = {"matrix": [[[float(z.real), float(z.imag)] for z in row] for row in m]}
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(_json(doc) + "\n")


def _format_matrix(m):
    def entry(z):
        re, im = _clean(z.real), _clean(z.imag)
        return _short(re) if im == 0 else f"{_short(re)}{im:+.6g}j"

    cells = [[entry(z) for z in row] for row in np.asarray(m)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  " + "  ".join(c.rjust(width) for c in row) for row in cells)


def _load_state(path):
    return validate_density(read_matrix_file(path))


def cmd_check(args, out):
    report = full_report(_load_state(args.file), grid_size=args.grid, atomic_grid=args.grid)
    document = {
        "input": args.file,
        "grid_size": args.grid,
        "tool_version": __version__,
        "report": report.to_dict(),
    }
    if args.json:
        out.write(_json(document) + "\n")
        return document
    out.write(f"input: {args.file}  grid: {args.grid}  version: {__version__}\n")
    for name, value in report.to_dict().items():
        if isinstance(value, dict):
            for mode, v in value.items():
                out.write(f"  {name}[{mode}]".ljust(36) + _short(v) + "\n")
        else:
            out.write(f"  {name}".ljust(36) + _short(value) + "\n")
    return document


def cmd_derive(args, out):
    kind = BellKind.from_name(args.kind)
    sol = solve_atomic(kind)
    out.write(f"{kind.label}: d={_short(_clean(sol.d))} c={_short(_clean(sol.c))} "
              f"(family={kind.family.value}, mode={kind.mode.value})\n")
    out.write(_format_matrix(sol.rho.m) + "\n")
    if args.out:
        write_matrix_file(args.out, sol.rho.m)
        out.write(f"wrote {args.out}\n")
    return sol


def cmd_concurrence(args, out):
    value = concurrence(_load_state(args.file))
    out.write(f"concurrence = {_short(value)}\n")
    return value


def cmd_atomic(args, out):
    mode = AtomicMode.from_name(args.mode)
    value = atomic_residual(_load_state(args.file), mode, args.grid)
    out.write(f"atomic_residual[{mode.value}] = {_short(value)}\n")
    return value


def cmd_chsh(args, out):
    if args.angles is None:
        angles = STANDARD_CHSH_ANGLES
    else:
        angles = tuple(args.angles) if args.radians else tuple(a * pi / 180 for a in args.angles)
    score = chsh_score(_load_state(args.file), angles)
    excess = score > 2.0
    out.write(f"S = {score:.10g}  quantum_excess = {'true' if excess else 'false'}\n")
    return score, excess


def render_sweep_csv(points):
    lines = ["epsilon,concurrence,atomic_residual"]
    lines += [f"{_num(p.epsilon)},{_num(p.concurrence)},{_num(p.atomic_residual)}" for p in points]
    lines.append(f"# slope={_num(fitted_slope(points))}")
    return "\n".join(lines) + "\n"


def cmd_sweep(args, out):
    try:
        choice = CChoice(args.c)
    except ValueError:
        raise UnknownKind(f"unknown c choice {args.c!r}; expected low, middle or high") from None
    if not args.eps_max > 0:
        raise InfeasibleEpsilon("eps-max must be > 0")
    points = linearity_scan(choice, args.eps_max, args.steps, grid_size=args.grid)
    text = render_sweep_csv(points)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    out.write(f"wrote {len(points)} rows to {args.out}; slope = {_short(fitted_slope(points))}\n")
    return points


def build_parser():
    parser = argparse.ArgumentParser(prog="bellsym", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a state and report every residual")
    p.add_argument("file")
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.add_argument("--json", action="store_true", help="structured output")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("derive", help="derive a Bell state from the atomic symmetry")
    p.add_argument("kind", help="phi+, phi-, psi+ or psi-")
    p.add_argument("--out")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("concurrence", help="Wootters concurrence of a state")
    p.add_argument("file")
    p.set_defaults(func=cmd_concurrence)

    p = sub.add_parser("atomic", help="atomic-symmetry residual in one angle mode")
    p.add_argument("file")
    p.add_argument("--mode", required=True, help="parallel, crossed, twist or twist-crossed")
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.set_defaults(func=cmd_atomic)

    p = sub.add_parser("chsh", help="CHSH score at four polarizer angles")
    p.add_argument("file")
    p.add_argument("--angles", type=float, nargs=4, metavar=("A", "A2", "B", "B2"),
                   help="a a' b b' in degrees (default 0 45 22.5 67.5)")
    p.add_argument("--radians", action="store_true")
    p.set_defaults(func=cmd_chsh)

    p = sub.add_parser("sweep", help="concurrence vs epsilon scan written as CSV")
    p.add_argument("--c", required=True, help="low, middle or high")
    p.add_argument("--eps-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except BellSymError as exc:
        print(f"bellsym {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"bellsym {args.command}: {exc}", file=sys.stderr)
        return InfeasibleEpsilon.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
