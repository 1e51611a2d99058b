"""Command-line front end.

Every subcommand prints one JSON document (or, for ``catalog`` without
``--json``, a text table) to stdout. Failures print
``{"error": ..., "message": ..., "exit_code": ...}`` to stderr and exit
with 1 (malformed input), 2 (not unitary) or 3 (degenerate recovery).
"""
import argparse
import math
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import catalog
from .cells import CellKind, canonicalize, cell_distance, cell_geometry, orbit
from .config import get_tol
from .exceptions import DegenerateRecovery, NotUnitary
from .jsonio import (
    MalformedInput,
    coords_to_json,
    decomposition_to_json,
    dumps,
    load_file,
    matrix_from_json,
    matrix_to_json,
    pi_fraction,
)
from .kak import kak_decompose, reconstruction_error
from .lattice import LatticeKind, in_lattice, on_diagram

EXIT_MALFORMED = 1
EXIT_NOT_UNITARY = 2
EXIT_DEGENERATE = 3

_ANGLE = re.compile(r"^([+-]?)(\d*\.?\d*)\*?pi(?:/(\d+(?:\.\d*)?))?$")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route it to exit 1 instead
    def error(self, message):
        raise _UsageError(message)


def parse_angle(text):
    """Parse ``"0.3"``, ``"pi/4"``, ``"-3pi/8"`` or ``"3*pi/8"`` into radians."""
    s = text.strip().replace(" ", "")
    try:
        value = float(s)
    except ValueError:
        m = _ANGLE.match(s)
        if not m:
            raise argparse.ArgumentTypeError(f"not an angle: {text!r}") from None
        sign, num, den = m.groups()
        value = (float(num) if num not in ("", ".") else 1.0) * math.pi / (float(den) if den else 1.0)
        if sign == "-":
            value = -value
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"angle must be finite: {text!r}")
    return value


def _tol(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0 or not math.isfinite(value):
        raise argparse.ArgumentTypeError("tolerance must be a positive finite number")
    return value


def _cell_arg(text):
    if text.lower() == "raw":
        return None
    try:
        return CellKind(text.upper())
    except ValueError:
        raise argparse.ArgumentTypeError(f"cell must be T, P or raw, got {text!r}") from None


def build_parser():
    p = _Parser(prog="kakcells", description="Two-qubit KAK decomposition and gate classification.")
    sub = p.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="KAK decomposition of a matrix JSON file or a directory of them")
    d.add_argument("path")
    d.add_argument("--cell", type=_cell_arg, default=CellKind.T)
    d.add_argument("--tol", type=_tol, default=None)
    d.add_argument("--jobs", type=int, default=None, help="worker threads for directory input")

    c = sub.add_parser("canon", help="canonical coordinates of a point")
    c.add_argument("coords", nargs=3, type=parse_angle, metavar="c")
    c.add_argument("--cell", type=_cell_arg, default=CellKind.T)

    e = sub.add_parser("equiv", help="local or projective-local equivalence of two gates")
    e.add_argument("a")
    e.add_argument("b")
    e.add_argument("--projective", action="store_true")
    e.add_argument("--tol", type=_tol, default=None)

    o = sub.add_parser("orbit", help="orbit points under the Weyl group and lattice translations")
    o.add_argument("coords", nargs=3, type=parse_angle, metavar="c")
    o.add_argument("--cell", type=_cell_arg, default=CellKind.T)
    o.add_argument("--bound", type=int, default=1, help="translation bound in units of pi/2")

    lc = sub.add_parser("lattice-check", help="lattice and diagram membership flags")
    lc.add_argument("coords", nargs=3, type=parse_angle, metavar="c")
    lc.add_argument("--tol", type=_tol, default=None)

    cat = sub.add_parser("catalog", help="reference table of named gates")
    cat.add_argument("--json", action="store_true")

    g = sub.add_parser("cell-geometry", help="polytope data for a cell")
    g.add_argument("--cell", type=_cell_arg, default=CellKind.T)
    g.add_argument("-o", "--output", default=None)
    g.add_argument("--points", default=None, help="'gates' or a comma-separated list of gate names")
    return p


def _require_cell(cell):
    if cell is None:
        raise _UsageError("--cell must be T or P for this command")
    return cell


def _load_matrix(path):
    return matrix_from_json(load_file(path))


def _decompose_one(path, cell, tol):
    u = _load_matrix(path)
    d = kak_decompose(u, cell, tol=tol)
    return decomposition_to_json(d, reconstruction_error(u, d))


def _error_code(exc):
    if isinstance(exc, NotUnitary):
        return EXIT_NOT_UNITARY
    if isinstance(exc, DegenerateRecovery):
        return EXIT_DEGENERATE
    return EXIT_MALFORMED


def _error_json(exc):
    return {"error": type(exc).__name__, "message": str(exc), "exit_code": _error_code(exc)}


def _cmd_decompose(args, out):
    tol = get_tol(args.tol)
    if not os.path.isdir(args.path):
        out.write(dumps(_decompose_one(args.path, args.cell, tol)))
        return 0
    files = sorted(f for f in os.listdir(args.path) if f.endswith(".json"))
    paths = [os.path.join(args.path, f) for f in files]

    def work(path):
        try:
            return _decompose_one(path, args.cell, tol), None
        except (MalformedInput, NotUnitary, DegenerateRecovery, ValueError) as exc:
            return None, exc

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        results = list(pool.map(work, paths))
    code = 0
    entries = []
    for name, (res, exc) in zip(files, results):
        if exc is None:
            entries.append({"file": name, "result": res})
        else:
            entries.append({"file": name, "error": _error_json(exc)})
            code = code or _error_code(exc)
    out.write(dumps({"results": entries}))
    return code


def _cmd_canon(args, out):
    point = canonicalize(args.coords, _require_cell(args.cell))
    obj = coords_to_json(point.coords)
    obj["cell"] = point.cell.value
    out.write(dumps(obj))
    return 0


def _cmd_equiv(args, out):
    tol = get_tol(args.tol)
    cell = CellKind.P if args.projective else CellKind.T
    a = kak_decompose(_load_matrix(args.a), cell, tol=tol).coords
    b = kak_decompose(_load_matrix(args.b), cell, tol=tol).coords
    obj = {
        "equivalent": cell_distance(a, b, cell) <= tol,
        "projective": bool(args.projective),
        "coords_a": coords_to_json(a),
        "coords_b": coords_to_json(b),
    }
    out.write(dumps(obj))
    return 0


def _cmd_orbit(args, out):
    if args.bound < 0:
        raise _UsageError("--bound must be non-negative")
    pts = orbit(args.coords, _require_cell(args.cell), args.bound)
    out.write(dumps({"cell": args.cell.value, "bound": args.bound, "points": [coords_to_json(p, False) for p in pts]}))
    return 0


def _cmd_lattice(args, out):
    c = np.array(args.coords)
    obj = {kind.value: in_lattice(kind, c, args.tol) for kind in LatticeKind}
    obj["diagram"] = on_diagram(c, args.tol)
    obj["coords"] = coords_to_json(c)
    out.write(dumps(obj))
    return 0


def _fmt_pi(x):
    f = pi_fraction(x)
    if f is None:
        return f"{x:.6f}"
    return "0" if f == "0" else f"{f}*pi"


def _cmd_catalog(args, out):
    entries = catalog.entries()
    if args.json:
        obj = [
            {
                "name": e.name.value,
                "matrix": matrix_to_json(catalog.gate_matrix(e.name)),
                "t_coords": coords_to_json(e.t_coords),
                "p_coords": coords_to_json(e.p_coords),
            }
            for e in entries
        ]
        out.write(dumps(obj))
        return 0
    width = max(len(e.name.value) for e in entries)
    out.write(f"{'gate':<{width}}  {'T-cell':<40}  P-cell\n")
    for e in entries:
        t = "[" + ", ".join(_fmt_pi(x) for x in e.t_coords) + "]"
        p = "[" + ", ".join(_fmt_pi(x) for x in e.p_coords) + "]"
        out.write(f"{e.name.value:<{width}}  {t:<40}  {p}\n")
    return 0


def _gate_points(choice, cell):
    if choice == "gates":
        names = list(catalog.GateName)
    else:
        try:
            names = [catalog.GateName(s.strip()) for s in choice.split(",") if s.strip()]
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
    seen = {}
    for n in names:
        c = catalog.reference_coords(n, cell)
        seen.setdefault(n.value, [float(x) for x in c])
    return [{"name": k, "c": v} for k, v in seen.items()]


def _cmd_geometry(args, out):
    cell = _require_cell(args.cell)
    obj = cell_geometry(cell)
    if args.points:
        obj["points"] = _gate_points(args.points, cell)
    text = dumps(obj)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise MalformedInput(f"{args.output}: {exc}") from None
        out.write(dumps({"written": args.output}))
    else:
        out.write(text)
    return 0


_COMMANDS = {
    "decompose": _cmd_decompose,
    "canon": _cmd_canon,
    "equiv": _cmd_equiv,
    "orbit": _cmd_orbit,
    "lattice-check": _cmd_lattice,
    "catalog": _cmd_catalog,
    "cell-geometry": _cmd_geometry,
}


def run(argv=None, out=None, err=None):
    """Run one CLI invocation and return its exit code."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return _COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(dumps({"error": "UsageError", "message": str(exc), "exit_code": EXIT_MALFORMED}))
        return EXIT_MALFORMED
    except (MalformedInput, NotUnitary, DegenerateRecovery, ValueError) as exc:
        err.write(dumps(_error_json(exc)))
        return _error_code(exc)


def main():
    sys.exit(run())
