"""JSON encodings for matrices, coordinates and decompositions.

Matrices: ``{"rows": [[{"re": x, "im": y}, ...x4], ...x4]}``.
Coordinates: ``{"c": [c1, c2, c3]}`` in radians, optionally with a
``"c_over_pi"`` list of rationalized multiples of pi for display.
"""
import json
import math
from fractions import Fraction

import numpy as np

from .exceptions import MalformedInput

MAX_DENOMINATOR = 64
RATIONAL_TOL = 1e-9


def pi_fraction(x, max_denominator=MAX_DENOMINATOR, tol=RATIONAL_TOL):
    """``x / pi`` as a string ``"p/q"`` when within ``tol`` of one, else ``None``."""
    q = x / math.pi
    f = Fraction(q).limit_denominator(max_denominator)
    if abs(float(f) * math.pi - x) > tol:
        return None
    return str(f)


def matrix_to_json(m):
    m = np.asarray(m, dtype=complex)
    return {"rows": [[{"re": float(z.real) + 0.0, "im": float(z.imag) + 0.0} for z in row] for row in m]}


def matrix_from_json(obj, shape=(4, 4)):
    """Parse the matrix schema.

    Raises:
        MalformedInput: on any schema violation.
    """
    try:
        rows = obj["rows"]
        m = np.array([[complex(float(e["re"]), float(e["im"])) for e in row] for row in rows])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad matrix JSON: {exc}") from None
    if m.shape != shape:
        raise MalformedInput(f"matrix must be {shape[0]}x{shape[1]}, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise MalformedInput("matrix has non-finite entries")
    return m


def coords_to_json(c, with_pi=True):
    c = [float(x) + 0.0 for x in c]
    out = {"c": c}
    if with_pi:
        out["c_over_pi"] = [pi_fraction(x) for x in c]
    return out


def coords_from_json(obj):
    try:
        c = np.array([float(x) for x in obj["c"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad coordinate JSON: {exc}") from None
    if c.shape != (3,) or not np.all(np.isfinite(c)):
        raise MalformedInput("coordinates must be three finite reals")
    return c


def complex_to_json(z):
    z = complex(z)
    return {"re": z.real + 0.0, "im": z.imag + 0.0}


def complex_from_json(obj):
    try:
        return complex(float(obj["re"]), float(obj["im"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInput(f"bad complex JSON: {exc}") from None


def decomposition_to_json(d, error=None):
    out = {
        "input_phase": complex_to_json(d.input_phase),
        "ell": complex_to_json(d.ell),
        "k1_a": matrix_to_json(d.k1_a),
        "k1_b": matrix_to_json(d.k1_b),
        "k2_a": matrix_to_json(d.k2_a),
        "k2_b": matrix_to_json(d.k2_b),
        "coords": coords_to_json(d.coords),
        "cell": None if d.cell is None else d.cell.value,
    }
    if error is not None:
        out["reconstruction_error"] = float(error)
    return out


def decomposition_from_json(obj):
    from .cells import CellKind
    from .kak import KakDecomposition

    try:
        cell = obj["cell"]
        return KakDecomposition(
            input_phase=complex_from_json(obj["input_phase"]),
            ell=complex_from_json(obj["ell"]),
            k1_a=matrix_from_json(obj["k1_a"], (2, 2)),
            k1_b=matrix_from_json(obj["k1_b"], (2, 2)),
            k2_a=matrix_from_json(obj["k2_a"], (2, 2)),
            k2_b=matrix_from_json(obj["k2_b"], (2, 2)),
            coords=coords_from_json(obj["coords"]),
            cell=None if cell is None else CellKind(cell),
        )
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad decomposition JSON: {exc}") from None


def dumps(obj):
    """Canonical serialization: sorted keys, fixed indent, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def load_file(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"{path}: {exc}") from None
