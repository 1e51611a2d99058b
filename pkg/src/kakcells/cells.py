"""Fundamental cells for local and projective-local equivalence.

The T-cell ``{c1 >= c2 >= |c3|, c1 + c2 <= pi/2}`` holds exactly one
point per double coset ``K u K`` of SU(4); the P-cell (the half with
``c3 >= 0``, glued along ``c3 = 0``) holds one point per class modulo the
center ``{1, i, -1, -i}`` as well.

Canonicalizers track the affine move they apply, ``c' = R c + (pi/2) n``
with ``R`` a Weyl element and ``n`` an integer lattice vector, so the KAK
engine can transport its local factors along.
"""
import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .config import SNAP_TOL, get_tol
from .exceptions import OutOfCell
from .lattice import LatticeKind, integer_points
from .weyl import IDENTITY, WEYL_GROUP, WeylElement, apply

HALF_PI = math.pi / 2
QUARTER_PI = math.pi / 4

_SWAP01 = WeylElement((1, 0, 2), (1, 1, 1))
_SWAP12 = WeylElement((0, 2, 1), (1, 1, 1))
_FLIP12 = WeylElement((0, 2, 1), (1, -1, -1))  # [c1, -c3, -c2]
_FLIP01 = WeylElement((1, 0, 2), (-1, -1, 1))  # [-c2, -c1, c3]
_NEG02 = WeylElement((0, 1, 2), (-1, 1, -1))  # [-c1, c2, -c3]

_MAX_FOLDS = 64


class CellKind(str, enum.Enum):
    T = "T"
    P = "P"


@dataclass(frozen=True)
class CellPoint:
    coords: np.ndarray
    cell: CellKind

    def __iter__(self):
        return iter(self.coords)

    def tolist(self):
        return [float(x) for x in self.coords]


def snap(c, eps=SNAP_TOL):
    """Pull coordinates within ``eps`` of a multiple of pi/4 exactly onto it."""
    c = np.array(c, dtype=float)
    q = np.rint(c / QUARTER_PI)
    near = np.abs(c - q * QUARTER_PI) <= eps
    c[near] = q[near] * QUARTER_PI
    return c + 0.0


def _tidy(c):
    """Final snapping of an output point onto the boundaries it touches."""
    c = snap(c)
    if abs(c[0] + c[1] - HALF_PI) <= SNAP_TOL:
        c[1] = HALF_PI - c[0]
    # equal magnitudes become exactly equal, so ties sort stably
    for i, j in ((0, 1), (1, 2), (0, 2)):
        if abs(abs(c[i]) - abs(c[j])) <= SNAP_TOL:
            c[j] = math.copysign(abs(c[i]), c[j])
    return c + 0.0


class _Tracker:
    """Accumulates an affine Weyl move applied to a fixed starting point."""

    def __init__(self, c):
        self.start = np.asarray(c, dtype=float)
        self.weyl = IDENTITY
        self.shift = np.zeros(3, dtype=int)

    @property
    def current(self):
        # exact affine image; folding decisions never see snapped values
        return apply(self.weyl, self.start) + HALF_PI * self.shift

    def translate(self, n):
        self.shift = self.shift + np.asarray(n, dtype=int)

    def act(self, g, n=(0, 0, 0)):
        self.weyl = g @ self.weyl
        self.shift = g.matrix() @ self.shift + np.asarray(n, dtype=int)


def _check(c):
    c = np.asarray(c, dtype=float)
    if c.shape != (3,) or not np.all(np.isfinite(c)):
        raise ValueError(f"coordinates must be three finite reals, got {c!r}")
    return c


def _fold_T(tr):
    # Reflect across whichever alcove wall is violated until none is.
    for _ in range(_MAX_FOLDS):
        c = tr.current
        if c[0] < c[1]:
            tr.act(_SWAP01)
        elif c[1] < c[2]:
            tr.act(_SWAP12)
        elif c[1] + c[2] < 0:
            tr.act(_FLIP12)
        elif c[0] + c[1] > HALF_PI:
            tr.act(_FLIP01, (1, 1, 0))
        else:
            return
    raise RuntimeError(f"T-cell folding did not converge for {tr.start}")


def _canonicalize_T(c):
    tr = _Tracker(c)
    # c1 into [0, pi/2) with the (pi/2, pi/2, 0) translation
    k = math.floor(tr.current[0] / HALF_PI)
    tr.translate((-k, -k, 0))
    # c2 into [0, pi/2); an odd shift is paired with pi/2 on c3
    k = math.floor(tr.current[1] / HALF_PI)
    tr.translate((0, -k, k % 2))
    # c3 into [-pi/2, pi/2) with the pi translation
    k = math.floor((tr.current[2] + HALF_PI) / math.pi)
    tr.translate((0, 0, -2 * k))
    # sort descending
    c = tr.current
    if c[0] < c[1]:
        tr.act(_SWAP01)
    c = tr.current
    if c[1] < c[2]:
        tr.act(_SWAP12)
    c = tr.current
    if c[0] < c[1]:
        tr.act(_SWAP01)
    # c1 + c2 <= pi/2, then c2 >= |c3|; repeat until stable
    _fold_T(tr)
    return tr


def _sort_desc(tr):
    c = tr.current
    order = sorted(range(3), key=lambda i: -c[i])
    tr.act(WeylElement(tuple(order), (1, 1, 1)))


def _canonicalize_P(c):
    tr = _Tracker(c)
    tr.translate([-math.floor(x / HALF_PI) for x in tr.current])
    _sort_desc(tr)
    c = tr.current
    if c[0] + c[1] > HALF_PI:
        tr.act(_FLIP01, (1, 1, 0))
        _sort_desc(tr)
    c = tr.current
    if abs(c[2]) <= SNAP_TOL and c[0] > QUARTER_PI + SNAP_TOL:
        tr.act(_NEG02, (1, 0, 0))
    return tr


def canonicalize_with_move(c, cell):
    """Canonical point plus the move ``(weyl, shift)`` that produced it.

    ``coords`` equals ``apply(weyl, c) + (pi/2) * shift`` up to the final
    snapping of values within ``SNAP_TOL`` of a boundary.
    """
    c = _check(c)
    cell = CellKind(cell)
    tr = _canonicalize_T(c) if cell is CellKind.T else _canonicalize_P(c)
    return CellPoint(_tidy(tr.current), cell), tr.weyl, tr.shift


def canonicalize_T(c):
    """Representative of ``c`` in the T-cell."""
    return canonicalize_with_move(c, CellKind.T)[0]


def canonicalize_P(c):
    """Representative of ``c`` in the P-cell."""
    return canonicalize_with_move(c, CellKind.P)[0]


def canonicalize(c, cell):
    return canonicalize_with_move(c, cell)[0]


def in_cell(c, cell, tol=None):
    """Membership in the T- or P-cell, boundaries tested within ``tol``.

    The T-cell is taken closed, which admits the single vertex
    ``(pi/2, 0, 0)`` (the class of ``i * I``).
    """
    c1, c2, c3 = _check(c)
    tol = get_tol(tol)
    cell = CellKind(cell)
    if c1 < c2 - tol or c1 + c2 > HALF_PI + tol:
        return False
    if cell is CellKind.T:
        return c2 >= abs(c3) - tol
    if c2 < c3 - tol or c3 < -tol or c1 > HALF_PI - SNAP_TOL:
        return False
    # glued seam: only the half c1 <= pi/4 of the c3 = 0 face is kept
    if abs(c3) <= SNAP_TOL and c1 > QUARTER_PI + tol:
        return False
    return True


def phase_partner_T(c, tol=None):
    """T-cell point of ``i * U`` given the T-cell point of ``U``.

    Raises:
        OutOfCell: if ``c`` is not in the T-cell.
    """
    c = _check(c)
    if not in_cell(c, CellKind.T, tol):
        raise OutOfCell(f"{c.tolist()} is not in the T-cell")
    return canonicalize_T([HALF_PI - c[0], c[1], -c[2]]).coords


def _lattice_for(cell):
    return LatticeKind.K if CellKind(cell) is CellKind.T else LatticeKind.P


def orbit(c, cell, bound=1):
    """Orbit points ``g c + t`` with ``g`` in the Weyl group and ``t`` a
    lattice vector of the cell's group with ``max |t_i| <= bound * pi/2``.

    Returned sorted and de-duplicated (to 12 decimals).
    """
    c = _check(c)
    shifts = HALF_PI * np.array(integer_points(_lattice_for(cell), int(bound)), dtype=float)
    images = np.array([apply(g, c) for g in WEYL_GROUP])
    pts = (images[:, None, :] + shifts[None, :, :]).reshape(-1, 3)
    pts = np.unique(np.round(pts, 12) + 0.0, axis=0)
    return pts


def cell_distance(a, b, cell):
    """Distance between the classes of ``a`` and ``b`` (max-norm).

    Minimizes over Weyl images and nearby lattice translates of ``b`` so
    that points glued across a cell boundary come out at distance zero.
    """
    a = _check(a)
    b = _check(b)
    shifts = HALF_PI * np.array(integer_points(_lattice_for(cell), 2), dtype=float)
    images = np.array([apply(g, b) for g in WEYL_GROUP])
    d = a[None, None, :] - images[:, None, :] - shifts[None, :, :]
    return float(np.min(np.max(np.abs(d), axis=-1)))


def _cell_coords(u, cell, tol):
    from .kak import kak_decompose

    return kak_decompose(u, cell, tol=tol).coords


def locally_equivalent(u, v, tol=None):
    """``True`` if ``u`` and ``v`` (projected to SU(4)) share a double coset."""
    tol = get_tol(tol)
    a = _cell_coords(u, CellKind.T, tol)
    b = _cell_coords(v, CellKind.T, tol)
    return cell_distance(a, b, CellKind.T) <= tol


def projective_locally_equivalent(u, v, tol=None):
    """``True`` if ``u`` and ``v`` agree up to local factors and a global phase."""
    tol = get_tol(tol)
    a = _cell_coords(u, CellKind.P, tol)
    b = _cell_coords(v, CellKind.P, tol)
    return cell_distance(a, b, CellKind.P) <= tol


_VERTICES = {
    CellKind.T: {
        "O": (0.0, 0.0, 0.0),
        "A": (QUARTER_PI, QUARTER_PI, QUARTER_PI),
        "B": (HALF_PI, 0.0, 0.0),
        "U": (QUARTER_PI, QUARTER_PI, -QUARTER_PI),
    },
    CellKind.P: {
        "O": (0.0, 0.0, 0.0),
        "A": (QUARTER_PI, QUARTER_PI, QUARTER_PI),
        "B": (HALF_PI, 0.0, 0.0),
        "C": (QUARTER_PI, QUARTER_PI, 0.0),
    },
}


def cell_geometry(cell):
    """Vertices, edges and (for P) the glued seam of a cell, JSON-ready."""
    cell = CellKind(cell)
    verts = _VERTICES[cell]
    names = sorted(verts)
    out = {
        "cell": cell.value,
        "vertices": {k: list(v) for k, v in verts.items()},
        "edges": [list(e) for e in itertools.combinations(names, 2)],
    }
    if cell is CellKind.P:
        out["vertices"]["S"] = [QUARTER_PI, 0.0, 0.0]
        out["seam"] = {
            "segment": ["S", "C"],
            "glued": [["O", "C", "S"], ["B", "C", "S"]],
            "map": "[c1, c2, 0] ~ [pi/2 - c1, c2, 0]",
            "excluded": ["B"],
        }
    return out
