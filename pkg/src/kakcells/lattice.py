"""Translation lattices of canonical coordinates.

* ``UNIT``: ``exp_canonical(c) == I`` -- all ``c_i / pi`` integers, all even
  or exactly two odd.
* ``K``: ``exp_canonical(c)`` is local -- the same rule on ``2 c_i / pi``
  (half the unit lattice).
* ``P``: ``exp_canonical(c)`` is local up to a global phase in
  ``{1, i, -1, -i}`` -- every ``c_i`` a multiple of ``pi / 2``.
"""
import enum
import itertools
import math

import numpy as np

from .config import get_tol

HALF_PI = math.pi / 2


class LatticeKind(str, enum.Enum):
    UNIT = "Unit"
    K = "K"
    P = "P"


def _integers(x, unit, tol):
    """Nearest integers of ``x / unit``, or ``None`` if any residue exceeds ``tol``."""
    q = np.asarray(x, dtype=float) / unit
    n = np.rint(q)
    if np.any(np.abs(q - n) * unit > tol):
        return None
    return n.astype(int)


def _parity_ok(n):
    odd = int(np.sum(n % 2))
    return odd in (0, 2)


def in_lattice(kind, c, tol=None):
    """Membership of ``c`` in the unit, K- or p-lattice, within ``tol``."""
    kind = LatticeKind(kind)
    tol = get_tol(tol)
    if kind is LatticeKind.UNIT:
        n = _integers(c, math.pi, tol)
        return n is not None and _parity_ok(n)
    n = _integers(c, HALF_PI, tol)
    if n is None:
        return False
    if kind is LatticeKind.K:
        return _parity_ok(n)
    return True


def minimal_positive_period():
    """Smallest positive shift of one coordinate landing in ``Z(SU(4)) K``."""
    return HALF_PI


def on_diagram(c, tol=None):
    """``True`` if some ``+-c_a +- c_b`` (``a != b``) is a multiple of ``pi/2``."""
    tol = get_tol(tol)
    c = np.asarray(c, dtype=float)
    for a, b in itertools.combinations(range(3), 2):
        for value in (c[a] - c[b], c[a] + c[b]):
            r = value / HALF_PI
            if abs(r - round(r)) * HALF_PI <= tol:
                return True
    return False


def generators(kind):
    """Integer generators (in units of ``pi/2``) of a lattice."""
    kind = LatticeKind(kind)
    if kind is LatticeKind.UNIT:
        base = [(4, 0, 0), (2, 2, 0)]
    elif kind is LatticeKind.K:
        base = [(2, 0, 0), (1, 1, 0)]
    else:
        base = [(1, 0, 0)]
    out = set()
    for v in base:
        for p in itertools.permutations(v):
            out.add(p)
    return sorted(out)


def integer_points(kind, bound):
    """Lattice points ``n`` (in units of ``pi/2``) with ``max |n_i| <= bound``."""
    kind = LatticeKind(kind)
    rng = range(-bound, bound + 1)
    pts = []
    for n in itertools.product(rng, repeat=3):
        if kind is LatticeKind.P:
            pts.append(n)
        elif kind is LatticeKind.K:
            if sum(n) % 2 == 0:
                pts.append(n)
        elif all(x % 2 == 0 for x in n) and sum(x // 2 for x in n) % 2 == 0:
            pts.append(n)
    return pts
