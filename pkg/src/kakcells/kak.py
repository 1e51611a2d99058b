"""Constructive KAK factorization of two-qubit unitaries.

``U = input_phase * ell * (k1_a (x) k1_b) * exp_canonical(coords) * (k2_a (x) k2_b)``

The construction works in the Bell basis, where local gates are real
orthogonal and the canonical interaction is diagonal: for ``M = Q^dag V Q``
the symmetric unitary ``M M^T = O1 D^2 O1^T`` is diagonalized by a real
orthogonal ``O1`` (simultaneously diagonalizing its real and imaginary
parts), ``D`` follows from the eigenphases and ``O2 = D^-1 O1^T M``.
Weyl moves and lattice translations that bring the coordinates into a
cell are transported onto ``O1``, ``O2`` and the central phase ``ell``.
"""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .cells import CellKind, canonicalize_with_move
from .config import get_tol
from .exceptions import DegenerateRecovery
from .jacobi import simultaneous_diagonalize
from .su4 import (
    THETA_FROM_COORDS,
    coords_to_phases,
    exp_canonical,
    factor_local,
    from_bell,
    phases_to_coords,
    project_su4,
    to_bell,
)
from .weyl import WEYL_GROUP

RECON_TOL = 1e-9
MAX_RETRIES = 3
_FOURTH_ROOTS = (1, 1j, -1, -1j)


def _theta_permutations():
    # For each Weyl element R, the index map pi with (L R c)_i = (L c)_pi(i).
    L = THETA_FROM_COORDS
    table = {}
    for g in WEYL_GROUP:
        LR = L @ g.matrix()
        perm = []
        for row in LR:
            perm.append(next(j for j in range(4) if np.array_equal(L[j], row)))
        table[g] = np.array(perm)
    return table


_THETA_PERM = _theta_permutations()


@dataclass
class KakDecomposition:
    """Result of :func:`kak_decompose`.

    Attributes:
        input_phase: unit scalar removed by :func:`~kakcells.su4.project_su4`.
        ell: central phase, one of ``1`` or ``1j`` (``-1`` is absorbed into
            ``k1_a``).
        k1_a, k1_b, k2_a, k2_b: SU(2) factors of the left and right local gates.
        coords: canonical coordinates ``[c1, c2, c3]`` in radians.
        cell: ``CellKind.T``, ``CellKind.P`` or ``None`` for raw coordinates.
    """

    input_phase: complex
    ell: complex
    k1_a: np.ndarray
    k1_b: np.ndarray
    k2_a: np.ndarray
    k2_b: np.ndarray
    coords: np.ndarray
    cell: Optional[CellKind] = None
    retries: int = field(default=0, compare=False)

    @property
    def k1(self):
        return np.kron(self.k1_a, self.k1_b)

    @property
    def k2(self):
        return np.kron(self.k2_a, self.k2_b)

    def reconstruct(self):
        return reconstruct(self)


def reconstruct(d):
    """Multiply a decomposition back out into a 4x4 unitary."""
    return d.input_phase * d.ell * (d.k1 @ exp_canonical(d.coords) @ d.k2)


def _polar_orthogonal(m):
    u, _, vt = np.linalg.svd(m)
    return u @ vt


def _nearest_special_unitary(v):
    # inputs accepted under a loose tol are polished so the internal
    # residual checks run against an exact SU(4) element
    u, _, vh = np.linalg.svd(v)
    w = u @ vh
    return w / np.linalg.det(w) ** 0.25


def _mixing(attempt):
    if attempt == 0:
        return 1.0, 0.0
    phi = np.random.default_rng(attempt).uniform(0, 2 * np.pi)
    return np.cos(phi), np.sin(phi)


def _bell_factorization(m):
    """Real orthogonal ``o1, o2`` (det +1) and coords with ``m = o1 D o2``."""
    s = m @ m.T
    for attempt in range(MAX_RETRIES + 1):
        cos, sin = _mixing(attempt)
        a = cos * s.real + sin * s.imag
        b = -sin * s.real + cos * s.imag
        o1, _ = simultaneous_diagonalize(a, b)
        lam = np.einsum("ij,jk,ki->i", o1.T, s, o1)
        theta = np.angle(lam) / 2
        k = round(float(theta.sum()) / np.pi)
        theta[3] -= k * np.pi
        coords = phases_to_coords(theta)
        d = np.exp(1j * coords_to_phases(coords))
        o2c = (o1.T @ m) / d[:, None]
        o2 = _polar_orthogonal(o2c.real)
        if np.linalg.det(o1) < 0:
            o1[:, 0] *= -1
            o2[0, :] *= -1
        err = np.linalg.norm((o1 * d) @ o2 - m)
        if err <= RECON_TOL and np.linalg.det(o2) > 0:
            return o1, o2, coords, attempt
    raise DegenerateRecovery(
        f"Bell-basis factorization failed after {MAX_RETRIES} retries (residual {err:.3e})"
    )


def _transport(o1, o2, weyl, shift):
    """Apply a cell move to the Bell-basis factors; returns ``(o1, o2, eta)``."""
    perm = _THETA_PERM[weyl]
    p = np.eye(4)[perm]
    o1 = o1 @ p.T
    o2 = p @ o2
    if np.linalg.det(p) < 0:
        o1[:, 0] *= -1
        o2[0, :] *= -1
    ln = THETA_FROM_COORDS @ np.asarray(shift, dtype=int)
    # exp(-i pi/2 ln_j) = eta * e_j with e_j = +-1 (all ln_j share parity)
    eta = _FOURTH_ROOTS[-int(ln[0]) % 4]
    e = np.array([(-1) ** (((int(x) - int(ln[0])) // 2) % 2) for x in ln], dtype=float)
    return o1, e[:, None] * o2, eta


def _snap_fourth_root(z):
    return min(_FOURTH_ROOTS, key=lambda r: abs(z - r))


def kak_decompose(u, cell=CellKind.T, tol=None):
    """KAK decomposition of a two-qubit unitary.

    Args:
        u: 4x4 unitary.
        cell: ``"T"``, ``"P"`` or ``None`` for raw (uncanonicalized) coordinates.
        tol: unitarity tolerance; defaults to :func:`~kakcells.config.get_tol`.

    Raises:
        NotUnitary: if ``u`` fails the unitarity check.
        DegenerateRecovery: if the eigenvector pairing cannot be repaired.
    """
    tol = get_tol(tol)
    v, input_phase = project_su4(u, tol)
    m = to_bell(_nearest_special_unitary(v))
    o1, o2, coords, retries = _bell_factorization(m)

    eta = 1
    if cell is not None:
        cell = CellKind(cell)
        point, weyl, shift = canonicalize_with_move(coords, cell)
        o1, o2, eta = _transport(o1, o2, weyl, shift)
        coords = point.coords

    k1_a, k1_b, p1 = factor_local(from_bell(o1), tol=max(tol, 1e-8))
    k2_a, k2_b, p2 = factor_local(from_bell(o2), tol=max(tol, 1e-8))
    ell = eta * p1 * p2
    snapped = _snap_fourth_root(ell)
    if abs(ell - snapped) > 1e-6:
        raise DegenerateRecovery(f"central phase {ell} is not a fourth root of unity")
    ell = snapped
    if ell in (-1, -1j):
        k1_a = -k1_a
        ell = -ell

    return KakDecomposition(
        input_phase=complex(input_phase),
        ell=complex(ell),
        k1_a=k1_a,
        k1_b=k1_b,
        k2_a=k2_a,
        k2_b=k2_b,
        coords=np.asarray(coords, dtype=float),
        cell=cell,
        retries=retries,
    )


def reconstruction_error(u, d):
    return float(np.linalg.norm(reconstruct(d) - np.asarray(u)))
