"""Named two-qubit gates and their reference cell coordinates.

Each gate comes in a plain form and a primed form ``X' = i * X``. The
primed forms share the P-cell point of their plain partner but sit at a
different T-cell point.
"""
import enum
import math
from dataclasses import dataclass

import numpy as np

from .cells import CellKind, canonicalize_P
from .su4 import exp_canonical, from_bell, project_su4, to_bell

PI = math.pi
CHI_ANGLE = math.acos(0.2) / 8


class GateName(str, enum.Enum):
    I = "I"
    SWAP = "SWAP"
    SQRT_SWAP = "SqrtSWAP"
    ISWAP = "iSWAP"
    SQRT_ISWAP = "SqrtiSWAP"
    CNOT = "CNOT"
    B = "B"
    QFT = "QFT"
    CHI = "Chi"
    I_P = "I'"
    SWAP_P = "SWAP'"
    SQRT_SWAP_P = "SqrtSWAP'"
    ISWAP_P = "iSWAP'"
    SQRT_ISWAP_P = "SqrtiSWAP'"
    CNOT_P = "CNOT'"
    B_P = "B'"
    QFT_P = "QFT'"
    CHI_P = "Chi'"

    @property
    def primed(self):
        return self.value.endswith("'")

    @property
    def plain(self):
        return GateName(self.value.rstrip("'"))


PLAIN_GATES = tuple(g for g in GateName if not g.primed)
PRIMED_GATES = tuple(g for g in GateName if g.primed)


@dataclass(frozen=True)
class ReferenceEntry:
    name: GateName
    t_coords: tuple
    p_coords: tuple


_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)
_ISWAP = np.array([[1, 0, 0, 0], [0, 0, 1j, 0], [0, 1j, 0, 0], [0, 0, 0, 1]], dtype=complex)
_CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def _qft():
    j = np.arange(4)
    return (1j ** np.outer(j, j)) / 2


def principal_sqrt(u):
    """Principal square root of the SU(4) part of a unitary.

    The gate is first projected to determinant one, then rooted
    eigenvalue by eigenvalue (principal branch) in the Bell basis.
    """
    v, _ = project_su4(u)
    m = to_bell(v)
    w, vecs = np.linalg.eig(m)
    # unitary input: re-orthonormalize degenerate eigenspaces
    vecs, _ = np.linalg.qr(vecs)
    w = np.diag(vecs.conj().T @ m @ vecs)
    root = vecs @ np.diag(np.sqrt(w)) @ vecs.conj().T
    return from_bell(root)


def _plain_matrix(name):
    if name is GateName.I:
        return np.eye(4, dtype=complex)
    if name is GateName.SWAP:
        return _SWAP.copy()
    if name is GateName.SQRT_SWAP:
        return principal_sqrt(_SWAP)
    if name is GateName.ISWAP:
        return _ISWAP.copy()
    if name is GateName.SQRT_ISWAP:
        return principal_sqrt(_ISWAP)
    if name is GateName.CNOT:
        return _CNOT.copy()
    if name is GateName.B:
        return exp_canonical([PI / 4, PI / 8, 0.0])
    if name is GateName.QFT:
        return _qft()
    return exp_canonical([PI / 4 - CHI_ANGLE, PI / 8, CHI_ANGLE])


def gate_matrix(name):
    """4x4 unitary of a named gate; primed names give ``1j`` times the plain gate."""
    name = GateName(name)
    m = _plain_matrix(name.plain)
    return 1j * m if name.primed else m


# P-cell points; for plain gates the T-cell point is the same
_P_COORDS = {
    GateName.I: (0.0, 0.0, 0.0),
    GateName.SWAP: (PI / 4, PI / 4, PI / 4),
    GateName.SQRT_SWAP: (PI / 8, PI / 8, PI / 8),
    GateName.ISWAP: (PI / 4, PI / 4, 0.0),
    GateName.SQRT_ISWAP: (PI / 8, PI / 8, 0.0),
    GateName.CNOT: (PI / 4, 0.0, 0.0),
    GateName.B: (PI / 4, PI / 8, 0.0),
    GateName.QFT: (PI / 4, PI / 4, PI / 8),
    GateName.CHI: (PI / 4 - CHI_ANGLE, PI / 8, CHI_ANGLE),
}

_T_PRIMED = {
    GateName.I_P: (PI / 2, 0.0, 0.0),
    GateName.SWAP_P: (PI / 4, PI / 4, -PI / 4),
    GateName.SQRT_SWAP_P: (3 * PI / 8, PI / 8, -PI / 8),
    GateName.ISWAP_P: (PI / 4, PI / 4, 0.0),
    GateName.SQRT_ISWAP_P: (3 * PI / 8, PI / 8, 0.0),
    GateName.CNOT_P: (PI / 4, 0.0, 0.0),
    GateName.B_P: (PI / 4, PI / 8, 0.0),
    GateName.QFT_P: (PI / 4, PI / 4, -PI / 8),
    GateName.CHI_P: (PI / 4 + CHI_ANGLE, PI / 8, -CHI_ANGLE),
}


def reference_coords(name, cell):
    """Tabulated coordinates of a gate in the T- or P-cell."""
    name = GateName(name)
    cell = CellKind(cell)
    if cell is CellKind.P:
        return np.array(_P_COORDS[name.plain])
    if name.primed:
        return np.array(_T_PRIMED[name])
    return np.array(_P_COORDS[name])


def entries():
    """All catalog entries in declaration order."""
    return [
        ReferenceEntry(
            g,
            tuple(reference_coords(g, CellKind.T)),
            tuple(reference_coords(g, CellKind.P)),
        )
        for g in GateName
    ]


def check_consistency(tol=1e-12):
    """Names whose P point differs from the canonicalized T point."""
    bad = []
    for e in entries():
        if np.max(np.abs(canonicalize_P(e.t_coords).coords - np.array(e.p_coords))) > tol:
            bad.append(e.name)
    return bad
