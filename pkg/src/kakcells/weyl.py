"""Weyl group of the two-qubit Cartan decomposition.

The group acts on canonical coordinates ``[c1, c2, c3]`` by permutations
combined with an even number of sign flips (24 elements). Group logic
is exact integer arithmetic; only :func:`apply` touches floats.
"""
import itertools
from dataclasses import dataclass

import numpy as np

from .su4 import commutator, su4_basis

AXES = ("x", "y", "z")


@dataclass(frozen=True, order=True)
class WeylElement:
    """Signed permutation ``c -> [signs[i] * c[perm[i]]]`` (0-based ``perm``)."""

    perm: tuple = (0, 1, 2)
    signs: tuple = (1, 1, 1)

    def __post_init__(self):
        if sorted(self.perm) != [0, 1, 2]:
            raise ValueError(f"perm must permute (0, 1, 2), got {self.perm}")
        if any(s not in (1, -1) for s in self.signs) or len(self.signs) != 3:
            raise ValueError(f"signs must be three entries of +-1, got {self.signs}")
        if self.signs[0] * self.signs[1] * self.signs[2] != 1:
            raise ValueError("Weyl elements flip an even number of signs")

    def __matmul__(self, other):
        """Composition: ``(g @ h)`` acts as ``g`` after ``h``."""
        perm = tuple(other.perm[self.perm[i]] for i in range(3))
        signs = tuple(self.signs[i] * other.signs[self.perm[i]] for i in range(3))
        return WeylElement(perm, signs)

    def inverse(self):
        perm = [0, 0, 0]
        signs = [1, 1, 1]
        for i, p in enumerate(self.perm):
            perm[p] = i
            signs[p] = self.signs[i]
        return WeylElement(tuple(perm), tuple(signs))

    def matrix(self):
        """Integer 3x3 matrix ``R`` with ``apply(g, c) == R @ c``."""
        m = np.zeros((3, 3), dtype=int)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            m[i, p] = s
        return m

    @classmethod
    def from_matrix(cls, m):
        m = np.asarray(m)
        perm = tuple(int(np.flatnonzero(row)[0]) for row in m)
        signs = tuple(int(m[i, p]) for i, p in enumerate(perm))
        return cls(perm, signs)


IDENTITY = WeylElement()


def apply(g, c):
    """Act with a Weyl element on coordinates."""
    c = np.asarray(c, dtype=float)
    return np.array([g.signs[i] * c[g.perm[i]] for i in range(3)])


# (name, element) in the order the reflections are usually tabulated
_REFLECTIONS = (
    ("s_{e_z-e_y}", WeylElement((0, 2, 1), (1, 1, 1))),
    ("s_{e_y+e_z}", WeylElement((0, 2, 1), (1, -1, -1))),
    ("s_{e_y-e_x}", WeylElement((1, 0, 2), (1, 1, 1))),
    ("s_{e_x+e_y}", WeylElement((1, 0, 2), (-1, -1, 1))),
    ("s_{e_x-e_z}", WeylElement((2, 1, 0), (1, 1, 1))),
    ("s_{e_x+e_z}", WeylElement((2, 1, 0), (-1, 1, -1))),
)

# mirror normal of each reflection, same order
MIRROR_NORMALS = (
    (0, -1, 1),
    (0, 1, 1),
    (-1, 1, 0),
    (1, 1, 0),
    (1, 0, -1),
    (1, 0, 1),
)


def reflections():
    """The six root reflections as ``WeylElement`` values."""
    return [g for _, g in _REFLECTIONS]


def named_reflections():
    return dict(_REFLECTIONS)


def generate_group(generators=None):
    """Closure of ``generators`` (default: the six reflections) under composition."""
    gens = list(generators) if generators is not None else reflections()
    group = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        new = []
        for g in frontier:
            for s in gens:
                h = s @ g
                if h not in group:
                    group.add(h)
                    new.append(h)
        frontier = new
    return group


def signed_permutations():
    """All permutations of three entries with an even number of sign flips."""
    return {
        WeylElement(perm, signs)
        for perm in itertools.permutations(range(3))
        for signs in itertools.product((1, -1), repeat=3)
        if signs[0] * signs[1] * signs[2] == 1
    }


WEYL_GROUP = tuple(sorted(generate_group()))


@dataclass(frozen=True)
class Root:
    """Root ``s_a e_a + s_b e_b`` of su(4) relative to the Cartan subalgebra."""

    alpha: str
    beta: str
    sign_alpha: int = 1
    sign_beta: int = 1

    def vector(self):
        v = np.zeros(3, dtype=int)
        v[AXES.index(self.alpha)] = self.sign_alpha
        v[AXES.index(self.beta)] = self.sign_beta
        return v

    def eigenvalues(self):
        """``(a, b, c)``: eigenvalues under ``ad X_7``, ``ad X_11``, ``ad X_15``."""
        return tuple(2j * int(x) for x in self.vector())


def roots():
    out = []
    for alpha, beta in itertools.combinations(AXES, 2):
        for sa, sb in itertools.product((1, -1), repeat=2):
            out.append(Root(alpha, beta, sa, sb))
    return out


def root_vectors():
    """Explicit root vectors ``E_(a,b,c)`` keyed by their eigenvalue triple.

    Each is a complex combination of the fifteen generators ``X_1 .. X_15``.
    """
    X = dict(enumerate(su4_basis(), start=1))
    i = 1j
    table = {
        (0, 2j, 2j): X[1] - i * X[14] - X[4] + i * X[12],
        (0, 2j, -2j): X[1] - i * X[14] + X[4] - i * X[12],
        (0, -2j, 2j): X[1] + i * X[14] + X[4] + i * X[12],
        (0, -2j, -2j): X[1] + i * X[14] - X[4] - i * X[12],
        (2j, 0, 2j): X[2] + i * X[13] - X[5] - i * X[9],
        (2j, 0, -2j): X[2] + i * X[13] + X[5] + i * X[9],
        (-2j, 0, 2j): X[2] - i * X[13] + X[5] - i * X[9],
        (-2j, 0, -2j): X[2] - i * X[13] - X[5] + i * X[9],
        (2j, 2j, 0): X[3] - i * X[10] - X[6] + i * X[8],
        (2j, -2j, 0): X[3] - i * X[10] + X[6] - i * X[8],
        (-2j, 2j, 0): X[3] + i * X[10] + X[6] + i * X[8],
        (-2j, -2j, 0): X[3] + i * X[10] - X[6] - i * X[8],
    }
    return table


def verify_root_system():
    """Check every root vector is a simultaneous eigenvector of the Cartan generators.

    Returns:
        dict with ``max_residual`` (max Frobenius norm of
        ``[H, E] - lambda E``), per-root ``residuals``, the number of roots
        and the dimension bookkeeping ``cartan_dim + n_roots``.
    """
    basis = su4_basis()
    cartan = (basis[6], basis[10], basis[14])
    residuals = {}
    for eig, e in root_vectors().items():
        r = max(np.linalg.norm(commutator(h, e) - lam * e) for h, lam in zip(cartan, eig))
        residuals[eig] = float(r)
    expected = {r.eigenvalues() for r in roots()}
    return {
        "max_residual": max(residuals.values()),
        "residuals": residuals,
        "n_roots": len(residuals),
        "matches_root_list": set(residuals) == expected,
        "dimension": len(cartan) + len(residuals),
    }
