"""Fixed-size two-qubit linear algebra.

Matrices are plain ``numpy`` complex arrays of shape ``(2, 2)`` or
``(4, 4)``; canonical coordinates are real arrays of shape ``(3,)`` in
radians. Qubit 1 is the left tensor factor.
"""
import cmath
import math

import numpy as np

from .config import get_tol
from .exceptions import NotInAlgebra, NotLocal, NotUnitary

SQRT_HALF = math.sqrt(0.5)

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# Columns are the Bell vectors (|00>+|11>), i(|01>+|10>), (|01>-|10>), i(|00>-|11>), over sqrt 2.
_Q = SQRT_HALF * np.array(
    [[1, 0, 0, 1j], [0, 1j, 1, 0], [0, 1j, -1, 0], [1, 0, 0, -1j]], dtype=complex
)
_Q.setflags(write=False)
_QH = _Q.conj().T
_QH.setflags(write=False)

# Bell-basis phases of exp(i(c1 XX + c2 YY + c3 ZZ)) are THETA_FROM_COORDS @ c.
THETA_FROM_COORDS = np.array(
    [[1, -1, 1], [1, 1, -1], [-1, -1, -1], [-1, 1, 1]], dtype=int
)
THETA_FROM_COORDS.setflags(write=False)


def pauli_tensor(a, b):
    """Return ``sigma_a (x) sigma_b`` for axes in ``{"I", "X", "Y", "Z"}``."""
    try:
        return np.kron(PAULI[a], PAULI[b])
    except KeyError as exc:
        raise ValueError(f"unknown Pauli axis {exc.args[0]!r}") from None


def su4_basis():
    """The fifteen generators ``X_1 .. X_15`` as a list.

    The first six span the local algebra (``i sigma^1``, then ``i sigma^2``),
    the last nine the interaction algebra ``i sigma^1_a sigma^2_b`` in
    row-major ``(x, y, z)`` order. ``X_7``, ``X_11``, ``X_15`` (list indices
    6, 10, 14) span the Cartan subalgebra.
    """
    axes = "XYZ"
    local = [1j * pauli_tensor(a, "I") for a in axes] + [1j * pauli_tensor("I", a) for a in axes]
    coupling = [1j * pauli_tensor(a, b) for a in axes for b in axes]
    return local + coupling


def bell_transform():
    """The Bell-basis change-of-basis matrix ``Q`` (a fresh copy)."""
    return _Q.copy()


def is_unitary(m, tol=None):
    """``True`` if ``||M^dag M - I||_F <= tol``."""
    m = np.asarray(m)
    return bool(np.linalg.norm(m.conj().T @ m - np.eye(m.shape[0])) <= get_tol(tol))


def is_special(m, tol=None):
    """``True`` if ``|det M - 1| <= tol``."""
    return bool(abs(np.linalg.det(m) - 1.0) <= get_tol(tol))


def coords_to_phases(c):
    """Bell-basis diagonal phases of the canonical interaction."""
    return THETA_FROM_COORDS @ np.asarray(c, dtype=float)


def phases_to_coords(theta):
    """Invert :func:`coords_to_phases` for phase vectors summing to zero."""
    t1, t2, _, t4 = theta
    return np.array([(t1 + t2) / 2, (t2 + t4) / 2, (t1 + t4) / 2])


def exp_canonical(c):
    """``exp(i(c1 XX + c2 YY + c3 ZZ))`` in closed form via the Bell diagonal."""
    c = np.asarray(c, dtype=float)
    if c.shape != (3,) or not np.all(np.isfinite(c)):
        raise ValueError(f"coordinates must be three finite reals, got {c!r}")
    d = np.exp(1j * coords_to_phases(c))
    return (_Q * d) @ _QH


def to_bell(m):
    return _QH @ m @ _Q


def from_bell(m):
    return _Q @ m @ _QH


def _fourth_root_phase(det):
    # Branch arg(det) in [-pi, pi): det = -1 maps to exp(-i pi/4).
    angle = cmath.phase(det)
    if angle > math.pi - 1e-12:
        angle -= 2 * math.pi
    return cmath.exp(1j * angle / 4)


def project_su4(u, tol=None):
    """Split a unitary into a special-unitary part and a scalar phase.

    Returns:
        ``(v, phase)`` with ``u = phase * v`` and ``det v = 1``. ``phase``
        is the fourth root of ``det u`` whose argument lies in
        ``[-pi/4, pi/4)``.

    Raises:
        NotUnitary: if ``u`` is not a 4x4 unitary within ``tol``.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (4, 4):
        raise NotUnitary(f"expected a 4x4 matrix, got shape {u.shape}")
    tol = get_tol(tol)
    err = np.linalg.norm(u.conj().T @ u - np.eye(4))
    if not err <= tol:
        raise NotUnitary(f"||U^dag U - I||_F = {err:.3e} exceeds tol {tol:.1e}")
    phase = _fourth_root_phase(np.linalg.det(u))
    return u / phase, phase


def _sqrt_det_2x2(m):
    return cmath.sqrt(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def factor_local(k, tol=None):
    """Factor a local two-qubit unitary as ``phase * (a (x) b)``.

    The 4x4 matrix is realigned so that a Kronecker product becomes a rank
    one outer product; the dominant singular pair gives the nearest factors,
    which are then rescaled into SU(2).

    Returns:
        ``(a, b, phase)`` with ``a, b`` in SU(2) and ``|phase| = 1``.

    Raises:
        NotLocal: if the second singular value of the realigned matrix
            exceeds ``tol``.
    """
    k = np.asarray(k, dtype=complex)
    tol = get_tol(tol)
    # realigned[(i, k), (j, l)] = k[(i, j), (k, l)]
    realigned = k.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    u, s, vh = np.linalg.svd(realigned)
    if s[1] > tol:
        raise NotLocal(f"second singular value {s[1]:.3e} exceeds tol {tol:.1e}")
    root = math.sqrt(s[0])
    a = root * u[:, 0].reshape(2, 2)
    b = root * vh[0, :].reshape(2, 2)
    ra = _sqrt_det_2x2(a)
    rb = _sqrt_det_2x2(b)
    if abs(ra) < 1e-8 or abs(rb) < 1e-8:
        raise NotLocal("factor is singular")
    phase = ra * rb
    return a / ra, b / rb, phase / abs(phase)


def killing_form(x, y, tol=None):
    """Killing form ``B(X, Y) = 8 tr(XY)`` on su(4).

    Raises:
        NotInAlgebra: if either argument is not traceless anti-Hermitian.
    """
    tol = get_tol(tol)
    for m in (x, y):
        m = np.asarray(m)
        if np.linalg.norm(m + m.conj().T) > tol or abs(np.trace(m)) > tol:
            raise NotInAlgebra("argument is not a traceless anti-Hermitian 4x4 matrix")
    value = 8.0 * np.trace(np.asarray(x) @ np.asarray(y))
    if abs(value.imag) > tol * max(1.0, abs(value.real)):
        raise NotInAlgebra(f"Killing form has imaginary part {value.imag:.3e}")
    return float(value.real)


def commutator(x, y):
    return x @ y - y @ x


LOCAL_INDICES = tuple(range(6))
COUPLING_INDICES = tuple(range(6, 15))


def su4_coefficients(m):
    """Real coordinates of an su(4) element in the basis ``X_1 .. X_15``.

    The basis is orthogonal under ``<A, B> = Re tr(A^dag B)`` with every
    element of norm 2, so projection is a trace.
    """
    m = np.asarray(m, dtype=complex)
    return np.array([np.real(np.trace(x.conj().T @ m)) / 4.0 for x in su4_basis()])


def commutation_report(local_indices=LOCAL_INDICES):
    """Check ``[k, k] in k``, ``[k, p] in p`` and ``[p, p] in k`` on the basis.

    ``k`` is spanned by the basis elements at ``local_indices`` (by default
    the six local generators) and ``p`` by the rest. For every bracket the component outside the expected
    subspace is measured after projecting onto the basis, together with
    the part not captured by the projection at all.

    Returns:
        dict with ``max_residual`` and per-relation maxima under ``"kk"``,
        ``"kp"`` and ``"pp"``.
    """
    basis = su4_basis()
    k_idx = sorted(local_indices)
    p_idx = [i for i in range(15) if i not in k_idx]
    worst = {"kk": 0.0, "kp": 0.0, "pp": 0.0}
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            z = commutator(x, y)
            coef = su4_coefficients(z)
            rebuilt = sum(a * b for a, b in zip(coef, basis))
            leak = np.linalg.norm(z - rebuilt)
            xi, yj = i in k_idx, j in k_idx
            if xi and yj:
                key, outside = "kk", p_idx
            elif xi != yj:
                key, outside = "kp", k_idx
            else:
                key, outside = "pp", p_idx
            r = max(leak, 2.0 * float(np.linalg.norm(coef[outside])))
            worst[key] = max(worst[key], r)
    return {"max_residual": max(worst.values()), **worst}
