"""Input validation helpers shared by the estimator and the CLI."""
import numpy as np

from .config import get_tol
from .exceptions import NotUnitary


def check_matrix(m, name="matrix"):
    """Coerce to a finite complex ``(4, 4)`` array.

    Raises:
        ValueError: on wrong shape or non-finite entries.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError(f"{name} must have shape (4, 4), got {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError(f"{name} has non-finite entries")
    return m


def check_unitary(m, tol=None, name="matrix"):
    """Like :func:`check_matrix`, additionally requiring unitarity within ``tol``.

    Raises:
        NotUnitary: if ``||M^dag M - I||_F > tol``.
    """
    m = check_matrix(m, name)
    tol = get_tol(tol)
    err = np.linalg.norm(m.conj().T @ m - np.eye(4))
    if err > tol:
        raise NotUnitary(f"{name}: ||U^dag U - I||_F = {err:.3e} exceeds tol {tol:.1e}")
    return m


def check_unitary_batch(X, tol=None):
    """Validate a stack of two-qubit unitaries, returning an ``(n, 4, 4)`` array."""
    X = np.asarray(X, dtype=complex)
    if X.ndim == 2:
        X = X[None]
    if X.ndim != 3 or X.shape[1:] != (4, 4):
        raise ValueError(f"expected shape (n_samples, 4, 4), got {X.shape}")
    for i, m in enumerate(X):
        check_unitary(m, tol, name=f"X[{i}]")
    return X


def check_coords(c, name="coords"):
    """Coerce to a finite real array of shape ``(3,)``."""
    c = np.asarray(c, dtype=float)
    if c.shape != (3,) or not np.all(np.isfinite(c)):
        raise ValueError(f"{name} must be three finite reals, got {c!r}")
    return c


def check_coords_batch(C):
    C = np.asarray(C, dtype=float)
    if C.ndim == 1:
        C = C[None]
    if C.ndim != 2 or C.shape[1] != 3 or not np.all(np.isfinite(C)):
        raise ValueError(f"expected finite coordinates of shape (n_samples, 3), got {C.shape}")
    return C
