"""Tolerance defaults.

The process-wide default can be overridden with the ``KAK_TOL``
environment variable; every public function also takes an explicit
``tol`` argument which wins over both.
"""
import os

DEFAULT_TOL = 1e-9

# Coordinates this close to a boundary value are snapped onto it.
SNAP_TOL = 1e-11


def get_tol(tol=None):
    """Resolve a tolerance: explicit argument, then ``KAK_TOL``, then default."""
    if tol is not None:
        return float(tol)
    env = os.environ.get("KAK_TOL")
    if env:
        try:
            value = float(env)
        except ValueError:
            raise ValueError(f"KAK_TOL must be a float, got {env!r}") from None
        if not value > 0:
            raise ValueError(f"KAK_TOL must be positive, got {env!r}")
        return value
    return DEFAULT_TOL
