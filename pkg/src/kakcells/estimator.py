"""scikit-learn style wrapper: unitaries in, canonical coordinates out."""
import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .cells import CellKind
from .kak import kak_decompose
from .su4 import exp_canonical
from .validation import check_coords_batch, check_unitary_batch


class KAKTransformer(TransformerMixin, BaseEstimator):
    """Map two-qubit unitaries to canonical coordinates in a fundamental cell.

    Stateless apart from the validated parameters, so ``fit`` only checks
    its input. ``transform`` accepts an ``(n, 4, 4)`` stack (or a single
    4x4 matrix) and returns ``(n, 3)`` coordinates.

    Args:
        cell: ``"T"`` (local equivalence), ``"P"`` (projective) or ``None``
            for raw coordinates.
        tol: unitarity tolerance; ``None`` defers to the config layer.
    """

    def __init__(self, cell="T", tol=None):
        self.cell = cell
        self.tol = tol

    def _cell(self):
        return None if self.cell is None else CellKind(self.cell)

    def fit(self, X, y=None):
        self._cell()
        if self.tol is not None and not self.tol > 0:
            raise ValueError(f"tol must be positive, got {self.tol!r}")
        X = check_unitary_batch(X, self.tol)
        self.n_features_in_ = 16
        self.n_samples_seen_ = X.shape[0]
        return self

    def decompose(self, X):
        """Full decompositions, one per input matrix."""
        check_is_fitted(self, "n_features_in_")
        X = check_unitary_batch(X, self.tol)
        return [kak_decompose(m, self._cell(), tol=self.tol) for m in X]

    def transform(self, X):
        return np.array([d.coords for d in self.decompose(X)]).reshape(-1, 3)

    def inverse_transform(self, C):
        """Canonical gates ``exp_canonical(c)`` for each row of ``C``."""
        C = check_coords_batch(C)
        return np.array([exp_canonical(c) for c in C])
