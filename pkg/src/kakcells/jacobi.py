"""Cyclic Jacobi eigensolver for small real symmetric matrices.

Used by the KAK engine on 4x4 inputs, where a handful of plane rotations
reach machine precision and the resulting eigenvector matrix is
orthogonal to round-off regardless of eigenvalue clustering.
"""
import math

import numpy as np

MAX_SWEEPS = 30


def jacobi_eigh(a, max_sweeps=MAX_SWEEPS):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi sweeps.

    Args:
        a: Real symmetric ``(n, n)`` array. Only the upper triangle is
            trusted; the matrix is symmetrized before iterating.
        max_sweeps: Upper bound on full sweeps over the off-diagonal.

    Returns:
        ``(w, v)`` with eigenvalues ``w`` in ascending order and ``v`` the
        orthogonal matrix whose columns are the matching eigenvectors, so
        that ``a @ v ~= v * w``.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    a = 0.5 * (a + a.T)
    v = np.eye(n)
    scale = max(np.abs(a).max(), np.finfo(float).tiny)
    threshold = (np.finfo(float).eps * scale) ** 2
    for _ in range(max_sweeps):
        off = np.sum(np.triu(a, 1) ** 2)
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= np.finfo(float).tiny:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # a <- J^T a J with J the (p, q) rotation
                ap = a[:, p].copy()
                aq = a[:, q]
                a[:, p] = c * ap - s * aq
                a[:, q] = s * ap + c * aq
                ap = a[p, :].copy()
                aq = a[q, :]
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[p, q] = a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def _clusters(w, gap):
    groups = [[0]]
    for i in range(1, len(w)):
        if w[i] - w[i - 1] < gap:
            groups[-1].append(i)
        else:
            groups.append([i])
    return groups


def simultaneous_diagonalize(a, b, gap=1e-7):
    """Real orthogonal ``o`` diagonalizing two commuting symmetric matrices.

    ``a`` is diagonalized first; inside every cluster of ``a``-eigenvalues
    closer than ``gap`` the projection of ``b`` breaks the tie.

    Returns:
        ``(o, clusters)`` where ``clusters`` lists the index groups that
        stayed degenerate in ``a`` (useful to callers that need to retry).
    """
    w, o = jacobi_eigh(a)
    groups = _clusters(w, gap)
    for idx in groups:
        if len(idx) == 1:
            continue
        block = o[:, idx]
        _, r = jacobi_eigh(block.T @ b @ block)
        o[:, idx] = block @ r
    return o, [g for g in groups if len(g) > 1]
