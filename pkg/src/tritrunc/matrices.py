"""Dense complex matrix algebra: Schur-Hadamard products, singular values,
Schatten quasinorms, and the structured 0/1 matrices used throughout
(upper-triangular mask, its Hankel companion, all-ones)."""

from __future__ import annotations

import numpy as np

__all__ = [
    "schur_product",
    "singular_values",
    "schatten_quasinorm",
    "chi_matrix",
    "delta_matrix",
    "ones_matrix",
    "triangular_projection",
    "block_diag2",
    "block2x2",
]


def _as_matrix(a, name="matrix"):
    """Coerce to a 2-D ndarray and enforce the type invariants."""
    m = np.asarray(a)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"{name} must be a 2-D array with positive shape, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or (np.iscomplexobj(m) and not np.all(np.isfinite(m.imag))):
        raise ValueError(f"{name} has non-finite entries")
    return m


def _check_p(p):
    p = float(p)
    if not (p > 0) or not np.isfinite(p):
        raise ValueError(f"exponent p must be a finite positive real, got {p}")
    return p


def schur_product(a, b):
    """Entrywise (Schur-Hadamard) product of two equally shaped matrices."""
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch in schur_product: {a.shape} vs {b.shape}")
    return a * b


def singular_values(a):
    """Singular values of ``a``, sorted nonincreasing.

    Backed by LAPACK via numpy; backward stable to ~1e-10 * operator norm at
    the sizes used here.  Non-convergence raises ``numpy.linalg.LinAlgError``
    (it is never silently ignored).
    """
    a = _as_matrix(a)
    return np.linalg.svd(a, compute_uv=False)


def schatten_quasinorm(a, p):
    """Schatten quasinorm (sum of p-th powers of singular values)^(1/p).

    Defined for every p > 0; for p < 1 this is a quasinorm satisfying the
    p-triangle inequality.  The zero matrix returns 0.
    """
    p = _check_p(p)
    s = singular_values(a)
    total = float(np.sum(s**p))
    return total ** (1.0 / p)


def chi_matrix(n):
    """n-by-n upper-triangular all-ones matrix (diagonal included).

    Entry (j, k) is 1 iff j <= k, 0-based.  Schur multiplication by this mask
    is the triangular projection.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return np.triu(np.ones((n, n)))


def delta_matrix(n):
    """n-by-n anti-triangular 0/1 Hankel matrix: entry (j, k) is 1 iff j+k < n.

    This block carries every nonzero entry of the corresponding infinite
    matrix, so all its spectral quantities are exact.  It equals the Hankel
    matrix of the analytic Dirichlet kernel of length n, and it is chi_matrix(n)
    with the rows reversed, so both share one singular spectrum.
    """
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    idx = np.arange(n)
    return (np.add.outer(idx, idx) < n).astype(float)


def ones_matrix(n):
    """n-by-n all-ones matrix: rank one, single singular value n."""
    n = int(n)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return np.ones((n, n))


def triangular_projection(a):
    """Zero out the strictly lower triangle of a square matrix.

    Equals ``schur_product(chi_matrix(n), a)`` and is idempotent.
    """
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"triangular_projection needs a square matrix, got shape {a.shape}")
    return np.triu(a)


def block_diag2(m):
    """Block-diagonal doubling diag(m, m); every singular value repeats twice."""
    m = _as_matrix(m)
    r, c = m.shape
    z = np.zeros_like(m)
    return np.block([[m, z], [z, m]])


def block2x2(a, b, c, d):
    """Assemble [[a, b], [c, d]] from four blocks.

    A scalar argument is promoted to a constant block whose shape is inferred
    from its row and column neighbours, so ``block2x2(x, y, 0, z)`` works.
    """
    blocks = [a, b, c, d]
    mats = [None if np.isscalar(x) else _as_matrix(x, n) for x, n in zip(blocks, "abcd")]

    def _dim(i, j, axis):
        for k in (i, j):
            if mats[k] is not None:
                return mats[k].shape[axis]
        raise ValueError("block2x2: a scalar block has no neighbouring matrix to infer its shape from")

    shapes = [
        (_dim(0, 1, 0), _dim(0, 2, 1)),  # a: rows like b, cols like c
        (_dim(1, 0, 0), _dim(1, 3, 1)),  # b
        (_dim(2, 3, 0), _dim(2, 0, 1)),  # c
        (_dim(3, 2, 0), _dim(3, 1, 1)),  # d
    ]
    full = [
        m if m is not None else np.full(shape, x, dtype=float)
        for m, shape, x in zip(mats, shapes, blocks)
    ]
    a, b, c, d = full
    if a.shape[0] != b.shape[0] or c.shape[0] != d.shape[0]:
        raise ValueError(f"block2x2 row mismatch: {a.shape} {b.shape} / {c.shape} {d.shape}")
    if a.shape[1] != c.shape[1] or b.shape[1] != d.shape[1]:
        raise ValueError(f"block2x2 column mismatch: {a.shape} {b.shape} / {c.shape} {d.shape}")
    return np.block([[a, b], [c, d]])
