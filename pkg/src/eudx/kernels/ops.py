"""The five shared matrix building blocks.

Matrices are dense row-major float64 numpy arrays.  Operations that sweep
the operands accept a ``BlockingPolicy``; results are independent of the
block size up to float round-off, which mirrors how a fixed-size compute
tile can serve arbitrary problem sizes.
"""

from dataclasses import dataclass

import numpy as np

from ..errors import DimMismatch, NotPositiveDefinite, SingularTriangular

PIVOT_EPS = 1e-12


@dataclass(frozen=True)
class BlockingPolicy:
    """Tile side length for blocked sweeps; ``None`` processes in one pass."""

    block: int = None

    def __post_init__(self):
        if self.block is not None and self.block < 1:
            raise DimMismatch("block side must be >= 1")


FULL = BlockingPolicy(None)


def _as_matrix(a, name):
    a = np.asarray(a, dtype=np.float64)
    if a.ndim == 1:
        a = a.reshape(-1, 1)
    if a.ndim != 2:
        raise DimMismatch(f"{name} must be 2-D, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DimMismatch(f"{name} contains non-finite entries")
    return a


def mat_mul(a, b, policy=None, counter=None):
    """Product ``a @ b``, swept tile by tile under the blocking policy."""
    a = _as_matrix(a, "a")
    b = _as_matrix(b, "b")
    if a.shape[1] != b.shape[0]:
        raise DimMismatch(f"inner dims differ: {a.shape} x {b.shape}")
    m, k = a.shape
    n = b.shape[1]
    if counter is not None:
        counter.count_input(a, b)
        counter.add("multiply", 2 * m * k * n)

    bs = policy.block if policy is not None else None
    if bs is None or bs >= max(m, k, n):
        out = a @ b
    else:
        out = np.zeros((m, n))
        for i0 in range(0, m, bs):
            i1 = min(i0 + bs, m)
            for j0 in range(0, n, bs):
                j1 = min(j0 + bs, n)
                acc = np.zeros((i1 - i0, j1 - j0))
                for p0 in range(0, k, bs):
                    p1 = min(p0 + bs, k)
                    acc += a[i0:i1, p0:p1] @ b[p0:p1, j0:j1]
                out[i0:i1, j0:j1] = acc
    if counter is not None:
        counter.count_output(out)
    return out


def transpose(a, counter=None):
    a = _as_matrix(a, "a")
    out = a.T.copy()
    if counter is not None:
        counter.count_input(a)
        counter.count_output(out)
        counter.add("transpose", a.size)
    return out


def cholesky(a, counter=None):
    """Lower-triangular L with L @ L.T == a, for symmetric PD input."""
    a = _as_matrix(a, "a")
    n, m = a.shape
    if n != m:
        raise DimMismatch("cholesky needs a square matrix")
    scale = max(1.0, float(np.max(np.abs(a))))
    if np.max(np.abs(a - a.T)) > 1e-9 * scale:
        raise DimMismatch("cholesky needs a symmetric matrix")
    L = np.zeros_like(a)
    for j in range(n):
        pivot = a[j, j] - L[j, :j] @ L[j, :j]
        if pivot <= PIVOT_EPS:
            raise NotPositiveDefinite(f"pivot {pivot:.3g} at column {j}")
        L[j, j] = np.sqrt(pivot)
        if j + 1 < n:
            L[j + 1:, j] = (a[j + 1:, j] - L[j + 1:, :j] @ L[j, :j]) / L[j, j]
    if counter is not None:
        counter.count_input(a)
        counter.count_output(L)
        counter.add("decompose", n ** 3 // 3 + n * n)
    return L


def _check_triangular_diag(t):
    d = np.abs(np.diag(t))
    if np.any(d <= PIVOT_EPS):
        raise SingularTriangular("zero diagonal entry in triangular solve")


def forward_substitute(L, B, counter=None):
    """Solve L @ X = B for lower-triangular L."""
    L = _as_matrix(L, "L")
    B = _as_matrix(B, "B")
    n = L.shape[0]
    if L.shape[1] != n or B.shape[0] != n:
        raise DimMismatch("forward solve shape mismatch")
    _check_triangular_diag(L)
    X = np.zeros_like(B)
    for i in range(n):
        X[i] = (B[i] - L[i, :i] @ X[:i]) / L[i, i]
    if counter is not None:
        counter.count_input(L, B)
        counter.count_output(X)
        counter.add("substitute", n * n * B.shape[1])
    return X


def backward_substitute(U, B, counter=None):
    """Solve U @ X = B for upper-triangular U."""
    U = _as_matrix(U, "U")
    B = _as_matrix(B, "B")
    n = U.shape[0]
    if U.shape[1] != n or B.shape[0] != n:
        raise DimMismatch("backward solve shape mismatch")
    _check_triangular_diag(U)
    X = np.zeros_like(B)
    for i in range(n - 1, -1, -1):
        X[i] = (B[i] - U[i, i + 1:] @ X[i + 1:]) / U[i, i]
    if counter is not None:
        counter.count_input(U, B)
        counter.count_output(X)
        counter.add("substitute", n * n * B.shape[1])
    return X
