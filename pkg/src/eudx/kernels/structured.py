"""Inversion and elimination of the structured matrices used in windowed
optimization: a large diagonal block coupled to a small dense block.
"""

from dataclasses import dataclass, field

import numpy as np

from ..errors import DimMismatch, SingularDiagonal, SingularSchur
from .ops import _as_matrix, mat_mul, transpose

DIAG_EPS = 1e-12


@dataclass
class BlockStructuredMatrix:
    """Symmetric matrix ``[[diag(a), B], [B.T, D]]``.

    ``diag`` holds the diagonal entries of the large block (one scalar
    per eliminated feature); ``D`` is the small dense block (6x6 for one
    pose).  Either block may be empty.
    """

    diag: np.ndarray
    off_diag: np.ndarray = None     # (n, d)
    dense: np.ndarray = None        # (d, d)

    def __post_init__(self):
        self.diag = np.asarray(self.diag, dtype=np.float64).reshape(-1)
        n = self.diag.size
        if self.dense is None:
            self.dense = np.zeros((0, 0))
        self.dense = np.asarray(self.dense, dtype=np.float64)
        d = self.dense.shape[0]
        if self.dense.shape != (d, d):
            raise DimMismatch("dense block must be square")
        if self.off_diag is None:
            self.off_diag = np.zeros((n, d))
        self.off_diag = np.asarray(self.off_diag, dtype=np.float64).reshape(n, d)

    @property
    def order(self):
        return self.diag.size + self.dense.shape[0]

    def as_dense(self):
        n = self.diag.size
        d = self.dense.shape[0]
        M = np.zeros((n + d, n + d))
        M[:n, :n] = np.diag(self.diag)
        M[:n, n:] = self.off_diag
        M[n:, :n] = self.off_diag.T
        M[n:, n:] = self.dense
        return M


def _small_inverse(S, counter=None):
    """Gauss-Jordan with partial pivoting for the small dense block."""
    d = S.shape[0]
    A = np.hstack([S.astype(np.float64, copy=True), np.eye(d)])
    for col in range(d):
        piv = col + int(np.argmax(np.abs(A[col:, col])))
        if np.abs(A[piv, col]) < DIAG_EPS:
            raise SingularSchur(f"pivot ~ 0 at column {col}")
        if piv != col:
            A[[col, piv]] = A[[piv, col]]
        A[col] /= A[col, col]
        for r in range(d):
            if r != col:
                A[r] -= A[r, col] * A[col]
    if counter is not None:
        counter.add("inverse", 2 * d ** 3)
    return A[:, d:]


def invert_block_structured(m: BlockStructuredMatrix, policy=None, counter=None):
    """Full inverse assembled from reciprocals of the diagonal block and
    the inverse of the small Schur complement ``D - B^T diag(a)^-1 B``.
    """
    n = m.diag.size
    d = m.dense.shape[0]
    if np.any(np.abs(m.diag) <= DIAG_EPS):
        raise SingularDiagonal("diagonal block has a (near) zero entry")
    inv_a = 1.0 / m.diag
    if counter is not None:
        counter.add("inverse", n)
        counter.count_input(m.diag, m.off_diag, m.dense)

    if d == 0:
        out = np.diag(inv_a)
        if counter is not None:
            counter.count_output(out)
        return out

    E = m.off_diag * inv_a[:, None]                      # diag(a)^-1 B
    schur = m.dense - mat_mul(transpose(m.off_diag, counter), E, policy, counter)
    schur_inv = _small_inverse(schur, counter)

    out = np.zeros((n + d, n + d))
    ES = mat_mul(E, schur_inv, policy, counter)          # (n, d)
    out[:n, :n] = np.diag(inv_a) + mat_mul(ES, transpose(E, counter), policy, counter)
    out[:n, n:] = -ES
    out[n:, :n] = -ES.T
    out[n:, n:] = schur_inv
    if counter is not None:
        counter.count_output(out)
    return out


def marginalize(A_mm: BlockStructuredMatrix, A_mr, A_rr, b_m, b_r,
                policy=None, counter=None):
    """Eliminate the ``m`` variables from a joint normal-equation system.

    Returns the reduced system ``(A_rr - A_mr^T A_mm^-1 A_mr,
    b_r - A_mr^T A_mm^-1 b_m)`` over the remaining variables.
    """
    A_mr = _as_matrix(A_mr, "A_mr")
    A_rr = _as_matrix(A_rr, "A_rr")
    b_m = np.asarray(b_m, dtype=np.float64).reshape(-1)
    b_r = np.asarray(b_r, dtype=np.float64).reshape(-1)
    nm = A_mm.order
    if A_mr.shape[0] != nm:
        raise DimMismatch(f"A_mr rows {A_mr.shape[0]} != marginal order {nm}")
    nr = A_rr.shape[0]
    if A_rr.shape != (nr, nr) or A_mr.shape[1] != nr:
        raise DimMismatch("remaining-block shapes inconsistent")
    if b_m.size != nm or b_r.size != nr:
        raise DimMismatch("vector lengths inconsistent")

    Minv = invert_block_structured(A_mm, policy, counter)
    T = mat_mul(Minv, A_mr, policy, counter)
    A_mr_t = transpose(A_mr, counter)
    reduced = A_rr - mat_mul(A_mr_t, T, policy, counter)
    rhs = b_r - mat_mul(A_mr_t, mat_mul(Minv, b_m.reshape(-1, 1), policy, counter),
                        policy, counter).reshape(-1)
    if counter is not None:
        counter.count_output(reduced)
    return reduced, rhs
