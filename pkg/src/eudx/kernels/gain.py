"""Kalman gain via symmetric innovation construction and triangular solves."""

from dataclasses import dataclass

import numpy as np

from ..errors import DimMismatch
from .ops import (_as_matrix, backward_substitute, cholesky,
                  forward_substitute, mat_mul, transpose)


@dataclass
class KalmanGain:
    """Solution of the gain system.

    ``k_eq`` (h x n) is the literal unknown of ``S @ k_eq = H @ P``; the
    conventional gain ``P @ H.T @ inv(S)`` is its transpose, exposed as
    ``gain``.  ``residual`` is the relative residual of the solved system
    when requested.
    """

    k_eq: np.ndarray
    S: np.ndarray
    residual: float = None

    @property
    def gain(self):
        return self.k_eq.T.copy()


def kalman_gain(H, P, R, policy=None, counter=None, compute_residual=False):
    """Compute the gain for innovation covariance ``S = H P H^T + R``.

    ``S`` is inherently symmetric: only its lower triangle is formed (the
    cross term ``P @ H.T`` is shared with the right-hand side of the gain
    system, so the extra cost of ``S`` is roughly half of a full
    ``H P H^T``).  The system is solved by Cholesky decomposition followed
    by forward/backward substitution.
    """
    H = _as_matrix(H, "H")
    P = _as_matrix(P, "P")
    R = _as_matrix(R, "R")
    h, n = H.shape
    if P.shape != (n, n):
        raise DimMismatch(f"P must be {n}x{n}, got {P.shape}")
    if R.shape != (h, h):
        raise DimMismatch(f"R must be {h}x{h}, got {R.shape}")

    PHt = mat_mul(P, transpose(H, counter), policy, counter)  # (n, h)

    # lower triangle only, mirrored afterwards: symmetric by construction
    S = np.zeros((h, h))
    s_flops = 0
    for i in range(h):
        S[i, :i + 1] = H[i] @ PHt[:, :i + 1] + R[i, :i + 1]
        s_flops += (2 * n - 1) * (i + 1) + (i + 1)
    for i in range(h):
        S[i, i + 1:] = S[i + 1:, i]
    if counter is not None:
        counter.add("multiply", s_flops)
        counter.tag("innovation_matrix", s_flops)

    L = cholesky(S, counter)
    rhs = PHt.T.copy()  # equals H @ P for symmetric P
    Y = forward_substitute(L, rhs, counter)
    k_eq = backward_substitute(L.T, Y, counter)

    residual = None
    if compute_residual:
        norm = np.linalg.norm(rhs)
        residual = 0.0 if norm == 0.0 else float(np.linalg.norm(S @ k_eq - rhs) / norm)
    if counter is not None:
        counter.count_output(k_eq)
    return KalmanGain(k_eq=k_eq, S=S, residual=residual)
