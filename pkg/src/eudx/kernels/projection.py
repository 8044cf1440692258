"""Batch camera projection of homogeneous points."""

import numpy as np

from ..errors import DegenerateHomogeneous, DimMismatch
from .ops import _as_matrix, mat_mul

W_EPS = 1e-12


def project_map(C, X, policy=None, counter=None):
    """Project homogeneous world points through a 3x4 camera matrix.

    ``X`` holds one 4-vector per column; the result holds one pixel per
    column after the perspective divide.
    """
    C = _as_matrix(C, "C")
    X = _as_matrix(X, "X")
    if C.shape != (3, 4):
        raise DimMismatch(f"camera matrix must be 3x4, got {C.shape}")
    if X.shape[0] != 4:
        raise DimMismatch(f"points must have 4 rows, got {X.shape}")
    Y = mat_mul(C, X, policy, counter)
    w = Y[2]
    if np.any(np.abs(w) < W_EPS):
        bad = int(np.argmin(np.abs(w)))
        raise DegenerateHomogeneous(f"w ~ 0 at column {bad}")
    out = Y[:2] / w
    if counter is not None:
        counter.add("multiply", 2 * X.shape[1])  # the divides
        counter.count_output(out)
    return out
