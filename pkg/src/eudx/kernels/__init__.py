from .counter import OpCounter
from .ops import (BlockingPolicy, backward_substitute, cholesky,
                  forward_substitute, mat_mul, transpose)
from .gain import KalmanGain, kalman_gain
from .projection import project_map
from .structured import (BlockStructuredMatrix, invert_block_structured,
                         marginalize)
from .io import load_matrix_csv, save_matrix_csv

__all__ = [
    "OpCounter",
    "BlockingPolicy",
    "mat_mul",
    "transpose",
    "cholesky",
    "forward_substitute",
    "backward_substitute",
    "KalmanGain",
    "kalman_gain",
    "project_map",
    "BlockStructuredMatrix",
    "invert_block_structured",
    "marginalize",
    "load_matrix_csv",
    "save_matrix_csv",
]
