from .filtering import gaussian_filter, gaussian_kernel
from .fast import FeaturePoint, detect_fast
from .orb import OrbDescriptor, compute_orb, hamming, hamming_matrix, load_pattern
from .stereo import SpatialMatch, stereo_match
from .lk import TemporalMatch, lk_flow
from .pipeline import (FrontendConfig, FrontendOutput, FrontendState,
                       run_frontend)

__all__ = [
    "gaussian_filter",
    "gaussian_kernel",
    "FeaturePoint",
    "detect_fast",
    "OrbDescriptor",
    "compute_orb",
    "hamming",
    "hamming_matrix",
    "load_pattern",
    "SpatialMatch",
    "stereo_match",
    "TemporalMatch",
    "lk_flow",
    "FrontendConfig",
    "FrontendOutput",
    "FrontendState",
    "run_frontend",
]
