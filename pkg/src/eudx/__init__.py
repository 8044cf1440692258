"""Adaptive stereo visual-inertial localization toolkit.

One shared vision frontend feeds three switchable estimation backends
(sliding-window Kalman filtering with GPS fusion, windowed bundle
adjustment with marginalization, and map registration), all built on a
common bank of dense matrix kernels.  Companion tools model when those
kernels are worth offloading to an accelerator and how large the
line/stencil buffers of a streaming frontend must be.
"""

__version__ = "0.1.0"
