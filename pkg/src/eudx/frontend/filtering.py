"""Stencil image filtering."""

import numpy as np

from ..errors import BadKernel


def gaussian_kernel(size=5, sigma=1.0):
    if size < 3 or size % 2 == 0:
        raise BadKernel("kernel side must be odd and >= 3")
    r = size // 2
    y, x = np.mgrid[-r:r + 1, -r:r + 1]
    k = np.exp(-(x * x + y * y) / (2.0 * sigma * sigma))
    return k / k.sum()


def gaussian_filter(img, kernel):
    """Convolve with an odd square stencil, edges replicated.

    The kernel is normalized to sum one before use, so flat regions pass
    through unchanged up to rounding.
    """
    kernel = np.asarray(kernel, dtype=np.float64)
    if kernel.ndim != 2 or kernel.shape[0] != kernel.shape[1]:
        raise BadKernel(f"kernel must be square, got {kernel.shape}")
    size = kernel.shape[0]
    if size < 3 or size % 2 == 0:
        raise BadKernel("kernel side must be odd and >= 3")
    total = kernel.sum()
    if abs(total) < 1e-12:
        raise BadKernel("kernel sum too close to zero to normalize")
    kernel = kernel / total

    img = np.asarray(img)
    r = size // 2
    padded = np.pad(img.astype(np.float64), r, mode="edge")
    windows = np.lib.stride_tricks.sliding_window_view(padded, (size, size))
    out = np.einsum("ijkl,kl->ij", windows, kernel)
    if img.dtype == np.uint8:
        return np.clip(np.floor(out + 0.5), 0, 255).astype(np.uint8)
    return out
