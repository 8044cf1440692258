"""Segment-test corner detection (16-pixel circle, arc length 9)."""

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParams

# Bresenham circle of radius 3 in ring order, (dx, dy)
CIRCLE = [(0, -3), (1, -3), (2, -2), (3, -1), (3, 0), (3, 1), (2, 2), (1, 3),
          (0, 3), (-1, 3), (-2, 2), (-3, 1), (-3, 0), (-3, -1), (-2, -2), (-1, -3)]
ARC = 9
BORDER = 3


@dataclass
class FeaturePoint:
    position: np.ndarray    # (x, y), sub-pixel capable
    score: float

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=np.float64).reshape(2)

    @property
    def x(self):
        return self.position[0]

    @property
    def y(self):
        return self.position[1]


def _longest_circular_run(mask):
    """Length and members of the longest run of True on a ring of 16."""
    if mask.all():
        return 16, np.arange(16)
    doubled = np.concatenate([mask, mask])
    best_len, best_start, run = 0, 0, 0
    for i in range(32):
        if doubled[i]:
            run += 1
            if run > best_len:
                best_len = run
                best_start = i - run + 1
        else:
            run = 0
    best_len = min(best_len, 16)
    idx = np.arange(best_start, best_start + best_len) % 16
    return best_len, idx


def detect_fast(img, threshold):
    """Corners where >= 9 contiguous circle pixels are all brighter or all
    darker than the center by the threshold.  Score is the sum of absolute
    differences over that arc; a 3x3 non-max suppression keeps local peaks.
    """
    if threshold <= 0:
        raise InvalidParams("threshold must be positive")
    img = np.asarray(img)
    h, w = img.shape
    if h < 7 or w < 7:
        raise InvalidParams("image must be at least 7x7")

    base = img.astype(np.int32)
    center = base[BORDER:h - BORDER, BORDER:w - BORDER]
    ring = np.empty((16,) + center.shape, dtype=np.int32)
    for k, (dx, dy) in enumerate(CIRCLE):
        ring[k] = base[BORDER + dy:h - BORDER + dy, BORDER + dx:w - BORDER + dx]

    bright = ring > (center + threshold)
    dark = ring < (center - threshold)

    def has_arc(masks):
        doubled = np.concatenate([masks, masks[:ARC - 1]], axis=0)
        hit = np.zeros(center.shape, dtype=bool)
        for s in range(16):
            hit |= doubled[s:s + ARC].all(axis=0)
        return hit

    candidates = has_arc(bright) | has_arc(dark)
    ys, xs = np.nonzero(candidates)

    scores = np.zeros((h, w), dtype=np.int64)
    for y, x in zip(ys, xs):
        c = int(center[y, x])
        ring_vals = ring[:, y, x]
        score = 0
        for mask in (ring_vals > c + threshold, ring_vals < c - threshold):
            run, members = _longest_circular_run(mask)
            if run >= ARC:
                score = int(np.sum(np.abs(ring_vals[members] - c)))
                break
        scores[y + BORDER, x + BORDER] = score

    points = []
    for y, x in zip(ys + BORDER, xs + BORDER):
        s = scores[y, x]
        if s == 0:
            continue
        patch = scores[y - 1:y + 2, x - 1:x + 2]
        if s > np.max(patch[patch != s].reshape(-1), initial=0) and \
                np.count_nonzero(patch == s) == 1:
            points.append(FeaturePoint([float(x), float(y)], float(s)))
    return points
