"""Trajectory and latency-variation metrics."""

import numpy as np

from ..errors import DegenerateInput, EmptyOverlap
from .sensors import Trajectory


def ate_rmse(estimate: Trajectory, truth: Trajectory) -> float:
    """Root-mean-square translational error after timestamp association.

    Estimate poses are matched to their nearest ground-truth timestamp;
    pairs further apart than half the ground-truth frame period are
    discarded.  No spatial alignment is applied: both trajectories are
    expected to share an origin.
    """
    if len(estimate) == 0 or len(truth) == 0:
        raise EmptyOverlap("empty trajectory")
    max_dt = 0.5 * truth.frame_period() if len(truth) > 1 else np.inf
    t_truth = np.asarray(truth.timestamps)
    pos_truth = truth.positions()
    pos_est = estimate.positions()

    sq = []
    for t, p in zip(estimate.timestamps, pos_est):
        i = int(np.argmin(np.abs(t_truth - t)))
        if abs(t_truth[i] - t) > max_dt + 1e-12:
            continue
        d = p - pos_truth[i]
        sq.append(float(d @ d))
    if not sq:
        raise EmptyOverlap("no timestamp pairs within half a frame period")
    return float(np.sqrt(np.mean(sq)))


def rsd(samples) -> float:
    """Relative standard deviation: population std divided by the mean."""
    x = np.asarray(samples, dtype=np.float64)
    if x.size < 2:
        raise DegenerateInput("need at least two samples")
    mean = float(np.mean(x))
    if mean == 0.0:
        raise DegenerateInput("mean is zero")
    return float(np.std(x) / mean)
