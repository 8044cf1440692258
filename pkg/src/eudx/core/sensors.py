"""Sensor sample types and trajectory container with file I/O."""

from dataclasses import dataclass

import numpy as np

from ..errors import InvalidParams, NonMonotonicTimestamps
from .pose import Pose6DoF


@dataclass(frozen=True)
class ImuSample:
    """One inertial sample.

    ``accel`` is gravity-compensated linear acceleration in the body
    frame; ``gyro`` is body-frame angular velocity.
    """

    timestamp: float
    gyro: np.ndarray
    accel: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "gyro", np.asarray(self.gyro, dtype=np.float64).reshape(3))
        object.__setattr__(self, "accel", np.asarray(self.accel, dtype=np.float64).reshape(3))


@dataclass(frozen=True)
class GpsSample:
    """Position fix in the local metric (ENU-style) frame, quality in [0, 1]."""

    timestamp: float
    position: np.ndarray
    quality: float

    def __post_init__(self):
        object.__setattr__(self, "position", np.asarray(self.position, dtype=np.float64).reshape(3))
        if not 0.0 <= self.quality <= 1.0:
            raise InvalidParams(f"gps quality {self.quality} outside [0, 1]")


def check_monotonic(timestamps):
    ts = np.asarray(timestamps, dtype=np.float64)
    if ts.size >= 2 and np.any(np.diff(ts) <= 0):
        raise NonMonotonicTimestamps("timestamps must be strictly increasing")


class Trajectory:
    """Ordered (timestamp, pose) sequence with strictly increasing times."""

    def __init__(self, timestamps=(), poses=()):
        self.timestamps = [float(t) for t in timestamps]
        self.poses = list(poses)
        if len(self.timestamps) != len(self.poses):
            raise InvalidParams("timestamp/pose count mismatch")
        check_monotonic(self.timestamps)

    def append(self, timestamp, pose: Pose6DoF):
        if self.timestamps and timestamp <= self.timestamps[-1]:
            raise NonMonotonicTimestamps(
                f"timestamp {timestamp} not after {self.timestamps[-1]}")
        self.timestamps.append(float(timestamp))
        self.poses.append(pose)

    def __len__(self):
        return len(self.poses)

    def __iter__(self):
        return iter(zip(self.timestamps, self.poses))

    def positions(self):
        return np.array([p.translation for p in self.poses]).reshape(-1, 3)

    def path_length(self):
        pos = self.positions()
        if len(pos) < 2:
            return 0.0
        return float(np.sum(np.linalg.norm(np.diff(pos, axis=0), axis=1)))

    def frame_period(self):
        if len(self.timestamps) < 2:
            return 0.0
        return float(np.median(np.diff(self.timestamps)))

    def save(self, path):
        """One line per pose: ``timestamp tx ty tz qx qy qz qw``."""
        with open(path, "w") as f:
            f.write(self.to_text())

    def to_text(self):
        lines = []
        for t, p in self:
            tx, ty, tz = p.translation
            qw, qx, qy, qz = p.quaternion
            vals = [t, tx, ty, tz, qx, qy, qz, qw]
            lines.append(" ".join(f"{v:.9g}" for v in vals))
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def load(cls, path):
        traj = cls()
        with open(path) as f:
            for line in f:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                vals = [float(x) for x in line.split()]
                if len(vals) != 8:
                    raise InvalidParams(f"bad trajectory line: {line!r}")
                t, tx, ty, tz, qx, qy, qz, qw = vals
                traj.append(t, Pose6DoF([tx, ty, tz], [qw, qx, qy, qz]))
        return traj
