"""Pinhole stereo camera model."""

from dataclasses import dataclass

import numpy as np

from ..errors import BehindCamera, InvalidParams
from .pose import Pose6DoF, compose

MIN_DEPTH = 1e-12


@dataclass(frozen=True)
class CameraModel:
    """Rectified pinhole stereo rig.

    ``baseline`` is the distance from the left to the right camera along
    the camera x axis; both cameras share intrinsics and orientation.
    """

    fx: float
    fy: float
    cx: float
    cy: float
    baseline: float
    width: int
    height: int

    def __post_init__(self):
        if self.fx <= 0 or self.fy <= 0:
            raise InvalidParams("focal lengths must be positive")
        if self.baseline <= 0:
            raise InvalidParams("baseline must be positive")
        if self.width <= 0 or self.height <= 0:
            raise InvalidParams("image dimensions must be positive")

    def intrinsic_matrix(self):
        return np.array([
            [self.fx, 0.0, self.cx],
            [0.0, self.fy, self.cy],
            [0.0, 0.0, 1.0],
        ])

    def right_pose(self, left_pose: Pose6DoF) -> Pose6DoF:
        """Pose of the right camera given the left camera pose."""
        return compose(left_pose, Pose6DoF([self.baseline, 0.0, 0.0]))

    def projection_matrix(self, cam_pose: Pose6DoF):
        """3x4 matrix mapping world homogeneous points to pixel rays.

        Built as intrinsics times the world-to-camera transform of
        ``cam_pose`` (which is camera-to-world).
        """
        w2c = cam_pose.inverse()
        Rt = np.hstack([w2c.rotation_matrix(), w2c.translation.reshape(3, 1)])
        return self.intrinsic_matrix() @ Rt

    def contains(self, pixel, margin=0.0):
        u, v = pixel
        return (margin <= u <= self.width - 1 - margin
                and margin <= v <= self.height - 1 - margin)


def project(cam: CameraModel, cam_pose: Pose6DoF, point):
    """Project a world point through a camera at ``cam_pose`` (camera-to-world).

    Raises BehindCamera when the camera-frame depth is not positive.
    """
    pc = cam_pose.inverse().apply(np.asarray(point, dtype=np.float64))
    if pc[2] <= MIN_DEPTH:
        raise BehindCamera(f"depth {pc[2]:.3g} <= 0")
    return np.array([cam.fx * pc[0] / pc[2] + cam.cx,
                     cam.fy * pc[1] / pc[2] + cam.cy])


def unproject(cam: CameraModel, cam_pose: Pose6DoF, pixel, depth):
    """Back-project a pixel at a known camera-frame depth to a world point."""
    if depth <= 0:
        raise BehindCamera("depth must be positive")
    u, v = pixel
    pc = np.array([(u - cam.cx) / cam.fx * depth,
                   (v - cam.cy) / cam.fy * depth,
                   depth])
    return cam_pose.apply(pc)
