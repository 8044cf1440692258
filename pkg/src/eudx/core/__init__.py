from .pose import Pose6DoF, compose
from .camera import CameraModel, project, unproject
from .sensors import ImuSample, GpsSample, Trajectory
from .metrics import ate_rmse, rsd
from .synthetic import SceneParams, SyntheticScene, generate_scene

__all__ = [
    "Pose6DoF",
    "compose",
    "CameraModel",
    "project",
    "unproject",
    "ImuSample",
    "GpsSample",
    "Trajectory",
    "ate_rmse",
    "rsd",
    "SceneParams",
    "SyntheticScene",
    "generate_scene",
]
