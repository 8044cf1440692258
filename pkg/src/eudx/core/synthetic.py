"""Synthetic corridor scenes with exact geometry for testing and benchmarks.

The camera flies down a corridor whose walls carry point landmarks.  The
trajectory is analytic (sums of sinusoids), so positions, velocities,
accelerations and body angular rates are available in closed form at any
time; emitted pixel observations reproject exactly when noise is zero.
"""

from dataclasses import dataclass, field, replace

import numpy as np

from ..errors import InvalidParams
from . import rotation as rot
from .camera import CameraModel, project
from .pose import Pose6DoF
from .sensors import GpsSample, ImuSample, Trajectory

_EDGE_MARGIN = 21.0  # keep observations clear of descriptor borders


@dataclass(frozen=True)
class SceneParams:
    n_landmarks: int = 400
    n_frames: int = 100
    frame_rate: float = 20.0
    imu_rate: float = 200.0
    camera: CameraModel = field(default_factory=lambda: CameraModel(
        fx=380.0, fy=380.0, cx=256.0, cy=192.0,
        baseline=0.2, width=512, height=384))
    # corridor geometry (camera z axis points down the corridor)
    wall_x: float = 3.5
    wall_y: float = 2.2
    speed: float = 0.9
    sway_x: float = 0.4
    sway_y: float = 0.25
    pan_amp: float = 0.10
    tilt_amp: float = 0.05
    roll_amp: float = 0.04
    min_depth: float = 1.5
    max_depth: float = 30.0
    # noise
    pixel_noise: float = 0.0
    gyro_noise: float = 0.0          # rad/s per sample
    accel_noise: float = 0.0         # m/s^2 per sample
    gyro_bias_scale: float = 0.0     # rad/s, magnitude of a constant bias
    accel_bias_scale: float = 0.0    # m/s^2
    # gps
    gps_enabled: bool = False
    gps_rate: float = 10.0
    gps_noise: float = 0.05
    gps_quality: float = 0.9

    def duration(self):
        return (self.n_frames - 1) / self.frame_rate


class CorridorPath:
    """Closed-form trajectory used by the scene generator."""

    def __init__(self, params: SceneParams):
        self.p = params
        # fixed phases keep the path asymmetric but deterministic
        self._phase = np.array([0.9, 2.1, 0.4, 1.3, 0.7])
        self._freq = np.array([0.5, 0.7, 0.45, 0.6, 0.35])

    def position(self, t):
        p = self.p
        return np.array([
            p.sway_x * np.sin(self._freq[0] * t + self._phase[0]),
            p.sway_y * np.sin(self._freq[1] * t + self._phase[1]),
            p.speed * t,
        ])

    def velocity(self, t):
        p = self.p
        return np.array([
            p.sway_x * self._freq[0] * np.cos(self._freq[0] * t + self._phase[0]),
            p.sway_y * self._freq[1] * np.cos(self._freq[1] * t + self._phase[1]),
            p.speed,
        ])

    def acceleration(self, t):
        p = self.p
        return np.array([
            -p.sway_x * self._freq[0] ** 2 * np.sin(self._freq[0] * t + self._phase[0]),
            -p.sway_y * self._freq[1] ** 2 * np.sin(self._freq[1] * t + self._phase[1]),
            0.0,
        ])

    def _angles(self, t):
        p = self.p
        a = p.roll_amp * np.sin(self._freq[2] * t + self._phase[2])   # about z
        b = p.pan_amp * np.sin(self._freq[3] * t + self._phase[3])    # about y
        c = p.tilt_amp * np.sin(self._freq[4] * t + self._phase[4])   # about x
        return a, b, c

    def _angle_rates(self, t):
        p = self.p
        da = p.roll_amp * self._freq[2] * np.cos(self._freq[2] * t + self._phase[2])
        db = p.pan_amp * self._freq[3] * np.cos(self._freq[3] * t + self._phase[3])
        dc = p.tilt_amp * self._freq[4] * np.cos(self._freq[4] * t + self._phase[4])
        return da, db, dc

    def quaternion(self, t):
        a, b, c = self._angles(t)
        return rot.quat_from_euler_zyx(a, b, c)

    def omega_body(self, t):
        """Exact body-frame angular velocity of the ZYX Euler trajectory."""
        a, b, c = self._angles(t)
        da, db, dc = self._angle_rates(t)
        Rx = rot.quat_to_matrix(rot.quat_from_axis_angle([1, 0, 0], c))
        Ry = rot.quat_to_matrix(rot.quat_from_axis_angle([0, 1, 0], b))
        return (Rx.T @ Ry.T @ np.array([0.0, 0.0, da])
                + Rx.T @ np.array([0.0, db, 0.0])
                + np.array([dc, 0.0, 0.0]))

    def accel_body(self, t):
        R = rot.quat_to_matrix(self.quaternion(t))
        return R.T @ self.acceleration(t)

    def pose(self, t) -> Pose6DoF:
        return Pose6DoF(self.position(t), self.quaternion(t))


@dataclass
class FrameObservations:
    """Landmark observations of one stereo frame.

    ``left``/``right`` carry the measured (possibly noisy) pixels;
    ``left_exact``/``right_exact`` the noise-free projections.
    """

    frame_id: int
    timestamp: float
    ids: np.ndarray          # (n,) landmark indices
    left: np.ndarray         # (n, 2)
    right: np.ndarray        # (n, 2)
    left_exact: np.ndarray
    right_exact: np.ndarray


@dataclass
class SyntheticScene:
    seed: int
    params: SceneParams
    landmarks: np.ndarray            # (N, 3)
    descriptors: np.ndarray          # (N, 32) uint8, one signature per landmark
    trajectory: Trajectory           # ground truth at frame times
    initial_velocity: np.ndarray
    frames: list
    imu: list
    gps: list
    path: CorridorPath

    def frame_times(self):
        return np.asarray(self.trajectory.timestamps)


def _make_landmarks(params: SceneParams, rng) -> np.ndarray:
    length = params.speed * params.duration() + params.max_depth + 5.0
    n = params.n_landmarks
    walls = rng.integers(0, 4, size=n)
    along = rng.uniform(0.5, length, size=n)
    pts = np.zeros((n, 3))
    for i in range(n):
        jitter = rng.uniform(-0.25, 0.25)
        if walls[i] == 0:
            pts[i] = [params.wall_x + jitter, rng.uniform(-params.wall_y, params.wall_y), along[i]]
        elif walls[i] == 1:
            pts[i] = [-params.wall_x + jitter, rng.uniform(-params.wall_y, params.wall_y), along[i]]
        elif walls[i] == 2:
            pts[i] = [rng.uniform(-params.wall_x, params.wall_x), params.wall_y + jitter, along[i]]
        else:
            pts[i] = [rng.uniform(-params.wall_x, params.wall_x), -params.wall_y + jitter, along[i]]
    return pts


def _project_frame(params, pose, landmarks):
    """Exact stereo projections of all visible landmarks for one pose."""
    cam = params.camera
    w2c = pose.inverse()
    pc = w2c.apply(landmarks)
    z = pc[:, 2]
    with np.errstate(divide="ignore", invalid="ignore"):
        ul = cam.fx * pc[:, 0] / z + cam.cx
        vl = cam.fy * pc[:, 1] / z + cam.cy
        ur = cam.fx * (pc[:, 0] - cam.baseline) / z + cam.cx
    ok = (z > params.min_depth) & (z < params.max_depth)
    ok &= (ul >= _EDGE_MARGIN) & (ul <= cam.width - 1 - _EDGE_MARGIN)
    ok &= (vl >= _EDGE_MARGIN) & (vl <= cam.height - 1 - _EDGE_MARGIN)
    ok &= (ur >= _EDGE_MARGIN) & (ur <= cam.width - 1 - _EDGE_MARGIN)
    ids = np.flatnonzero(ok)
    left = np.stack([ul[ids], vl[ids]], axis=1)
    right = np.stack([ur[ids], vl[ids]], axis=1)
    return ids, left, right


def generate_scene(seed: int, params: SceneParams = None) -> SyntheticScene:
    """Build a deterministic synthetic scene for the given seed."""
    if params is None:
        params = SceneParams()
    if params.n_landmarks <= 0:
        raise InvalidParams("landmark count must be positive")
    if params.n_frames <= 0:
        raise InvalidParams("trajectory length must be positive")
    if params.imu_rate < params.frame_rate:
        raise InvalidParams("imu rate below frame rate")

    rng = np.random.default_rng(seed)
    path = CorridorPath(params)
    landmarks = _make_landmarks(params, rng)
    descriptors = rng.integers(0, 256, size=(params.n_landmarks, 32), dtype=np.uint8)

    traj = Trajectory()
    frames = []
    for i in range(params.n_frames):
        t = i / params.frame_rate
        pose = path.pose(t)
        traj.append(t, pose)
        ids, left, right = _project_frame(params, pose, landmarks)
        left_exact = left.copy()
        right_exact = right.copy()
        if params.pixel_noise > 0:
            left = left + rng.normal(0.0, params.pixel_noise, size=left.shape)
            right = right + rng.normal(0.0, params.pixel_noise, size=right.shape)
        frames.append(FrameObservations(i, t, ids, left, right, left_exact, right_exact))

    gyro_bias = rng.normal(0.0, 1.0, 3) * params.gyro_bias_scale
    accel_bias = rng.normal(0.0, 1.0, 3) * params.accel_bias_scale
    imu = []
    n_imu = int(round(params.duration() * params.imu_rate)) + 1
    for k in range(n_imu):
        t = k / params.imu_rate
        gyro = path.omega_body(t) + gyro_bias
        accel = path.accel_body(t) + accel_bias
        if params.gyro_noise > 0:
            gyro = gyro + rng.normal(0.0, params.gyro_noise, 3)
        if params.accel_noise > 0:
            accel = accel + rng.normal(0.0, params.accel_noise, 3)
        imu.append(ImuSample(t, gyro, accel))

    gps = []
    if params.gps_enabled:
        n_gps = int(params.duration() * params.gps_rate) + 1
        for k in range(n_gps):
            t = k / params.gps_rate
            pos = path.position(t)
            if params.gps_noise > 0:
                pos = pos + rng.normal(0.0, params.gps_noise, 3)
            gps.append(GpsSample(t, pos, params.gps_quality))

    return SyntheticScene(
        seed=seed,
        params=params,
        landmarks=landmarks,
        descriptors=descriptors,
        trajectory=traj,
        initial_velocity=path.velocity(0.0),
        frames=frames,
        imu=imu,
        gps=gps,
        path=path,
    )


def reprojection_residuals(scene: SyntheticScene):
    """Max |exact observation - reprojection from ground truth|, in pixels.

    The oracle check behind every scene: with zero noise this is float
    round-off only.
    """
    cam = scene.params.camera
    worst = 0.0
    for frame, (_, pose) in zip(scene.frames, scene.trajectory):
        right_pose = cam.right_pose(pose)
        for j, lm_id in enumerate(frame.ids):
            pl = project(cam, pose, scene.landmarks[lm_id])
            pr = project(cam, right_pose, scene.landmarks[lm_id])
            worst = max(worst, float(np.max(np.abs(pl - frame.left_exact[j]))))
            worst = max(worst, float(np.max(np.abs(pr - frame.right_exact[j]))))
    return worst


def scene_with(params: SceneParams = None, **overrides) -> SceneParams:
    """Convenience: copy default params with keyword overrides."""
    base = params if params is not None else SceneParams()
    return replace(base, **overrides)
