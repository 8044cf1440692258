"""Rigid-body pose with quaternion rotation."""

import numpy as np

from . import rotation as rot


class Pose6DoF:
    """A 6-DoF rigid transform: ``x_out = R(q) @ x_in + t``.

    Used both as an object pose (body-to-world) and as a generic frame
    transform.  The quaternion is renormalized after every operation so
    its norm stays within 1e-9 of one.
    """

    __slots__ = ("translation", "quaternion")

    def __init__(self, translation=None, quaternion=None):
        if translation is None:
            translation = np.zeros(3)
        if quaternion is None:
            quaternion = rot.QUAT_IDENTITY.copy()
        self.translation = np.asarray(translation, dtype=np.float64).reshape(3).copy()
        self.quaternion = rot.quat_normalize(quaternion)

    @classmethod
    def identity(cls):
        return cls()

    @classmethod
    def from_matrix(cls, T):
        T = np.asarray(T, dtype=np.float64)
        return cls(T[:3, 3], rot.matrix_to_quat(T[:3, :3]))

    def matrix(self):
        """4x4 homogeneous transform."""
        T = np.eye(4)
        T[:3, :3] = rot.quat_to_matrix(self.quaternion)
        T[:3, 3] = self.translation
        return T

    def rotation_matrix(self):
        return rot.quat_to_matrix(self.quaternion)

    def apply(self, points):
        """Transform one 3-vector or an (n, 3) array of points."""
        pts = np.asarray(points, dtype=np.float64)
        return pts @ self.rotation_matrix().T + self.translation

    def inverse(self):
        q_inv = rot.quat_conjugate(self.quaternion)
        t_inv = -rot.quat_rotate(q_inv, self.translation)
        return Pose6DoF(t_inv, q_inv)

    # Euler accessors (ZYX); the quaternion remains the stored truth.
    @property
    def yaw(self):
        return rot.quat_to_euler_zyx(self.quaternion)[0]

    @property
    def pitch(self):
        return rot.quat_to_euler_zyx(self.quaternion)[1]

    @property
    def roll(self):
        return rot.quat_to_euler_zyx(self.quaternion)[2]

    def copy(self):
        return Pose6DoF(self.translation, self.quaternion)

    def __repr__(self):
        t = self.translation
        q = self.quaternion
        return (f"Pose6DoF(t=[{t[0]:.4f} {t[1]:.4f} {t[2]:.4f}], "
                f"q=[{q[0]:.4f} {q[1]:.4f} {q[2]:.4f} {q[3]:.4f}])")


def compose(a: Pose6DoF, b: Pose6DoF) -> Pose6DoF:
    """Composition ``a ∘ b``: apply ``b`` first, then ``a``.

    Equivalent to the product of the 4x4 homogeneous matrices A @ B.
    """
    q = rot.quat_multiply(a.quaternion, b.quaternion)
    t = a.apply(b.translation)
    return Pose6DoF(t, q)
