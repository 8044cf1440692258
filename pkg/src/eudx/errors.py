"""Exception types shared across the toolkit."""


class EudxError(Exception):
    """Base class for all errors raised by this package."""


# --- geometry / metrics ---

class BehindCamera(EudxError):
    """Point has non-positive depth in the camera frame."""


class EmptyOverlap(EudxError):
    """Two trajectories share no associable timestamps."""


class DegenerateInput(EudxError):
    """Statistic undefined for the given samples (e.g. zero mean)."""


class InvalidParams(EudxError):
    """Scene or run parameters fail validation."""


# --- frontend ---

class BadKernel(EudxError):
    """Filter kernel is not an odd square stencil."""


class BorderViolation(EudxError):
    """Feature too close to the image border for a descriptor patch."""


# --- matrix kernels ---

class DimMismatch(EudxError):
    """Operand shapes are not conformable."""


class NotPositiveDefinite(EudxError):
    """Factorization hit a non-positive pivot."""


class SingularTriangular(EudxError):
    """Triangular solve found a (near) zero diagonal entry."""


class DegenerateHomogeneous(EudxError):
    """Homogeneous coordinate too close to zero for a perspective divide."""


class SingularDiagonal(EudxError):
    """Diagonal block of a structured matrix has a (near) zero entry."""


class SingularSchur(EudxError):
    """Schur complement of a structured matrix is not invertible."""


# --- backends ---

class NonMonotonicTimestamps(EudxError):
    """Sensor samples are not strictly increasing in time."""


class TriangulationFailure(EudxError):
    """Feature track could not be triangulated."""


class RejectedLowQuality(EudxError):
    """GPS sample below the quality gate."""


class SingularSystem(EudxError):
    """Normal equations are singular even after damping."""


class InsufficientCorpus(EudxError):
    """Too few descriptors to build a vocabulary at the requested depth."""


class NoCandidate(EudxError):
    """Place recognition returned no candidate keyframe."""


class InsufficientInliers(EudxError):
    """Pose estimate supported by too few inlier matches."""


class TrackingLost(EudxError):
    """Frame could not be tracked against the current map."""


# --- offload scheduler ---

class Underdetermined(EudxError):
    """Too few samples to fit the requested model family."""


class UnknownKernel(EudxError):
    """Request names a kernel the profile does not cover."""


# --- buffer / pipeline planner ---

class InvalidOffsets(EudxError):
    """A consumption cycle precedes its production cycle."""


class CycleDetected(EudxError):
    """Task graph is not acyclic."""


# --- datasets / CLI ---

class ManifestError(EudxError):
    """Sequence manifest is missing files or inconsistent."""
