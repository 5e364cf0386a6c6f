"""
small numpy helpers
"""
import numpy as np


def inf_norm(m: np.ndarray) -> float:
    """Max absolute row sum; 0 for empty input."""
    if m.size == 0:
        return 0.0
    return float(np.max(np.sum(np.abs(m), axis=1)))


def as_square(m, name: str = "matrix") -> np.ndarray:
    from ..exceptions import DimensionMismatchError

    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatchError(f"{name} must be square, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise DimensionMismatchError(f"{name} has non-finite entries")
    return arr


def principal_arg(z: complex) -> float:
    """Argument of z in [0, 2π)."""
    a = float(np.angle(z))
    if a < 0:
        a += 2 * np.pi
    if a >= 2 * np.pi:
        a -= 2 * np.pi
    return a
