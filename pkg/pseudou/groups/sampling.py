"""
Random group elements together with paths from the identity.
"""
from typing import Tuple

import numpy as np
from scipy import linalg
from scipy.stats import unitary_group

from .forms import SignatureForm
from .forms import symplectic_unit
from .paths import GroupPath
from ..exceptions import DomainError

MIN_STEPS = 32
LOG_GAP = 0.25


def _hermitian(k: int, rng: np.random.Generator, scale: float) -> np.ndarray:
    z = rng.normal(size=(k, k)) + 1j * rng.normal(size=(k, k))
    return scale * (z + z.conj().T) / 2


def _compact_generator(m: int, n: int, rng, scale: float) -> np.ndarray:
    """i·diag(A, B), A and B Hermitian, tr A + tr B = 0."""
    A = _hermitian(m, rng, scale) if m else np.zeros((0, 0))
    B = _hermitian(n, rng, scale) if n else np.zeros((0, 0))
    shift = (np.trace(A).real + np.trace(B).real) / (m + n)
    A = A - shift * np.eye(m)
    B = B - shift * np.eye(n)
    return 1j * linalg.block_diag(A, B)


def _noncompact_generator(m: int, n: int, rng, scale: float) -> np.ndarray:
    """[[0, Z], [Z*, 0]]"""
    Z = scale * (rng.normal(size=(m, n)) + 1j * rng.normal(size=(m, n))) / 2
    P = np.zeros((m + n, m + n), dtype=complex)
    P[:m, m:] = Z
    P[m:, :m] = Z.conj().T
    return P


def _steps_for(turns: float, steps) -> int:
    if steps is not None:
        return int(steps)
    return max(MIN_STEPS, int(np.ceil(16 * abs(turns))) + 1)


def random_member(
    m: int, n: int, rng: np.random.Generator, scale: float = 1.0, steps: int = None
) -> Tuple[np.ndarray, GroupPath, float]:
    """
    g = exp(X₁)exp(P)exp(X₂) ∈ SU(m,n) with its path t ↦ exp(tX₁)exp(tP)exp(tX₂)
    and the exact lift of that path, (tr X₁₊ + tr X₂₊)/2πi.
    """
    if m < 0 or n < 0 or m + n == 0:
        raise DomainError(f"invalid signature ({m}, {n})")
    X1 = _compact_generator(m, n, rng, scale)
    P = _noncompact_generator(m, n, rng, scale)
    X2 = _compact_generator(m, n, rng, scale)
    lift = float(np.real((np.trace(X1[:m, :m]) + np.trace(X2[:m, :m])) / (2j * np.pi)))
    path = GroupPath.one_parameter(
        [X1, P, X2], _steps_for(lift, steps), form=SignatureForm.standard(m, n)
    )
    return path.end, path, lift


def random_compact(m: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random element of S(U(m) × U(n))."""
    U = unitary_group.rvs(m, random_state=rng) if m > 1 else np.exp(2j * np.pi * rng.random((1, 1)))
    V = unitary_group.rvs(n, random_state=rng) if n > 1 else np.exp(2j * np.pi * rng.random((1, 1)))
    k = linalg.block_diag(U[:m, :m], V[:n, :n])
    det = linalg.det(k)
    k[-1, :] = k[-1, :] / det
    return k


def random_symplectic(
    n: int, rng: np.random.Generator, scale: float = 0.5, steps: int = MIN_STEPS
) -> Tuple[np.ndarray, GroupPath]:
    """S = exp(J·A) for a random real symmetric A, with its one-parameter path."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    A = rng.normal(size=(2 * n, 2 * n)) * scale
    X = symplectic_unit(n) @ ((A + A.T) / 2)
    path = GroupPath.one_parameter([X], steps)
    samples = [s.real for s in path.samples]
    path = GroupPath(samples)
    return path.end, path


def borel_form(m: int, n: int) -> SignatureForm:
    """Antidiagonal form of signature (m, n), |m − n| ≤ 1; upper triangular matrices form a Borel."""
    if abs(m - n) > 1 or m + n == 0:
        raise DomainError(f"hyperbolic basis needs |m − n| ≤ 1, got ({m}, {n})")
    dim = m + n
    H = np.fliplr(np.eye(dim)).astype(complex)
    if dim % 2:
        H[dim // 2, dim // 2] = 1 if m > n else -1
    return SignatureForm(H, m, n)


def random_borel(
    m: int, n: int, rng: np.random.Generator, scale: float = 0.5
) -> Tuple[np.ndarray, SignatureForm]:
    """
    Upper triangular member with positive diagonal in a hyperbolic basis. The
    diagonal log-moduli are strictly decreasing with gaps of at least LOG_GAP, so
    the sample stays well inside the semisimple elements.
    """
    form = borel_form(m, n)
    H = form.matrix
    dim = m + n
    half = dim // 2
    Y = np.triu(rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) * scale
    Y = (Y - H @ Y.conj().T @ H) / 2
    logs = np.cumsum(LOG_GAP + np.abs(Y.diagonal().real[:half])[::-1])[::-1]
    diagonal = np.zeros(dim)
    diagonal[:half] = logs
    diagonal[dim - half :] = -logs[::-1]
    Y[np.diag_indices(dim)] = diagonal
    return linalg.expm(Y), form
