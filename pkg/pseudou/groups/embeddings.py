# pylint: disable=invalid-name
"""
Sp(2n) ↪ SU(n,n) by the Cayley-type conjugation D and ψ: U(m,n) ↪ Sp(2(m+n)).
"""
import numpy as np
from scipy import linalg

from .forms import SignatureForm
from .forms import require_member
from .forms import symplectic_unit
from .paths import GroupPath
from .paths import unwrap_phases
from .phase import dgw_phase
from ..config import DEFAULT_TOL
from ..exceptions import DomainError
from ..exceptions import MembershipError
from ..exceptions import DimensionMismatchError
from ..utils.general import as_square
from ..utils.general import inf_norm


def cayley_unit(n: int) -> np.ndarray:
    """D = (1/√2)[[I, −iI], [−iI, I]], with D*·I_{n,n}·D = −iJ."""
    eye = np.eye(n)
    return np.block([[eye, -1j * eye], [-1j * eye, eye]]) / np.sqrt(2)


def realify(T: np.ndarray) -> np.ndarray:
    """λ(A + iB) = [[A, B], [−B, A]]"""
    A, B = T.real, T.imag
    return np.block([[A, B], [-B, A]])


def _half_dim(S: np.ndarray) -> int:
    if S.shape[0] % 2:
        raise DimensionMismatchError(f"symplectic matrices have even size, got {S.shape[0]}")
    return S.shape[0] // 2


def is_symplectic(S, tol: float = DEFAULT_TOL) -> bool:
    S = as_square(S, "S")
    n = _half_dim(S)
    if inf_norm(S.imag) > tol:
        return False
    J = symplectic_unit(n)
    return inf_norm(S.real.T @ J @ S.real - J) <= tol * max(1.0, inf_norm(S) ** 2)


def _require_symplectic(S, tol):
    S = as_square(S, "S")
    if not is_symplectic(S, tol):
        raise MembershipError("matrix is not real symplectic")
    return S.real


def sp_to_su(S, tol: float = DEFAULT_TOL) -> np.ndarray:
    S = _require_symplectic(S, tol)
    D = cayley_unit(_half_dim(S))
    return D @ S @ D.conj().T


def su_to_sp(T, m: int, n: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """ψ_{m,n}(T) = Z λ(T) Z⁻¹, Z = diag(I_{m,n}, I_{m+n})."""
    T, _ = require_member(T, SignatureForm.standard(m, n), tol=tol)
    z = np.concatenate([np.ones(m), -np.ones(n), np.ones(m + n)])
    return z[:, np.newaxis] * realify(T) * z[np.newaxis, :]


def unitary_factor_det(S: np.ndarray) -> complex:
    """det(A + iB) for the orthogonal symplectic polar factor [[A, B], [−B, A]]."""
    n = _half_dim(S)
    O, _ = linalg.polar(np.asarray(S).real, side="right")
    value = complex(linalg.det(O[:n, :n] + 1j * O[:n, n:]))
    return value / abs(value)


def sp_lift(path: GroupPath, tol: float = DEFAULT_TOL) -> float:
    """Continuous argument of det of the unitary polar factor along a symplectic path, in turns."""
    for S in (path.start, path.end):
        _require_symplectic(S, tol)
    if inf_norm(path.start - np.eye(path.start.shape[0])) > tol:
        raise DomainError("path must start at the identity")
    return unwrap_phases([unitary_factor_det(S) for S in path.samples])


def sp_winding(loop: GroupPath, tol: float = DEFAULT_TOL) -> int:
    if not loop.is_closed(tol):
        raise DomainError("winding needs a closed loop")
    value = sp_lift(loop, tol)
    winding = int(round(value))
    if abs(value - winding) > 1e-6:
        raise DomainError(f"loop lift {value:.6f} is not an integer")
    return winding


def sp_phase(S, tol: float = DEFAULT_TOL) -> float:
    """Krein phase of S with respect to the Hermitian form −iJ, mod 1."""
    S = _require_symplectic(S, tol)
    return dgw_phase(S.astype(complex), SignatureForm.symplectic(_half_dim(S)), tol=tol)


def su_path_to_sp(path: GroupPath, tol: float = DEFAULT_TOL) -> GroupPath:
    form = path.form
    if form is None or not form.is_standard:
        raise DomainError("ψ needs a path in the standard form")
    return GroupPath([su_to_sp(s, form.m, form.n, tol) for s in path.samples])
