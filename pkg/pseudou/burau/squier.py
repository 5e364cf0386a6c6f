"""
Reduced Burau representation at a unit parameter q and Squier's invariant
Hermitian form J(s), s² = q.
"""
import cmath
import math
from typing import List

import numpy as np
from scipy import linalg

from .braid import BraidWord
from ..config import DEFAULT_TOL
from ..exceptions import ConsistencyError
from ..exceptions import DegenerateFormError
from ..exceptions import DomainError
from ..utils.general import inf_norm

DEFINITE_WINDOW = "definite-window"
PRINCIPAL_ROOT = "principal-root"
NON_UNITARIZABLE = "non-unitarizable"


def _check_strands(k: int):
    if k < 3:
        raise DomainError(f"reduced Burau needs at least 3 strands, got {k}")


def _check_unit(q: complex, tol: float):
    if abs(abs(q) - 1) > tol:
        raise DomainError(f"q must lie on the unit circle, |q| = {abs(q)}")


def burau_generator(k: int, i: int, q: complex) -> np.ndarray:
    """Reduced Burau image of σ_i, 1 ≤ i ≤ k − 1."""
    _check_strands(k)
    d = k - 1
    M = np.eye(d, dtype=complex)
    if i == 1:
        M[0, 0], M[0, 1] = -q, 1
    elif i == d:
        M[d - 1, d - 2], M[d - 1, d - 1] = q, -q
    elif 1 < i < d:
        M[i - 1, i - 2], M[i - 1, i - 1], M[i - 1, i] = q, -q, 1
    else:
        raise DomainError(f"generator index {i} out of range for {k} strands")
    return M


def reduced_burau(word: BraidWord, q: complex, tol: float = DEFAULT_TOL) -> np.ndarray:
    _check_strands(word.strands)
    _check_unit(q, tol)
    k = word.strands
    result = np.eye(k - 1, dtype=complex)
    for x in word.letters:
        M = burau_generator(k, abs(x), q)
        result = result @ (M if x > 0 else linalg.inv(M))
    return result


def squier_form(k: int, s: complex) -> np.ndarray:
    """Tridiagonal: s + s̄ on the diagonal, −s̄ above, −s below."""
    _check_strands(k)
    if s == 0:
        raise DomainError("s must be nonzero")
    d = k - 1
    J = np.diag(np.full(d, s + np.conj(s)))
    J += np.diag(np.full(d - 1, -np.conj(s)), 1)
    J += np.diag(np.full(d - 1, -s), -1)
    return J


def principal_arg_signed(q: complex) -> float:
    """arg q in (−π, π]."""
    a = cmath.phase(q)
    return math.pi if a <= -math.pi else a


def square_root_parameter(q: complex) -> complex:
    return cmath.exp(0.5j * principal_arg_signed(q))


def is_singular(k: int, q: complex, tol: float = DEFAULT_TOL) -> bool:
    """J is singular exactly when q^k = 1 and q ≠ 1."""
    return abs(q ** k - 1) <= tol and abs(q - 1) > tol


def squier_eigenvalues(k: int, q: complex) -> np.ndarray:
    return linalg.eigvalsh(squier_form(k, square_root_parameter(q)))


def squier_definite(k: int, q: complex, tol: float = DEFAULT_TOL) -> bool:
    """arg q ∈ (−2π/k, 2π/k), confirmed by the eigenvalues of J."""
    _check_strands(k)
    _check_unit(q, tol)
    if is_singular(k, q, tol):
        raise DegenerateFormError(f"Squier form is singular at q = {q}")
    window = abs(principal_arg_signed(q)) < 2 * math.pi / k
    w = squier_eigenvalues(k, q)
    eigen = bool(np.all(w > 0) or np.all(w < 0))
    if window != eigen:
        raise ConsistencyError(f"window says {window}, eigenvalues {w} say {eigen}")
    return window


def principal_order(q: complex, tol: float = DEFAULT_TOL):
    """n ≥ 3 with q = exp(2πi/n), else None."""
    a = principal_arg_signed(q)
    if a <= tol:
        return None
    n = round(2 * math.pi / a)
    if n >= 3 and abs(2 * math.pi / n - a) <= tol:
        return n
    return None


def unitarizable(k: int, q: complex, tol: float = DEFAULT_TOL) -> str:
    """
    The definiteness window takes precedence: a principal root inside the window
    is reported as definite-window, one outside it as principal-root.
    """
    _check_strands(k)
    _check_unit(q, tol)
    if abs(principal_arg_signed(q)) < 2 * math.pi / k:
        return DEFINITE_WINDOW
    if principal_order(q, tol) is not None:
        return PRINCIPAL_ROOT
    return NON_UNITARIZABLE


def invariance_residual(word: BraidWord, q: complex, s: complex = None) -> float:
    """max |β*Jβ − J| relative to max(1, ‖β‖²)."""
    s = square_root_parameter(q) if s is None else s
    B = reduced_burau(word, q)
    J = squier_form(word.strands, s)
    scale = max(1.0, inf_norm(B) ** 2)
    return float(np.max(np.abs(B.conj().T @ J @ B - J))) / scale


def inertia(J: np.ndarray, tol: float = DEFAULT_TOL) -> List[int]:
    w = linalg.eigvalsh(J)
    return [int(np.sum(w > tol)), int(np.sum(w < -tol)), int(np.sum(np.abs(w) <= tol))]
