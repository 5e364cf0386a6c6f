"""
Transvections τ_{u,a}(v) = v + a B(v,u) u and quasi-reflections
σ_{u,a}(v) = v + (a − 1) B(v,u)/Q(u) u, with B(x, y) = y* H x.
"""
from typing import Union
from typing import Sequence
from collections import namedtuple

import numpy as np

from ..config import DEFAULT_TOL
from ..exceptions import DomainError
from ..groups.forms import FormLike
from ..groups.forms import as_form
from ..groups.forms import quadratic_value


def _form_matrix(H, dim: int) -> np.ndarray:
    if isinstance(H, np.ndarray) and H.ndim == 2:
        return H
    return as_form(H, dim).matrix


def is_isotropic(u: np.ndarray, H: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    return abs(quadratic_value(u, H)) <= tol * float(np.vdot(u, u).real)


class Transvection(namedtuple("Transvection", ("u", "a"))):
    """u isotropic, a purely imaginary."""

    __slots__ = ()

    def matrix(self, H) -> np.ndarray:
        u = np.asarray(self.u, dtype=complex)
        H = _form_matrix(H, u.size)
        return np.eye(u.size, dtype=complex) + self.a * np.outer(u, u.conj() @ H)

    def apply(self, x: np.ndarray, H) -> np.ndarray:
        H = _form_matrix(H, x.size)
        return x + self.a * np.vdot(self.u, H @ x) * self.u

    def inverse(self) -> "Transvection":
        return Transvection(self.u, -self.a)

    def conjugate_by(self, M: np.ndarray) -> "Transvection":
        """M τ_{u,a} M⁻¹ = τ_{Mu,a} for an isometry M."""
        return Transvection(M @ self.u, self.a)

    def to_json(self):
        return {"kind": "transvection", "u": np.asarray(self.u), "a": complex(self.a)}


class QuasiReflection(namedtuple("QuasiReflection", ("u", "a"))):
    """u anisotropic, |a| = 1; det σ_{u,a} = a."""

    __slots__ = ()

    def matrix(self, H) -> np.ndarray:
        u = np.asarray(self.u, dtype=complex)
        H = _form_matrix(H, u.size)
        q = quadratic_value(u, H)
        return np.eye(u.size, dtype=complex) + (self.a - 1) / q * np.outer(u, u.conj() @ H)

    def inverse(self) -> "QuasiReflection":
        return QuasiReflection(self.u, np.conj(self.a))

    def conjugate_by(self, M: np.ndarray) -> "QuasiReflection":
        return QuasiReflection(M @ self.u, self.a)

    def to_json(self):
        return {"kind": "quasi_reflection", "u": np.asarray(self.u), "a": complex(self.a)}


Factor = Union[Transvection, QuasiReflection]


def build_transvection(u, a: complex, H: FormLike, tol: float = DEFAULT_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    form = as_form(H, u.size)
    if not np.any(u):
        raise DomainError("transvection vector must be nonzero")
    if not is_isotropic(u, form.matrix, tol):
        raise DomainError(f"transvection vector is not isotropic, Q(u) = {quadratic_value(u, form.matrix):.3e}")
    if abs(np.real(a)) > tol * max(1.0, abs(a)):
        raise DomainError(f"transvection parameter must be imaginary, got {a}")
    return Transvection(u, 1j * np.imag(a)).matrix(form.matrix)


def build_quasi_reflection(u, a: complex, H: FormLike, tol: float = DEFAULT_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=complex)
    form = as_form(H, u.size)
    if not np.any(u) or is_isotropic(u, form.matrix, tol):
        raise DomainError("quasi-reflection vector must be anisotropic")
    if abs(abs(a) - 1) > tol:
        raise DomainError(f"quasi-reflection parameter must have modulus 1, got |a| = {abs(a)}")
    return QuasiReflection(u, a / abs(a)).matrix(form.matrix)


def factor_product(factors: Sequence[Factor], H, dim: int) -> np.ndarray:
    """factors[0] · factors[1] ··· factors[-1]"""
    H = _form_matrix(H, dim)
    result = np.eye(dim, dtype=complex)
    for factor in factors:
        result = result @ factor.matrix(H)
    return result
