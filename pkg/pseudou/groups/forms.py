"""
Non-degenerate Hermitian forms and group membership.
"""
from typing import Union
from typing import Optional
from collections import namedtuple

import numpy as np
from scipy import linalg

from ..config import DEFAULT_TOL
from ..exceptions import DomainError
from ..exceptions import DegenerateFormError
from ..exceptions import DimensionMismatchError
from ..exceptions import MembershipError
from ..utils.general import as_square
from ..utils.general import inf_norm


def hermitian_product(x: np.ndarray, y: np.ndarray, H: np.ndarray) -> complex:
    """B(x, y) = y* H x, linear in x."""
    return complex(np.vdot(y, H @ x))


def quadratic_value(u: np.ndarray, H: np.ndarray) -> float:
    return float(np.real(np.vdot(u, H @ u)))


class SignatureForm:
    """
    Hermitian form H of signature (m, n). The standard form is I_{m,n} = diag(I_m, −I_n).
    """

    def __init__(self, matrix: np.ndarray, m: int, n: int, standard: bool = False):
        self._matrix = np.asarray(matrix, dtype=complex)
        self._m = int(m)
        self._n = int(n)
        self._standard = standard
        self._congruence = None

    @classmethod
    def standard(cls, m: int, n: int) -> "SignatureForm":
        if m < 0 or n < 0 or m + n == 0:
            raise DomainError(f"invalid signature ({m}, {n})")
        diag = np.concatenate([np.ones(m), -np.ones(n)])
        return cls(np.diag(diag).astype(complex), m, n, standard=True)

    @classmethod
    def from_matrix(cls, H, tol: float = DEFAULT_TOL) -> "SignatureForm":
        H = as_square(H, "form")
        scale = max(1.0, inf_norm(H))
        if inf_norm(H - H.conj().T) > tol * scale:
            raise DomainError("form matrix is not Hermitian")
        w = linalg.eigvalsh(H)
        if np.any(np.abs(w) <= tol * scale):
            raise DegenerateFormError(f"form is degenerate, eigenvalues {w}")
        m = int(np.sum(w > 0))
        n = H.shape[0] - m
        d = np.concatenate([np.ones(m), -np.ones(n)])
        return cls(H, m, n, standard=bool(np.allclose(H, np.diag(d), atol=tol)))

    @classmethod
    def symplectic(cls, n: int) -> "SignatureForm":
        """−iJ, the Hermitian form preserved by real symplectic matrices."""
        return cls(-1j * symplectic_unit(n), n, n)

    @property
    def m(self) -> int:
        return self._m

    @property
    def n(self) -> int:
        return self._n

    @property
    def dim(self) -> int:
        return self._m + self._n

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def is_standard(self) -> bool:
        return self._standard

    def congruence(self) -> np.ndarray:
        """C with C* H C = I_{m,n}, positive directions first."""
        if self._congruence is None:
            if self._standard:
                self._congruence = np.eye(self.dim, dtype=complex)
            else:
                w, Q = linalg.eigh(self._matrix)
                order = np.concatenate([np.where(w > 0)[0], np.where(w <= 0)[0]])
                w, Q = w[order], Q[:, order]
                self._congruence = Q / np.sqrt(np.abs(w))[np.newaxis, :]
        return self._congruence

    def to_standard(self, g: np.ndarray) -> np.ndarray:
        if self._standard:
            return g
        C = self.congruence()
        return linalg.solve(C, g @ C)

    def to_json(self):
        if self._standard:
            return {"m": self._m, "n": self._n}
        return {"m": self._m, "n": self._n, "matrix": self._matrix}

    def __repr__(self):
        return f"SignatureForm(m={self._m}, n={self._n}, standard={self._standard})"


def symplectic_unit(n: int) -> np.ndarray:
    """J = [[0, I], [−I, 0]]"""
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, eye], [-eye, zero]])


FormLike = Union[SignatureForm, np.ndarray, tuple]


def as_form(H: FormLike, dim: Optional[int] = None, tol: float = DEFAULT_TOL) -> SignatureForm:
    if isinstance(H, SignatureForm):
        form = H
    elif isinstance(H, tuple) and len(H) == 2:
        form = SignatureForm.standard(*H)
    else:
        form = SignatureForm.from_matrix(H, tol=tol)
    if dim is not None and form.dim != dim:
        raise DimensionMismatchError(f"matrix of size {dim} against form of size {form.dim}")
    return form


class Membership(namedtuple("Membership", ("member", "special", "residual"))):
    """Truthy iff g preserves the form; `special` flags |det g − 1| ≤ tol."""

    __slots__ = ()

    def __bool__(self):
        return bool(self.member)


def is_member(g, H: FormLike, tol: float = DEFAULT_TOL) -> Membership:
    g = as_square(g, "g")
    form = as_form(H, g.shape[0], tol=tol)
    residual = inf_norm(g.conj().T @ form.matrix @ g - form.matrix)
    special = abs(np.linalg.det(g) - 1) <= tol
    return Membership(bool(residual <= tol), bool(special), float(residual))


def require_member(g, H: FormLike, tol: float = DEFAULT_TOL, special: bool = False):
    """Returns (g, form) or raises MembershipError."""
    g = as_square(g, "g")
    form = as_form(H, g.shape[0], tol=tol)
    result = is_member(g, form, tol=tol)
    if not result.member:
        raise MembershipError(f"g does not preserve the form, residual {result.residual:.3e}")
    if special and not result.special:
        raise MembershipError(f"det g = {np.linalg.det(g):.6g} is not 1")
    return g, form
