"""
Hyperbolic planes: isotropic bases, line-moving transvections and the
factorization of SU(1,1) into transvections.
"""
import logging
from typing import List
from typing import Tuple

import numpy as np
from scipy import linalg

from .elements import Transvection
from .elements import is_isotropic
from ..config import DEFAULT_TOL
from ..exceptions import DomainError
from ..exceptions import FactorizationError
from ..groups.forms import hermitian_product
from ..groups.forms import quadratic_value

logger = logging.getLogger(__name__)

DIAGONAL_PARAMETER = 1j
# |B(u,v)|/(|u||v|) below which a line is moved through an auxiliary vector
MIN_PAIRING = 0.25
AUXILIARY_TRIES = 32
# smallest diagonal entry used as an LDU pivot in SU(1,1)
PIVOT = 0.5


def hyperbolic_pair(plane: np.ndarray, H: np.ndarray, tol: float = DEFAULT_TOL) -> Tuple[np.ndarray, np.ndarray]:
    """
    Isotropic u, v of equal length spanning the column space of `plane` with
    B(v, u) = 1. Columns are normalized first.
    """
    norms = np.linalg.norm(plane, axis=0)
    if norms.size != 2 or not np.all(norms > 0):
        raise DomainError("a hyperbolic plane needs two nonzero columns")
    plane = plane / norms
    G = plane.conj().T @ H @ plane
    w, Q = linalg.eigh(G)
    scale = max(1.0, float(np.max(np.abs(w))))
    if not (w[0] < -tol * scale and w[1] > tol * scale):
        raise DomainError(f"plane is not hyperbolic, restricted form eigenvalues {w}")
    e_plus = plane @ Q[:, 1] / np.sqrt(w[1])
    e_minus = plane @ Q[:, 0] / np.sqrt(-w[0])
    u, v = (e_plus + e_minus) / np.sqrt(2), (e_plus - e_minus) / np.sqrt(2)
    balance = np.sqrt(np.linalg.norm(v) / np.linalg.norm(u))
    return u * balance, v / balance


def complete_hyperbolic_pair(u: np.ndarray, H: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Isotropic v with B(v, u) = 1."""
    if not is_isotropic(u, H, tol):
        raise DomainError("vector to complete is not isotropic")
    x = H @ u
    alpha = 1 / hermitian_product(x, u, H)
    v = alpha * x
    return v - quadratic_value(v, H) / 2 * u


def _same_line(u: np.ndarray, v: np.ndarray, tol: float) -> bool:
    return np.linalg.matrix_rank(np.column_stack([u, v]), tol=tol * max(np.linalg.norm(u), np.linalg.norm(v))) < 2


def _pairing(u: np.ndarray, v: np.ndarray, H: np.ndarray) -> float:
    return abs(hermitian_product(u, v, H)) / (np.linalg.norm(u) * np.linalg.norm(v))


def _line_transvection(u: np.ndarray, v: np.ndarray, H: np.ndarray) -> Transvection:
    """τ_{x,−1/ā}, x = u + a·v/conj(B(u,v)), sends u to a multiple of v."""
    v = v / np.conj(hermitian_product(u, v, H))
    a = DIAGONAL_PARAMETER
    return Transvection(u + a * v, -1 / np.conj(a))


def _auxiliary_isotropic(u: np.ndarray, v: np.ndarray, H: np.ndarray, rng: np.random.Generator, tol: float) -> np.ndarray:
    """The isotropic candidate pairing best with both u and v."""
    candidates = [complete_hyperbolic_pair(u, H, tol), complete_hyperbolic_pair(v, H, tol)]
    for _ in range(AUXILIARY_TRIES):
        r = rng.normal(size=u.size) + 1j * rng.normal(size=u.size)
        b_ur = hermitian_product(u, r, H)
        if b_ur == 0:
            continue
        candidates.append(r - quadratic_value(r, H) / (2 * b_ur) * u)
    return max(candidates, key=lambda x: min(_pairing(u, x, H), _pairing(x, v, H)))


def map_isotropic_line(
    u: np.ndarray, v: np.ndarray, H: np.ndarray, tol: float = DEFAULT_TOL, rng: np.random.Generator = None
) -> List[Transvection]:
    """
    At most two transvections whose product sends the line [u] to [v]: one when
    |B(u,v)| ≥ MIN_PAIRING·|u||v|, otherwise two through the auxiliary isotropic x
    that pairs best with both.
    """
    if not (is_isotropic(u, H, tol) and is_isotropic(v, H, tol)):
        raise DomainError("map_isotropic_line needs isotropic vectors")
    if _same_line(u, v, tol):
        return []
    if _pairing(u, v, H) >= MIN_PAIRING:
        return [_line_transvection(u, v, H)]

    rng = np.random.default_rng(0) if rng is None else rng
    x = _auxiliary_isotropic(u, v, H, rng, tol)
    if min(_pairing(u, x, H), _pairing(x, v, H)) <= np.sqrt(tol):
        raise FactorizationError("map_isotropic_line", "no auxiliary isotropic vector found")
    return [_line_transvection(x, v, H), _line_transvection(u, x, H)]


def _coordinates(y: np.ndarray, u: np.ndarray, v: np.ndarray, H: np.ndarray) -> Tuple[complex, complex]:
    """y = αu + βv for a hyperbolic pair with B(u, v) = B(v, u) = 1."""
    return hermitian_product(y, v, H), hermitian_product(y, u, H)


def diagonal_transvections(b: float, u: np.ndarray, v: np.ndarray, a: complex = DIAGONAL_PARAMETER) -> List[Transvection]:
    """
    u ↦ bu, v ↦ v/b as τ_{v,−a} τ_{u,(1−1/b)/a} τ_{v,ab} τ_{u,(1/b²−1/b)/a}.
    """
    return [
        Transvection(v, -a),
        Transvection(u, (1 - 1 / b) / a),
        Transvection(v, a * b),
        Transvection(u, (1 / b ** 2 - 1 / b) / a),
    ]


def _diagonal(d: float, u: np.ndarray, v: np.ndarray, tol: float) -> List[Transvection]:
    if abs(d - 1) <= tol:
        return []
    if abs(d) >= 1:
        return diagonal_transvections(d, u, v)
    return diagonal_transvections(1 / d, v, u)


def _restriction(g, u, v, H, tol) -> Tuple[float, complex, complex, float]:
    """[[p, q], [r, s]] of g on (u, v); p, s real and q, r imaginary in SU(1,1)."""
    p, r = _coordinates(g @ u, u, v, H)
    q, s = _coordinates(g @ v, u, v, H)
    scale = max(1.0, abs(p), abs(q), abs(r), abs(s))
    if max(abs(p.imag), abs(s.imag), abs(q.real), abs(r.real)) > np.sqrt(tol) * scale:
        raise FactorizationError("su11", f"restriction [[{p}, {q}], [{r}, {s}]] is not in SU(1,1)")
    if abs(p.real * s.real + q.imag * r.imag - 1) > np.sqrt(tol) * scale ** 2:
        raise FactorizationError("su11", "restriction does not have determinant 1")
    return p.real, 1j * q.imag, 1j * r.imag, s.real


def su11_to_transvections(
    g: np.ndarray, u: np.ndarray, v: np.ndarray, H: np.ndarray, tol: float = DEFAULT_TOL
) -> List[Transvection]:
    """
    Transvections with product g, for g of determinant 1 preserving the hyperbolic
    plane spanned by (u, v), B(v, u) = 1, and trivial on its orthocomplement.

    In the basis (u, v), τ_{u,c} = [[1, c], [0, 1]] and τ_{v,c} = [[1, 0], [c, 1]].
    The restriction is factored as τ_v(r/p)·diag(p, 1/p)·τ_u(q/p) or as
    τ_u(q/s)·diag(1/s, s)·τ_v(r/s), whichever pivot is larger. When both |p| and
    |s| are below PIVOT, one extra transvection first shifts p by 1.
    """
    p, q, r, s = _restriction(g, u, v, H, tol)
    before: List[Transvection] = []
    after: List[Transvection] = []
    if max(abs(p), abs(s)) < PIVOT:
        # p ↦ p + 1, the larger of |q|, |r| exceeds 0.86 here
        if abs(r) >= abs(q):
            c = 1 / r
            before = [Transvection(u, -c)]
            p, q = p + 1, q + c * s
        else:
            c = 1 / q
            after = [Transvection(v, -c)]
            p, r = p + 1, r + c * s

    if abs(p) >= abs(s):
        middle = [Transvection(v, r / p)] + _diagonal(p, u, v, tol) + [Transvection(u, q / p)]
    else:
        middle = [Transvection(u, q / s)] + _diagonal(1 / s, u, v, tol) + [Transvection(v, r / s)]
    factors = before + middle + after
    return [t for t in factors if abs(t.a) > tol]
