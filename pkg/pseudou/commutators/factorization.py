"""
Factor a pseudo-unitary matrix into quasi-reflections and transvections by
fixing one anisotropic vector at a time.
"""
import logging
from typing import List
from typing import Tuple

import numpy as np
from scipy import linalg

from .elements import Factor
from .elements import QuasiReflection
from .elements import Transvection
from ..config import DEFAULT_TOL
from ..exceptions import FactorizationError
from ..groups.forms import FormLike
from ..groups.forms import hermitian_product
from ..groups.forms import quadratic_value
from ..groups.forms import require_member
from ..utils.general import inf_norm

logger = logging.getLogger(__name__)

EXTRA_CANDIDATES = 8
CANDIDATE_BATCHES = 4
# |Q(w)|/|w|² a candidate should reach before the search stops early
MIN_ANISOTROPY = 0.05


def _candidates(W: np.ndarray, rng: np.random.Generator) -> List[np.ndarray]:
    r = W.shape[1]
    combos = rng.normal(size=(r, EXTRA_CANDIDATES)) + 1j * rng.normal(size=(r, EXTRA_CANDIDATES))
    vectors = np.hstack([W, W @ combos])
    return [vectors[:, j] / np.linalg.norm(vectors[:, j]) for j in range(vectors.shape[1])]


def _score(v: np.ndarray, w: np.ndarray, H: np.ndarray, floor: float) -> float:
    nw = float(np.vdot(w, w).real)
    if nw <= floor ** 2:
        return 0.0
    return min(abs(quadratic_value(v, H)), abs(quadratic_value(w, H)) / nw)


def _best_candidate(sigma: np.ndarray, W: np.ndarray, H: np.ndarray, floor: float, rng: np.random.Generator):
    """
    (v, σv − v) maximizing the score over up to CANDIDATE_BATCHES batches, stopping
    once a candidate reaches MIN_ANISOTROPY.
    """
    best, best_score = None, 0.0
    for _ in range(CANDIDATE_BATCHES):
        for v in _candidates(W, rng):
            w = sigma @ v - v
            s = _score(v, w, H, floor)
            if s > best_score:
                best, best_score = (v, w), s
        if best_score >= MIN_ANISOTROPY or W.shape[1] == 1:
            break
    return best, best_score


def _rank_one_transvection(sigma: np.ndarray, H: np.ndarray, tol: float):
    """σ = I + a u u*H when σ − I has rank one and its image is isotropic."""
    R = sigma - np.eye(sigma.shape[0])
    U, s, Vh = linalg.svd(R)
    if s.size > 1 and s[1] > np.sqrt(tol) * max(1.0, s[0]):
        return None
    u = U[:, 0]
    row = s[0] * Vh[0]
    uH = u.conj() @ H
    a = np.vdot(uH, row) / np.vdot(uH, uH)
    if abs(quadratic_value(u, H)) > np.sqrt(tol):
        return None
    return Transvection(u, 1j * np.imag(a))


def _anisotropic_in(W: np.ndarray, H: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    best, best_q = None, 0.0
    for v in _candidates(W, rng):
        q = abs(quadratic_value(v, H))
        if q > best_q:
            best, best_q = v, q
    return best


def factor_with_notes(
    g, H: FormLike, tol: float = DEFAULT_TOL, rng: np.random.Generator = None
) -> Tuple[List[Factor], List[str]]:
    g, form = require_member(g, H, tol=tol)
    H = form.matrix
    dim = g.shape[0]
    rng = np.random.default_rng(0) if rng is None else rng
    scale = max(1.0, inf_norm(g))
    iso_tol = np.sqrt(tol)

    sigma = g.copy()
    fixed: List[np.ndarray] = []
    factors: List[Factor] = []
    notes: List[str] = []
    for _ in range(2 * dim + 4):
        if inf_norm(sigma - np.eye(dim)) <= tol * scale:
            return factors, notes
        W = linalg.null_space(np.array(fixed).conj() @ H) if fixed else np.eye(dim, dtype=complex)
        if W.shape[1] == 0:
            break

        best, best_score = _best_candidate(sigma, W, H, iso_tol * scale, rng)
        if best is not None and best_score > iso_tol:
            v, w = best
            a = 1 + quadratic_value(w, H) / hermitian_product(v, w, H)
            rho = QuasiReflection(w / np.linalg.norm(w), a / abs(a))
            sigma = rho.inverse().matrix(H) @ sigma
            fixed.append(v)
            factors.append(rho)
            continue

        tau = _rank_one_transvection(sigma, H, tol)
        if tau is not None:
            factors.append(tau)
            sigma = tau.inverse().matrix(H) @ sigma
            continue

        u0 = _anisotropic_in(W, H, rng)
        if u0 is None or abs(quadratic_value(u0, H)) <= iso_tol:
            break
        rho0 = QuasiReflection(u0, np.exp(2j * np.pi * rng.random()))
        logger.warning(
            "isotropic residual; inserting preparatory quasi-reflection",
            extra={"fixed": len(fixed), "dim": dim},
        )
        notes.append(f"preparatory quasi-reflection after {len(fixed)} fixed vectors")
        factors.append(rho0.inverse())
        sigma = rho0.matrix(H) @ sigma

    raise FactorizationError(
        "reflection_factorization",
        f"residual {inf_norm(sigma - np.eye(dim)):.3e} after {len(factors)} factors; "
        "all candidate vectors degenerate",
    )


def reflection_factorization(
    g, H: FormLike, tol: float = DEFAULT_TOL, rng: np.random.Generator = None
) -> List[Factor]:
    """
    Quasi-reflections and transvections ρ_1, ..., ρ_k with g = ρ_1···ρ_k,
    k ≤ m + n on generic input.
    """
    factors, _ = factor_with_notes(g, H, tol=tol, rng=rng)
    return factors


def split_factors(factors: List[Factor], H: np.ndarray) -> Tuple[List[QuasiReflection], List[Transvection]]:
    """
    Reorder into quasi-reflections followed by transvections with the same product,
    using τ σ_{u,a} = σ_{τu,a} τ.
    """
    quasi: List[QuasiReflection] = []
    pending: List[Transvection] = []
    for factor in factors:
        if isinstance(factor, Transvection):
            pending.append(factor)
            continue
        u = factor.u
        for t in reversed(pending):
            u = t.apply(u, H)
        quasi.append(QuasiReflection(u / np.linalg.norm(u), factor.a))
    return quasi, pending
