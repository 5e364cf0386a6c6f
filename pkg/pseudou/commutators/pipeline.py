"""
From quasi-reflections to transvections to commutators.
"""
import logging
from typing import Dict
from typing import List
from typing import Tuple

import numpy as np
from scipy import linalg

from .elements import QuasiReflection
from .elements import Transvection
from .elements import factor_product
from .elements import is_isotropic
from .factorization import factor_with_notes
from .factorization import split_factors
from .planes import hyperbolic_pair
from .planes import su11_to_transvections
from .planes import complete_hyperbolic_pair
from ..config import DEFAULT_TOL
from ..config import DEFAULT_CONFIG
from ..exceptions import DomainError
from ..exceptions import NotSpecialError
from ..exceptions import FactorizationError
from ..groups.forms import FormLike
from ..groups.forms import quadratic_value
from ..groups.forms import require_member
from ..logging import TimeIt
from ..utils.general import inf_norm

logger = logging.getLogger(__name__)


class DecompositionReport:
    """Per-stage factor counts and reconstruction residuals, plus degradations."""

    def __init__(self):
        self.counts: Dict[str, int] = {}
        self.residuals: Dict[str, float] = {}
        self.degradations: List[str] = []

    def record(self, stage: str, count: int, residual: float):
        self.counts[stage] = count
        self.residuals[stage] = residual

    @property
    def residual(self) -> float:
        return max(self.residuals.values()) if self.residuals else 0.0

    def to_json(self):
        return {
            "counts": self.counts,
            "residuals": self.residuals,
            "degradations": self.degradations,
            "residual": self.residual,
        }


class CommutatorList:
    """Pairs (A_i, B_i) with g = Π A_i B_i A_i⁻¹ B_i⁻¹ in order."""

    def __init__(self, pairs: List[Tuple[np.ndarray, np.ndarray]], dim: int, report: DecompositionReport = None):
        self.pairs = pairs
        self.dim = dim
        self.report = report or DecompositionReport()

    def __len__(self):
        return len(self.pairs)

    def product(self) -> np.ndarray:
        result = np.eye(self.dim, dtype=complex)
        for A, B in self.pairs:
            result = result @ A @ B @ linalg.inv(A) @ linalg.inv(B)
        return result

    def to_json(self):
        return {
            "count": len(self.pairs),
            "pairs": [[A, B] for A, B in self.pairs],
            "report": self.report,
        }


def _stage_tolerance(tol: float, g: np.ndarray, count: int) -> float:
    return 1e3 * tol * max(1.0, inf_norm(g)) ** 2 * (count + 1)


def _check_stage(stage, target, product, tol, report: DecompositionReport, count):
    residual = inf_norm(product - target)
    report.record(stage, count, residual)
    if residual > _stage_tolerance(tol, target, count):
        raise FactorizationError(stage, f"reconstruction residual {residual:.3e}")


def _opposite_direction(u: np.ndarray, H: np.ndarray, tol: float, rng, report) -> np.ndarray:
    """A vector v ⊥ u with Q(u)Q(v) < 0, or a generic opposite-sign vector."""
    sign = np.sign(quadratic_value(u, H))
    N = linalg.null_space((u.conj() @ H)[np.newaxis, :])
    if N.shape[1]:
        w, Q = linalg.eigh(N.conj().T @ H @ N)
        j = int(np.argmin(sign * w))
        if sign * w[j] < -np.sqrt(tol):
            return N @ Q[:, j]
    for _ in range(64):
        v = rng.normal(size=u.size) + 1j * rng.normal(size=u.size)
        if sign * quadratic_value(v, H) < -np.sqrt(tol) * np.vdot(v, v).real:
            logger.warning("no orthogonal opposite-sign direction; using a generic one")
            report.degradations.append("generic opposite-sign auxiliary vector")
            return v / np.linalg.norm(v)
    raise FactorizationError("quasireflections_to_transvections", "form is definite")


def _plane_factors(first: QuasiReflection, second: QuasiReflection, H, tol) -> List[Transvection]:
    """Transvections for σ_{u₁,a₁}σ_{u₂,a₂}, a₁a₂ = 1, Q(u₁)Q(u₂) < 0."""
    g = first.matrix(H) @ second.matrix(H)
    u, v = hyperbolic_pair(np.column_stack([first.u, second.u]), H, tol)
    return su11_to_transvections(g, u, v, H, tol)


def quasireflections_to_transvections(
    factors: List[QuasiReflection],
    H: np.ndarray,
    tol: float = DEFAULT_TOL,
    rng: np.random.Generator = None,
    report: DecompositionReport = None,
) -> List[Transvection]:
    """
    Pair the leading quasi-reflection with one of opposite sign into an SU(1,1) block,
    inserting σ_{v,1/a}σ_{v,a} when consecutive signs agree.
    """
    rng = np.random.default_rng(0) if rng is None else rng
    report = DecompositionReport() if report is None else report
    det = complex(np.prod([f.a for f in factors])) if factors else 1.0
    if abs(det - 1) > np.sqrt(tol):
        raise NotSpecialError(f"quasi-reflection determinants multiply to {det:.6g}")

    remaining = [f for f in factors if abs(f.a - 1) > tol]
    result: List[Transvection] = []
    while len(remaining) > 1:
        first, second = remaining[0], remaining[1]
        q1 = quadratic_value(first.u, H)
        q2 = quadratic_value(second.u, H)
        if q1 * q2 < 0:
            partner = QuasiReflection(second.u, 1 / first.a)
            result += _plane_factors(first, partner, H, tol)
            carried = QuasiReflection(second.u, first.a * second.a)
            remaining = [carried] + remaining[2:]
        else:
            v = _opposite_direction(first.u, H, tol, rng, report)
            result += _plane_factors(first, QuasiReflection(v, 1 / first.a), H, tol)
            remaining = [QuasiReflection(v, first.a)] + remaining[1:]
        remaining = [f for f in remaining if abs(f.a - 1) > tol]

    if remaining and abs(remaining[0].a - 1) > np.sqrt(tol):
        raise NotSpecialError(f"leftover quasi-reflection with a = {remaining[0].a:.6g}")
    return result


def transvection_to_commutator(
    tau: Transvection, H: np.ndarray, b: float = DEFAULT_CONFIG.COMMUTATOR_B, tol: float = DEFAULT_TOL
) -> Tuple[np.ndarray, np.ndarray]:
    """
    A = diag(b, 1/b) on a hyperbolic pair (u, v), B = τ_{u, a/(b²−1)}; [A, B] = τ_{u,a}.
    """
    if b in (0, 1, -1):
        raise DomainError(f"b must avoid 0 and ±1, got {b}")
    u = np.asarray(tau.u, dtype=complex)
    dim = u.size
    if not is_isotropic(u, H, tol):
        raise FactorizationError("transvection_to_commutator", "transvection vector is not isotropic")
    if abs(tau.a) <= tol:
        return np.eye(dim, dtype=complex), np.eye(dim, dtype=complex)
    v = complete_hyperbolic_pair(u, H, tol)
    A = (
        np.eye(dim, dtype=complex)
        + (b - 1) * np.outer(u, v.conj() @ H)
        + (1 / b - 1) * np.outer(v, u.conj() @ H)
    )
    B = Transvection(u, tau.a / (b ** 2 - 1)).matrix(H)
    return A, B


def commutator_decomposition(
    g, H: FormLike, tol: float = DEFAULT_TOL, b: float = DEFAULT_CONFIG.COMMUTATOR_B, rng: np.random.Generator = None
) -> CommutatorList:
    """
    g ∈ SU(m,n), mn ≠ 0, as at most 14(m+n) commutators on generic input.
    """
    g, form = require_member(g, H, tol=tol, special=True)
    if form.m == 0 or form.n == 0:
        raise DomainError("commutator decomposition needs an indefinite form")
    H = form.matrix
    dim = g.shape[0]
    rng = np.random.default_rng(0) if rng is None else rng
    report = DecompositionReport()

    with TimeIt("reflection_factorization", logger, dim=dim):
        factors, notes = factor_with_notes(g, form, tol=tol, rng=rng)
    report.degradations += notes
    _check_stage("reflection_factorization", g, factor_product(factors, H, dim), tol, report, len(factors))

    quasi, trailing = split_factors(factors, H)
    _check_stage("split", g, factor_product(quasi + trailing, H, dim), tol, report, len(quasi) + len(trailing))

    with TimeIt("quasireflections_to_transvections", logger, dim=dim):
        leading = quasireflections_to_transvections(quasi, H, tol=tol, rng=rng, report=report)
    transvections = leading + trailing
    _check_stage(
        "quasireflections_to_transvections", g, factor_product(transvections, H, dim), tol, report, len(transvections)
    )

    pairs = [transvection_to_commutator(t, H, b=b, tol=tol) for t in transvections]
    result = CommutatorList(pairs, dim, report)
    _check_stage("transvection_to_commutator", g, result.product(), tol, report, len(pairs))
    if len(pairs) > 14 * dim:
        report.degradations.append(f"{len(pairs)} commutators exceed 14(m+n) = {14 * dim}")
        logger.warning("commutator count above bound", extra={"count": len(pairs), "bound": 14 * dim})
    logger.info("commutator decomposition", extra={"dim": dim, "count": len(pairs), "residual": report.residual})
    return result
