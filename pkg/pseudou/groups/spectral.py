"""
Spectral data and Krein canonical forms of semisimple pseudo-unitary matrices.
"""
import logging
from typing import List
from typing import Tuple
from collections import namedtuple

import numpy as np
from scipy import linalg
from scipy.cluster.hierarchy import fcluster
from scipy.cluster.hierarchy import linkage

from .forms import FormLike
from .forms import SignatureForm
from .forms import require_member
from ..config import DEFAULT_TOL
from ..exceptions import ConditioningError
from ..exceptions import NotSemisimpleError
from ..utils.general import inf_norm
from ..utils.general import principal_arg

logger = logging.getLogger(__name__)

SpectralData = namedtuple(
    "SpectralData",
    (
        "eigenvalues",
        "multiplicities",
        "unit_circle",
        "n_plus",
        "n_minus",
        "eigenspaces",  # orthonormal column bases, one per eigenvalue
        "pairs",  # (i, j): eigenvalues[j] ≈ 1/conj(eigenvalues[i]), |eigenvalues[i]| > 1
    ),
)

CanonicalReport = namedtuple("CanonicalReport", ("unit_blocks", "hyperbolic_pairs"))


def _cluster(eigenvalues: np.ndarray, radius: float) -> List[np.ndarray]:
    if eigenvalues.size == 1:
        return [np.array([0])]
    points = np.column_stack([eigenvalues.real, eigenvalues.imag])
    labels = fcluster(linkage(points, method="single"), t=radius, criterion="distance")
    return [np.where(labels == label)[0] for label in np.unique(labels)]


def _on_unit_circle(lam: complex, tol: float) -> bool:
    return abs(abs(lam) - 1) <= tol * (1 + abs(lam))


def _match_pairs(eigenvalues, multiplicities, unit_circle) -> List[Tuple[int, int]]:
    outside = [i for i, lam in enumerate(eigenvalues) if not unit_circle[i] and abs(lam) > 1]
    inside = [i for i, lam in enumerate(eigenvalues) if not unit_circle[i] and abs(lam) < 1]
    if len(outside) != len(inside):
        raise ConditioningError("eigenvalues off the unit circle are not paired as λ, 1/λ̄")
    pairs = []
    remaining = list(inside)
    for i in outside:
        costs = [abs(eigenvalues[i] * np.conj(eigenvalues[j]) - 1) for j in remaining]
        j = remaining.pop(int(np.argmin(costs)))
        if multiplicities[i] != multiplicities[j]:
            raise ConditioningError(
                f"paired eigenvalues {eigenvalues[i]:.6g}, {eigenvalues[j]:.6g} "
                "have different multiplicities"
            )
        pairs.append((i, j))
    return pairs


def spectral_analysis(g, H: FormLike, tol: float = DEFAULT_TOL) -> SpectralData:
    """
    Clusters eigenvalues within 10·tol·‖g‖, certifies semisimplicity by rank and
    reports positivity multiplicities. On the unit circle n⁺, n⁻ are the inertia of H
    restricted to the eigenspace; off it |λ| > 1 counts as positive.
    """
    g, form = require_member(g, H, tol=tol)
    dim = g.shape[0]
    norm = max(1.0, inf_norm(g))
    radius = 10 * tol * norm

    raw = linalg.eigvals(g)
    clusters = _cluster(raw, radius)
    clusters.sort(key=lambda idx: (principal_arg(np.mean(raw[idx])), abs(np.mean(raw[idx]))))

    eigenvalues, multiplicities, eigenspaces = [], [], []
    for idx in clusters:
        lam = complex(np.mean(raw[idx]))
        k = idx.size
        _, s, vh = linalg.svd(g - lam * np.eye(dim))
        if s[dim - k] > np.sqrt(radius) * norm:
            raise NotSemisimpleError(
                f"eigenvalue {lam:.6g} has algebraic multiplicity {k} "
                f"but a smaller eigenspace (singular value {s[dim - k]:.3e})"
            )
        eigenspaces.append(vh[dim - k :].conj().T)
        eigenvalues.append(lam)
        multiplicities.append(k)

    basis = np.hstack(eigenspaces)
    if np.linalg.cond(basis) > 1 / np.sqrt(tol):
        raise NotSemisimpleError("eigenspaces are nearly dependent; g looks defective")

    unit_circle, n_plus, n_minus = [], [], []
    hnorm = max(1.0, inf_norm(form.matrix))
    for lam, k, V in zip(eigenvalues, multiplicities, eigenspaces):
        unit = _on_unit_circle(lam, tol)
        unit_circle.append(unit)
        if unit:
            w = linalg.eigvalsh(V.conj().T @ form.matrix @ V)
            if np.any(np.abs(w) <= tol * hnorm):
                raise ConditioningError(
                    f"form is degenerate on the eigenspace of {lam:.6g}: {w}"
                )
            plus = int(np.sum(w > 0))
            n_plus.append(plus)
            n_minus.append(k - plus)
        elif abs(lam) > 1:
            n_plus.append(k)
            n_minus.append(0)
        else:
            n_plus.append(0)
            n_minus.append(k)

    pairs = _match_pairs(eigenvalues, multiplicities, unit_circle)
    if sum(n_plus) != form.m:
        raise ConditioningError(
            f"positivity multiplicities sum to {sum(n_plus)}, expected {form.m}"
        )
    logger.debug(
        "spectral analysis",
        extra={"dim": dim, "clusters": len(eigenvalues), "pairs": len(pairs)},
    )
    return SpectralData(
        eigenvalues, multiplicities, unit_circle, n_plus, n_minus, eigenspaces, pairs
    )


def _canonical_columns(data: SpectralData, form: SignatureForm):
    H = form.matrix
    plus_cols, minus_cols, unit_blocks = [], [], []
    for lam, V, unit in zip(data.eigenvalues, data.eigenspaces, data.unit_circle):
        if not unit:
            continue
        d, W = linalg.eigh(V.conj().T @ H @ V)
        cols = (V @ W) / np.sqrt(np.abs(d))[np.newaxis, :]
        for j, dj in enumerate(d):
            if dj > 0:
                plus_cols.append((lam, cols[:, j]))
            else:
                minus_cols.append((lam, cols[:, j]))
    hyperbolic_cols, hyperbolic_pairs = [], []
    for i, j in data.pairs:
        lam, mu = data.eigenvalues[i], data.eigenvalues[j]
        X, Y = data.eigenspaces[i], data.eigenspaces[j]
        M = Y.conj().T @ H @ X
        Y = Y @ linalg.inv(M).conj().T
        for c in range(X.shape[1]):
            hyperbolic_cols.append((lam, mu, X[:, c], Y[:, c]))
            hyperbolic_pairs.append((lam, mu))
    for lam, _ in plus_cols:
        unit_blocks.append((lam, 1))
    for lam, _ in minus_cols:
        unit_blocks.append((lam, -1))
    return plus_cols, minus_cols, hyperbolic_cols, CanonicalReport(unit_blocks, hyperbolic_pairs)


def canonical_form(g, H: FormLike, tol: float = DEFAULT_TOL) -> Tuple[np.ndarray, CanonicalReport]:
    """
    C with C⁻¹gC = ⊕(λ) ⊕ diag(λ, 1/λ̄) blocks and C*HC = ⊕(+1) ⊕ (−1) ⊕ [[0,1],[1,0]].
    """
    g, form = require_member(g, H, tol=tol)
    data = spectral_analysis(g, form, tol=tol)
    plus_cols, minus_cols, hyperbolic_cols, report = _canonical_columns(data, form)

    columns, diagonal, pattern = [], [], []
    for lam, col in plus_cols:
        columns.append(col)
        diagonal.append(lam)
        pattern.append(1)
    for lam, col in minus_cols:
        columns.append(col)
        diagonal.append(lam)
        pattern.append(-1)
    C = np.column_stack(columns) if columns else np.zeros((g.shape[0], 0), dtype=complex)
    hyperbolic = []
    for lam, mu, x, y in hyperbolic_cols:
        C = np.column_stack([C, x, y])
        diagonal.extend([lam, mu])
        hyperbolic.append(len(diagonal) - 2)

    expected_form = np.diag(np.array(pattern + [0] * (2 * len(hyperbolic)), dtype=complex))
    for k in hyperbolic:
        expected_form[k, k + 1] = expected_form[k + 1, k] = 1

    scale = max(1.0, inf_norm(g)) * max(1.0, np.linalg.cond(C))
    check_tol = 1e3 * tol * scale
    form_residual = inf_norm(C.conj().T @ form.matrix @ C - expected_form)
    block_residual = inf_norm(linalg.solve(C, g @ C) - np.diag(diagonal))
    if form_residual > check_tol or block_residual > check_tol:
        raise ConditioningError(
            f"canonical form residuals {form_residual:.3e}, {block_residual:.3e} "
            f"exceed {check_tol:.3e}"
        )
    return C, report


def elliptic_part(g, H: FormLike, tol: float = DEFAULT_TOL) -> np.ndarray:
    """e(g) = C diag(λ/|λ|) C⁻¹"""
    g, form = require_member(g, H, tol=tol)
    C, report = canonical_form(g, form, tol=tol)
    diagonal = [lam for lam, _ in report.unit_blocks]
    for lam, mu in report.hyperbolic_pairs:
        diagonal.extend([lam, mu])
    units = np.array([lam / abs(lam) for lam in diagonal])
    return C @ np.diag(units) @ linalg.inv(C)


def positive_determinant(g, H: FormLike, tol: float = DEFAULT_TOL) -> complex:
    """
    det of e(g) restricted to the maximal positive subspace spanned by the +1 unit
    columns and (x + y)/√2 for each hyperbolic pair.
    """
    g, form = require_member(g, H, tol=tol)
    data = spectral_analysis(g, form, tol=tol)
    plus_cols, _, hyperbolic_cols, _ = _canonical_columns(data, form)
    columns = [col for _, col in plus_cols]
    columns += [(x + y) / np.sqrt(2) for _, _, x, y in hyperbolic_cols]
    if not columns:
        return 1.0 + 0j
    W = np.column_stack(columns)
    E = elliptic_part(g, form, tol=tol)
    restricted = linalg.lstsq(W, E @ W)[0]
    return complex(linalg.det(restricted))
