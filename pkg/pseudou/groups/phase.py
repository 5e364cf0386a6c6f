# pylint: disable=invalid-name

import numpy as np
from scipy import linalg

from .forms import FormLike
from .forms import as_form
from .forms import require_member
from .spectral import spectral_analysis
from ..config import DEFAULT_TOL
from ..exceptions import DecompositionError
from ..utils.general import inf_norm
from ..utils.general import principal_arg


def dgw_phase(g, H: FormLike, tol: float = DEFAULT_TOL) -> float:
    """
    (1/2π) Σ n⁺(λ) arg λ mod 1, arg in [0, 2π).

    :param g: semisimple member of U(m,n) for the form H
    :param H: SignatureForm, Hermitian matrix or (m, n) for the standard form
    """
    data = spectral_analysis(g, H, tol=tol)
    total = sum(
        n_plus * principal_arg(lam) for lam, n_plus in zip(data.eigenvalues, data.n_plus)
    )
    phase = (total / (2 * np.pi)) % 1.0
    if phase > 1 - tol:
        phase = 0.0
    return float(phase)


def cartan_decomposition(g, H: FormLike, tol: float = DEFAULT_TOL):
    """
    g = k·s in the standard picture, s = (g*g)^{1/2}, k ∈ U(m) × U(n).
    Non-standard forms are first conjugated into I_{m,n}.
    """
    g, form = require_member(g, H, tol=tol)
    g = form.to_standard(g)
    k, s = linalg.polar(g, side="right")
    m = form.m
    scale = max(1.0, inf_norm(g))
    off = max(inf_norm(k[:m, m:]), inf_norm(k[m:, :m]))
    if off > 10 * tol * scale:
        raise DecompositionError(f"unitary polar factor is not block-diagonal, off-block {off:.3e}")
    return k, s


def v0(g, H: FormLike, tol: float = DEFAULT_TOL) -> complex:
    """det of the U(m)-block of the Cartan K-factor."""
    g = np.asarray(g, dtype=complex)
    form = as_form(H, g.shape[0], tol=tol)
    k, _ = cartan_decomposition(g, form, tol=tol)
    if form.m == 0:
        return 1.0 + 0j
    value = complex(linalg.det(k[: form.m, : form.m]))
    return value / abs(value)
