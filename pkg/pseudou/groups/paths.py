"""
Sampled paths in SU(m,n) or Sp(2n) starting at the identity, and the lifts of
phase functions along them.
"""
import logging
from typing import List
from typing import Callable
from typing import Sequence
from typing import Optional

import numpy as np
from scipy import linalg

from .forms import FormLike
from .forms import SignatureForm
from .forms import as_form
from .phase import v0
from ..config import DEFAULT_TOL
from ..exceptions import DomainError
from ..exceptions import SamplingError
from ..utils.general import inf_norm

logger = logging.getLogger(__name__)

MAX_STEP_ANGLE = np.pi / 2


class GroupPath:
    """
    Ordered samples g_0 = I, g_1, ..., g_N. `form` is a SignatureForm for
    pseudo-unitary paths or None for real symplectic ones.
    """

    def __init__(self, samples: Sequence[np.ndarray], form: Optional[SignatureForm] = None):
        if not samples:
            raise DomainError("a path needs at least one sample")
        self._samples = [np.asarray(s, dtype=complex) for s in samples]
        self._form = form

    @classmethod
    def one_parameter(
        cls, generators: Sequence[np.ndarray], steps: int, form: FormLike = None
    ) -> "GroupPath":
        """t ↦ exp(tX_1)·exp(tX_2)···, t ∈ [0, 1]."""
        if steps < 1:
            raise DomainError(f"steps must be positive, got {steps}")
        generators = [np.asarray(x, dtype=complex) for x in generators]
        dim = generators[0].shape[0]
        samples = []
        for t in np.linspace(0.0, 1.0, steps + 1):
            g = np.eye(dim, dtype=complex)
            for x in generators:
                g = g @ linalg.expm(t * x)
            samples.append(g)
        return cls(samples, as_form(form, dim) if form is not None else None)

    @classmethod
    def from_function(cls, func: Callable[[float], np.ndarray], steps: int, form: FormLike = None):
        samples = [func(t) for t in np.linspace(0.0, 1.0, steps + 1)]
        dim = np.asarray(samples[0]).shape[0]
        return cls(samples, as_form(form, dim) if form is not None else None)

    @classmethod
    def loop_generator(cls, m: int, n: int, steps: int = 64) -> "GroupPath":
        """t ↦ diag(e^{2πit}, I_{m−1}, e^{−2πit}, I_{n−1}), the generator of π₁."""
        if m < 1 or n < 1:
            raise DomainError(f"loop generator needs m, n ≥ 1, got ({m}, {n})")

        def sample(t):
            d = np.ones(m + n, dtype=complex)
            d[0] = np.exp(2j * np.pi * t)
            d[m] = np.exp(-2j * np.pi * t)
            return np.diag(d)

        return cls.from_function(sample, steps, form=SignatureForm.standard(m, n))

    @property
    def samples(self) -> List[np.ndarray]:
        return self._samples

    @property
    def form(self) -> Optional[SignatureForm]:
        return self._form

    @property
    def start(self) -> np.ndarray:
        return self._samples[0]

    @property
    def end(self) -> np.ndarray:
        return self._samples[-1]

    def is_closed(self, tol: float = DEFAULT_TOL) -> bool:
        return inf_norm(self.end - self.start) <= tol * max(1.0, inf_norm(self.start))

    def left_translate(self, g: np.ndarray) -> "GroupPath":
        return GroupPath([g @ s for s in self._samples], self._form)

    def __len__(self):
        return len(self._samples)

    def to_json(self):
        return {"form": self._form, "samples": self._samples}


def concatenate(path1: GroupPath, path2: GroupPath) -> GroupPath:
    """path1 followed by end(path1)·path2."""
    tail = path2.left_translate(path1.end).samples[1:]
    return GroupPath(path1.samples + tail, path1.form or path2.form)


def unwrap_phases(values: Sequence[complex]) -> float:
    """Continuous argument accumulated along unit complex values, in turns."""
    angles = np.angle(np.asarray(values, dtype=complex))
    steps = np.angle(np.exp(1j * np.diff(angles)))
    if steps.size and np.max(np.abs(steps)) >= MAX_STEP_ANGLE:
        worst = int(np.argmax(np.abs(steps)))
        raise SamplingError(
            f"phase jumps by {steps[worst]:.3f} rad between samples {worst} and {worst + 1}"
        )
    return float((angles[0] + np.sum(steps)) / (2 * np.pi))


def _check_starts_at_identity(path: GroupPath, tol: float):
    eye = np.eye(path.start.shape[0])
    if inf_norm(path.start - eye) > tol:
        raise DomainError("path must start at the identity")


def lift_phase(path: GroupPath, tol: float = DEFAULT_TOL) -> float:
    """Continuous lift of arg v₀ / 2π along the path, normalized to 0 at the identity."""
    if path.form is None:
        raise DomainError("lift_phase needs a pseudo-unitary path")
    _check_starts_at_identity(path, tol)
    values = [v0(s, path.form, tol=tol) for s in path.samples]
    return unwrap_phases(values)


def _ends_at(path: GroupPath, g: np.ndarray, tol: float, name: str):
    if inf_norm(path.end - g) > tol * max(1.0, inf_norm(g)):
        raise DomainError(f"{name} does not end at the given element")


def cocycle(g1, g2, path1: GroupPath, path2: GroupPath, tol: float = DEFAULT_TOL) -> float:
    """
    Φ(g̃₁) + Φ(g̃₂) − Φ(g̃₁g̃₂) with g̃₁g̃₂ represented by path1 then g₁·path2,
    so that exp(2πi c) = v₀(g₁)v₀(g₂)/v₀(g₁g₂).
    """
    g1 = np.asarray(g1, dtype=complex)
    g2 = np.asarray(g2, dtype=complex)
    _ends_at(path1, g1, tol, "path1")
    _ends_at(path2, g2, tol, "path2")
    value = lift_phase(path1, tol) + lift_phase(path2, tol)
    value -= lift_phase(concatenate(path1, path2), tol)
    logger.debug("cocycle", extra={"value": value, "samples": len(path1) + len(path2)})
    return value
