import logging

import numpy as np
import mpmath

from .number import CyclotomicNumber
from ..config import DEFAULT_PRECISION
from ..exceptions import DomainError
from ..exceptions import ConditioningError

logger = logging.getLogger(__name__)

MAX_PRECISION_BITS = 1 << 14


def _float_estimate(x: CyclotomicNumber):
    k = np.nonzero(x.coeffs)[0]
    if k.size == 0:
        return 0.0, 0.0
    c = np.array([float(x.coeffs[i]) for i in k])
    value = float(np.sum(c * np.cos(2 * np.pi * k / x.order)))
    bound = 8 * np.finfo(float).eps * (float(np.sum(np.abs(c))) + 1.0) * (k.size + 1)
    return value, bound


def _mp_estimate(x: CyclotomicNumber, bits: int):
    with mpmath.workprec(bits):
        terms = [
            c * mpmath.cospi(mpmath.mpf(2 * k) / x.order)
            for k, c in enumerate(x.coeffs)
            if c
        ]
        value = mpmath.fsum(terms)
        bound = (sum(abs(c) for c in x.coeffs) + 1) * (len(terms) + 1)
        bound = mpmath.mpf(bound) * mpmath.ldexp(1, 4 - bits)
        return value, bound


def sign_of_real(x: CyclotomicNumber, precision_bits: int = DEFAULT_PRECISION) -> int:
    """
    Sign of a real cyclotomic number under ζ_N ↦ exp(2πi/N).
    Returns 0 only for the exact zero element.

    :param x: real element of Z[ζ_N]
    :param precision_bits: first multi-precision level tried after doubles
    """
    if not x.is_real():
        raise DomainError(f"sign requested for a non-real number {x!r}")
    if x.is_zero():
        return 0

    value, bound = _float_estimate(x)
    if abs(value) > bound:
        return 1 if value > 0 else -1

    bits = max(int(precision_bits), 64)
    while bits <= MAX_PRECISION_BITS:
        value, bound = _mp_estimate(x, bits)
        if abs(value) > bound:
            return 1 if value > 0 else -1
        logger.debug(
            "escalating sign precision",
            extra={"order": x.order, "precision_bits": 2 * bits},
        )
        bits *= 2
    raise ConditioningError(
        f"sign of a nonzero element not resolved at {MAX_PRECISION_BITS} bits"
    )
