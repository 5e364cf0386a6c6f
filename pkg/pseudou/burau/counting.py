"""
Counts of roots ζ = exp((2k+1)πi/p) whose Burau parameter q = ζ⁴ leaves the
definiteness window of the genus-g braid group, and the lattice thresholds
built from them.
"""
import logging
from fractions import Fraction
from typing import List
from typing import Tuple
from collections import namedtuple

from sympy import isprime

from ..cyclo.roots import standard_root
from ..exceptions import DomainError

logger = logging.getLogger(__name__)

NoncompactCount = namedtuple(
    "NoncompactCount",
    ("g", "p", "count", "bound", "window_count", "window_bound", "true_count"),
)
ThresholdReport = namedtuple("ThresholdReport", ("checked", "exceptions", "nonstrict_holds"))


def _check_args(g: int, p: int):
    if g < 4:
        raise DomainError(f"genus must be at least 4, got {g}")
    if p < 5 or p % 2 == 0:
        raise DomainError(f"p must be odd and at least 5, got {p}")


def _inside_quoted(m: int, g: int, p: int) -> bool:
    """0 ≤ 4mπ/p ≤ 2π/g or |4mπ/p − 2π| ≤ 2π/g, in integers."""
    return 2 * m * g <= p or abs(2 * m - p) * g <= p


def _inside_true(m: int, g: int, p: int) -> bool:
    """|arg q| < 2π/g with arg reduced to (−π, π]."""
    r = (2 * m) % p
    return min(r, p - r) * g < p


def _is_principal(m: int, p: int) -> bool:
    """q = exp(2πi/n) for some n ≥ 3."""
    r = Fraction(2 * m, p) % 1
    return r != 0 and r.numerator == 1 and r.denominator >= 3


def principal_exponent(p: int) -> int:
    """Odd m with ζ = exp(mπi/p) the standard root A_p."""
    return standard_root(p).exponent


def count_noncompact_roots(g: int, p: int) -> NoncompactCount:
    _check_args(g, p)
    principal = principal_exponent(p)
    odd = [2 * k + 1 for k in range((p - 3) // 2 + 1)]
    inside = [m for m in odd if _inside_quoted(m, g, p)]
    count = sum(1 for m in odd if m != principal and not _inside_quoted(m, g, p))
    true_count = sum(
        1 for m in odd if not _inside_true(m, g, p) and not _is_principal(m, p)
    )
    bound = (2 * g - 3) * p // (4 * g) - 3
    window_bound = Fraction(3 * p + 6 * g, 4 * g)
    if count < bound:
        logger.warning("count below bound", extra={"g": g, "p": p, "count": count, "bound": bound})
    if true_count < bound:
        logger.info(
            "mod 2π count below bound",
            extra={"g": g, "p": p, "true_count": true_count, "bound": bound},
        )
    return NoncompactCount(g, p, count, bound, len(inside), window_bound, true_count)


def lattice_thresholds(g: int) -> Tuple[int, Fraction]:
    """(t_g, prime threshold 2g(g+9)/(2g−3))."""
    if g < 4:
        raise DomainError(f"genus must be at least 4, got {g}")
    return 1 + g // 2, Fraction(2 * g * (g + 9), 2 * g - 3)


def threshold_consistency(g_max: int = 20, p_max: int = 500) -> ThresholdReport:
    """
    For 4 ≤ g ≤ g_max and primes p ≡ 3 mod 4 above the threshold, checks
    ⌊(2g−3)p/4g⌋ − 3 > t_g. Failing pairs are listed; `nonstrict_holds` says
    whether ≥ survives everywhere.
    """
    checked = 0
    exceptions: List[Tuple[int, int]] = []
    nonstrict = True
    for g in range(4, g_max + 1):
        t_g, threshold = lattice_thresholds(g)
        for p in range(3, p_max + 1, 4):
            if p <= threshold or not isprime(p):
                continue
            checked += 1
            lower = (2 * g - 3) * p // (4 * g) - 3
            if lower <= t_g:
                exceptions.append((g, p))
            if lower < t_g:
                nonstrict = False
    return ThresholdReport(checked, exceptions, nonstrict)
