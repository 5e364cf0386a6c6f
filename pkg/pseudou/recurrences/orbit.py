import logging
from typing import List
from typing import Tuple
from collections import namedtuple

from sympy import isprime

from .spec import RecurrenceSpec
from .spec import extend
from .spec import state_vectors
from ..exceptions import ConsistencyError
from ..exceptions import DomainError

logger = logging.getLogger(__name__)

OrbitReport = namedtuple("OrbitReport", ("modulus", "preperiod", "period", "residues", "zeros"))


def mod_orbit(spec: RecurrenceSpec, modulus: int) -> OrbitReport:
    """
    Least preperiod and period of the state vector mod m, found by remembering
    every visited state. `residues` covers g = 1..preperiod+period; `zeros` are the
    classes of g mod period, past the preperiod, where the term vanishes.
    """
    seen = {}
    residues: List[int] = []
    for g, state in enumerate(state_vectors(spec, modulus), start=1):
        if state in seen:
            first = seen[state]
            preperiod, period = first - 1, g - first
            break
        seen[state] = g
        residues.append(state[0])
    zeros = sorted(
        {g % period for g in range(preperiod + 1, preperiod + period + 1) if residues[g - 1] == 0}
    )
    logger.debug(
        "orbit", extra={"modulus": modulus, "preperiod": preperiod, "period": period}
    )
    return OrbitReport(modulus, preperiod, period, residues, zeros)


def zero_locus(spec: RecurrenceSpec, modulus: int) -> Tuple[int, List[int]]:
    """(period, residue classes of g mod period with s_g ≡ 0 mod m), g past the preperiod."""
    report = mod_orbit(spec, modulus)
    return report.period, report.zeros


def invertibility_criterion(spec: RecurrenceSpec, p: int) -> bool:
    """
    P_ζ(0) invertible mod p; then the state orbit avoids zero and the terms
    cannot vanish on every residue class.
    """
    if not isprime(p):
        raise DomainError(f"criterion is stated for a prime modulus, got {p}")
    invertible = spec.constant_term % p != 0
    if invertible:
        period, zeros = zero_locus(spec, p)
        if len(zeros) == period:
            raise ConsistencyError(
                f"P(0) is invertible mod {p} but every class mod {period} vanishes"
            )
    return invertible


def periodic_from(spec: RecurrenceSpec, modulus: int, shift: int, g_start: int, g_end: int) -> bool:
    """s_{g+shift} ≡ s_g mod m for g_start ≤ g ≤ g_end, checked on exact terms."""
    values = extend(spec, g_end + shift)
    return all((values[g + shift - 1] - values[g - 1]) % modulus == 0 for g in range(g_start, g_end + 1))
