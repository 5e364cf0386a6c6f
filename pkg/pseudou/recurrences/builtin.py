"""
Characteristic polynomials P_ζ and leading signature terms for p = 5, 7, 9.
Only the first d terms are recurrence input.
"""
from typing import Dict
from typing import Tuple

from .spec import RecurrenceSpec
from ..exceptions import DomainError

_BUILTIN: Dict[Tuple[int, int], Tuple[Tuple[int, ...], Tuple[int, ...]]] = {
    (5, 1): ((1, -3, 3), (2, 3)),
    (5, 3): ((1, -5, 5), (2, 5)),
    (7, 1): ((1, -8, 23, -23), (3, 8, 18)),
    (7, 3): ((1, -14, 49, -49), (3, 14, 98)),
    (7, 5): ((1, -6, 23, -23), (3, 6, -10)),
    (9, 1): ((1, -16, 97, -257, 257), (4, 16, 62, 211)),
    (9, 5): ((1, -30, 243, -729, 729), (4, 30, 414, 7317)),
    (9, 7): ((1, -10, 101, -257, 257), (4, 10, -102, -1259)),
}


def builtin_keys():
    return sorted(_BUILTIN)


def builtin_spec(p: int, zeta_exponent: int) -> RecurrenceSpec:
    try:
        char_poly, initial = _BUILTIN[(p, zeta_exponent)]
    except KeyError:
        raise DomainError(f"no tabulated recurrence for (p, ζ exponent) = ({p}, {zeta_exponent})")
    return RecurrenceSpec(char_poly, initial, (p, zeta_exponent))
