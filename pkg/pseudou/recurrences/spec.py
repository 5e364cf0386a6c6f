"""
Integer linear recurrences given by a monic characteristic polynomial and
initial terms at g = 1, ..., d.
"""
import math
from typing import Dict
from typing import List
from typing import Iterator
from typing import Optional
from typing import Sequence
from typing import Tuple
from collections import namedtuple

import numpy as np
import sympy

from ..exceptions import DomainError
from ..exceptions import InputError
from ..utils.serializers import big_int_from_json

MAX_GROUP_ORDER = 1 << 20


class RecurrenceSpec(namedtuple("RecurrenceSpec", ("char_poly", "initial", "label"))):
    """
    char_poly: coefficients in descending powers, leading 1;
    initial: terms at g = 1..d; label: (p, zeta exponent) or None.
    """

    __slots__ = ()

    def __new__(cls, char_poly: Sequence[int], initial: Sequence[int], label: Optional[Tuple[int, int]] = None):
        char_poly = tuple(int(c) for c in char_poly)
        initial = tuple(int(s) for s in initial)
        if not char_poly or char_poly[0] != 1:
            raise DomainError(f"characteristic polynomial must be monic, got {char_poly}")
        if len(initial) != len(char_poly) - 1:
            raise DomainError(
                f"need {len(char_poly) - 1} initial terms for degree {len(char_poly) - 1}, got {len(initial)}"
            )
        return super().__new__(cls, char_poly, initial, tuple(label) if label else None)

    @property
    def degree(self) -> int:
        return len(self.char_poly) - 1

    @property
    def constant_term(self) -> int:
        return self.char_poly[-1]

    def coefficient(self, i: int) -> int:
        """Coefficient of x^i."""
        return self.char_poly[self.degree - i]

    def polynomial(self) -> sympy.Poly:
        return sympy.Poly(self.char_poly, sympy.Symbol("x"), domain="ZZ")

    def to_json(self):
        return spec_to_json(self)


def _step(spec: RecurrenceSpec, window: Sequence[int]) -> int:
    """s_{g+d} = −Σ c_i s_{g+i}"""
    return -sum(spec.coefficient(i) * window[i] for i in range(spec.degree))


def extend(spec: RecurrenceSpec, g_max: int) -> List[int]:
    """Exact terms for g = 1..g_max."""
    if g_max < 1:
        raise DomainError(f"g_max must be positive, got {g_max}")
    values = list(spec.initial)
    while len(values) < g_max:
        values.append(_step(spec, values[-spec.degree :]))
    return values[:g_max]


def companion_matrix(spec: RecurrenceSpec) -> sympy.Matrix:
    """M with (s_{g+1}, ..., s_{g+d}) = M (s_g, ..., s_{g+d−1})."""
    d = spec.degree
    M = sympy.zeros(d, d)
    for i in range(d - 1):
        M[i, i + 1] = 1
    for i in range(d):
        M[d - 1, i] = -spec.coefficient(i)
    return M


def state_vectors(spec: RecurrenceSpec, modulus: int) -> Iterator[Tuple[int, ...]]:
    """States (s_g, ..., s_{g+d−1}) mod m for g = 1, 2, ..."""
    if modulus < 2:
        raise DomainError(f"modulus must be at least 2, got {modulus}")
    window = [s % modulus for s in spec.initial]
    while True:
        yield tuple(window)
        window = window[1:] + [_step(spec, window) % modulus]


def companion_order(spec: RecurrenceSpec, modulus: int) -> Optional[int]:
    """Order of M in GL(d, Z/m), None when M is singular mod m."""
    M = companion_matrix(spec)
    if math.gcd(int(M.det()), modulus) != 1:
        return None
    base = np.array(M.tolist(), dtype=np.int64) % modulus
    eye = np.eye(spec.degree, dtype=np.int64)
    power = base.copy()
    for k in range(1, MAX_GROUP_ORDER + 1):
        if np.array_equal(power, eye):
            return k
        power = (power @ base) % modulus
    return None


def spec_to_json(spec: RecurrenceSpec) -> Dict:
    data = {"char_poly": list(spec.char_poly), "initial": list(spec.initial)}
    if spec.label:
        data["label"] = {"p": spec.label[0], "zeta_exponent": spec.label[1]}
    return data


def spec_from_json(data: Dict) -> RecurrenceSpec:
    if not isinstance(data, dict) or "char_poly" not in data or "initial" not in data:
        raise InputError("recurrence spec needs 'char_poly' and 'initial'")
    label = data.get("label")
    if label is not None:
        label = (int(label["p"]), int(label["zeta_exponent"]))
    return RecurrenceSpec(
        [big_int_from_json(c) for c in data["char_poly"]],
        [big_int_from_json(s) for s in data["initial"]],
        label,
    )
