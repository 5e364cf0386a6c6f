"""
Signs of the skein symbols at a primitive root A of order 2p:
⟨a⟩ = (−1)^a [a+1] and
⟨a,b,c⟩ = (−1)^{i+j+k} [i+j+k+1]! [i]! [j]! [k]! / ([j+k]! [i+k]! [i+j]!).
"""
from typing import Dict
from typing import Tuple

from cachetools import cached
from cachetools import LRUCache

from ..cyclo import RootOfUnity
from ..cyclo import quantum_integer
from ..cyclo import sign_of_real
from ..exceptions import DegenerateFormError
from ..exceptions import DomainError


@cached(cache=LRUCache(maxsize=8192))
def quantum_integer_sign(n: int, A: RootOfUnity) -> int:
    return sign_of_real(quantum_integer(n, A))


@cached(cache=LRUCache(maxsize=8192))
def quantum_factorial_sign(n: int, A: RootOfUnity) -> int:
    sign = 1
    for k in range(1, n + 1):
        sign *= quantum_integer_sign(k, A)
    return sign


def loop_sign(a: int, A: RootOfUnity) -> int:
    """sign ⟨a⟩"""
    sign = (-1) ** a * quantum_integer_sign(a + 1, A)
    if sign == 0:
        raise DegenerateFormError(f"⟨{a}⟩ vanishes at {tuple(A)}")
    return sign


def theta_sign(a: int, b: int, c: int, A: RootOfUnity) -> int:
    """sign ⟨a,b,c⟩; the inverse factorials contribute their own sign."""
    if (a + b + c) % 2:
        raise DomainError(f"odd color sum in ({a}, {b}, {c})")
    i, j, k = (b + c - a) // 2, (a + c - b) // 2, (a + b - c) // 2
    if min(i, j, k) < 0:
        raise DomainError(f"({a}, {b}, {c}) violates the triangle inequality")
    sign = (-1) ** (i + j + k)
    for n in (i + j + k + 1, i, j, k, j + k, i + k, i + j):
        sign *= quantum_factorial_sign(n, A)
    if sign == 0:
        raise DegenerateFormError(f"⟨{a},{b},{c}⟩ vanishes at {tuple(A)}")
    return sign


def check_root(p: int, zeta: RootOfUnity) -> RootOfUnity:
    if zeta.order != 2 * p or not zeta.is_primitive():
        raise DomainError(f"ζ must be a primitive root of order {2 * p}, got {tuple(zeta)}")
    return zeta


class SignTable:
    """Signs of all loop and vertex symbols for the admissible colors at (p, ζ)."""

    def __init__(self, p: int, zeta: RootOfUnity, colors, triples):
        check_root(p, zeta)
        self.p = p
        self.zeta = zeta
        self.edge: Dict[int, int] = {c: loop_sign(c, zeta) for c in colors}
        self.vertex: Dict[Tuple[int, int, int], int] = {
            t: theta_sign(*t, zeta) for t in triples
        }
