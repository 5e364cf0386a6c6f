"""
Roots of unity, the A_p normalization and the central-character orders.
"""
import math
import cmath
from typing import Tuple
from collections import namedtuple

from .number import CyclotomicNumber
from ..exceptions import DomainError


class RootOfUnity(namedtuple("RootOfUnity", ("order", "exponent"))):
    """exp(2πi·exponent/order), exponent reduced to [0, order)."""

    __slots__ = ()

    def __new__(cls, order: int, exponent: int):
        order = int(order)
        if order < 1:
            raise DomainError(f"order must be positive, got {order}")
        return super().__new__(cls, order, int(exponent) % order)

    def multiplicative_order(self) -> int:
        return self.order // math.gcd(self.exponent, self.order)

    def is_primitive(self) -> bool:
        return math.gcd(self.exponent, self.order) == 1

    def power(self, k: int) -> "RootOfUnity":
        return RootOfUnity(self.order, self.exponent * k)

    def conjugate(self) -> "RootOfUnity":
        return RootOfUnity(self.order, -self.exponent)

    def arg(self) -> float:
        """Argument in [0, 2π)."""
        return 2 * math.pi * self.exponent / self.order

    def to_complex(self) -> complex:
        return cmath.exp(1j * self.arg())

    def as_cyclotomic(self) -> CyclotomicNumber:
        return CyclotomicNumber.power_of_root(self.exponent, self.order)

    def to_json(self):
        return {"order": self.order, "exponent": self.exponent}


def _check_level(p: int) -> int:
    p = int(p)
    if p < 3:
        raise DomainError(f"p must be at least 3, got {p}")
    return p


def standard_root(p: int) -> RootOfUnity:
    """
    A_p as a primitive 2p-th root of unity:
    p even: −exp(2πi/2p); p ≡ 3 mod 4: exp(iπ(p−1)/2p); p ≡ 1 mod 4: exp(iπ(p+1)/2p).
    """
    p = _check_level(p)
    if p % 2 == 0:
        return RootOfUnity(2 * p, p + 1)
    if p % 4 == 3:
        return RootOfUnity(2 * p, (p - 1) // 2)
    return RootOfUnity(2 * p, (p + 1) // 2)


def theta(p: int) -> int:
    """Order of ζ_p^{−6−p(p+1)/2}."""
    p = _check_level(p)
    return p // math.gcd(p, (6 + p * (p + 1) // 2) % p)


def theta_case_table(p: int) -> int:
    p = _check_level(p)
    if p % 2:
        return p // 3 if p % 3 == 0 else p
    if p % 12 == 0:
        s = p // 12
        return 2 * s if s % 2 == 0 else s
    if p % 4 == 0:
        s = p // 4
        return 2 * s if s % 2 == 0 else s
    if p % 6 == 0:
        return 2 * (p // 6)
    return p


def quantum_integer(n: int, A: RootOfUnity) -> CyclotomicNumber:
    """
    [n] = (A^{2n} − A^{−2n})/(A² − A^{−2}) = Σ_{j<n} A^{2n−2−4j}, with [−n] = −[n].
    """
    if A.order % 2 or not A.is_primitive():
        raise DomainError(f"A must be a primitive root of even order, got {tuple(A)}")
    n = int(n)
    if n < 0:
        return -quantum_integer(-n, A)
    coeffs = [0] * A.order
    for j in range(n):
        coeffs[(A.exponent * (2 * n - 2 - 4 * j)) % A.order] += 1
    return CyclotomicNumber(A.order, coeffs)


def central_exponents(p: int, zeta: RootOfUnity) -> Tuple[RootOfUnity, RootOfUnity]:
    """
    Both central-character conventions for a primitive 2p-th root ζ:
    ζ^{−6} in Z[ζ_{2p}], and the scalar ζ_p^{−6−p(p+1)/2} whose order is θ(p).
    """
    p = _check_level(p)
    if zeta.order != 2 * p:
        raise DomainError(f"ζ must have order {2 * p}, got {zeta.order}")
    return zeta.power(-6), RootOfUnity(p, -6 - p * (p + 1) // 2)
