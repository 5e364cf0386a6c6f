"""
Exact elements of the cyclotomic ring Z[ζ_N].
"""
from typing import Tuple
from typing import Sequence

import mpmath
from cachetools import cached
from cachetools import LRUCache
from sympy import Poly
from sympy import symbols
from sympy import cyclotomic_poly

from ..exceptions import DomainError
from ..exceptions import OrderMismatchError

_X = symbols("x")


@cached(cache=LRUCache(maxsize=256))
def _cyclotomic_poly(order: int) -> Poly:
    return Poly(cyclotomic_poly(order, _X), _X, domain="ZZ")


class CyclotomicNumber:
    """
    Integer combination Σ c_k ζ_N^k with ζ_N = exp(2πi/N), stored on the
    full cyclic basis of length N. Equality is decided after reduction
    modulo the N-th cyclotomic polynomial.
    """

    __slots__ = ("_order", "_coeffs", "_canonical")

    def __init__(self, order: int, coeffs: Sequence[int] = ()):
        if int(order) < 1:
            raise DomainError(f"order must be positive, got {order}")
        self._order = int(order)
        reduced = [0] * self._order
        for k, c in enumerate(coeffs):
            reduced[k % self._order] += int(c)
        self._coeffs = tuple(reduced)
        self._canonical = None

    @classmethod
    def zero(cls, order: int) -> "CyclotomicNumber":
        return cls(order)

    @classmethod
    def one(cls, order: int) -> "CyclotomicNumber":
        return cls(order, [1])

    @classmethod
    def power_of_root(cls, k: int, order: int, coefficient: int = 1) -> "CyclotomicNumber":
        """coefficient·ζ_order^k"""
        coeffs = [0] * order
        coeffs[k % order] = coefficient
        return cls(order, coeffs)

    @property
    def order(self) -> int:
        return self._order

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    def _check(self, other) -> "CyclotomicNumber":
        if isinstance(other, int):
            return CyclotomicNumber(self._order, [other])
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        if other.order != self._order:
            raise OrderMismatchError(
                f"cannot combine Z[ζ_{self._order}] with Z[ζ_{other.order}]"
            )
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(
            self._order, [a + b for a, b in zip(self._coeffs, other.coeffs)]
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self._order, [-a for a in self._coeffs])

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return CyclotomicNumber(
            self._order, [a - b for a, b in zip(self._coeffs, other.coeffs)]
        )

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        n = self._order
        result = [0] * n
        right = [(j, b) for j, b in enumerate(other.coeffs) if b]
        for i, a in enumerate(self._coeffs):
            if not a:
                continue
            for j, b in right:
                result[(i + j) % n] += a * b
        return CyclotomicNumber(n, result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise DomainError("negative powers are not ring elements in general")
        result = CyclotomicNumber.one(self._order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def canonical(self) -> Tuple[int, ...]:
        """Coefficients (ascending powers) of the remainder modulo Φ_N."""
        if self._canonical is None:
            phi = _cyclotomic_poly(self._order)
            poly = Poly(list(reversed(self._coeffs)), _X, domain="ZZ")
            rem = poly.rem(phi)
            coeffs = [int(c) for c in reversed(rem.all_coeffs())]
            coeffs += [0] * (phi.degree() - len(coeffs))
            self._canonical = tuple(coeffs)
        return self._canonical

    def is_zero(self) -> bool:
        return not any(self.canonical())

    def conjugate(self) -> "CyclotomicNumber":
        n = self._order
        return CyclotomicNumber(n, [self._coeffs[(-k) % n] for k in range(n)])

    def is_real(self) -> bool:
        return self == self.conjugate()

    def to_complex(self, precision_bits: int = 53) -> mpmath.mpc:
        with mpmath.workprec(precision_bits):
            return mpmath.fsum(
                c * mpmath.expjpi(mpmath.mpf(2 * k) / self._order)
                for k, c in enumerate(self._coeffs)
                if c
            ) + mpmath.mpc(0)

    def __complex__(self):
        return complex(self.to_complex())

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicNumber(self._order, [other])
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self._order == other.order and self.canonical() == other.canonical()

    def __hash__(self):
        return hash((self._order, self.canonical()))

    def __repr__(self):
        terms = [f"{c}*z^{k}" for k, c in enumerate(self._coeffs) if c]
        return f"CyclotomicNumber(N={self._order}, {' + '.join(terms) or '0'})"

    def to_json(self):
        return {"order": self._order, "coeffs": list(self._coeffs)}
