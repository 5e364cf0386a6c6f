import pytest

from ..cyclo import CyclotomicNumber
from ..cyclo import RootOfUnity
from ..cyclo import central_exponents
from ..cyclo import quantum_integer
from ..cyclo import sign_of_real
from ..cyclo import standard_root
from ..cyclo import theta
from ..cyclo import theta_case_table
from ..cyclo import sign as cyclo_sign
from ..exceptions import ConditioningError
from ..exceptions import DomainError
from ..exceptions import OrderMismatchError


def _zeta(k: int, order: int = 5) -> CyclotomicNumber:
    return CyclotomicNumber.power_of_root(k, order)


class TestCyclotomicNumber:
    @pytest.mark.timeout(30)
    def test_sum_of_roots_vanishes(self):
        total = sum((_zeta(k) for k in range(5)), CyclotomicNumber.zero(5))
        assert total.is_zero()
        assert total == 0

    @pytest.mark.timeout(30)
    def test_golden_ratio_identities(self):
        sqrt5 = _zeta(1) + _zeta(4) - _zeta(2) - _zeta(3)
        assert sqrt5 * sqrt5 == 5
        assert (_zeta(1) + _zeta(4)) * (_zeta(2) + _zeta(3)) == -1
        assert sqrt5.is_real()
        assert abs(complex(sqrt5) - 5 ** 0.5) < 1e-12

    @pytest.mark.timeout(30)
    def test_exponents_reduce_mod_order(self):
        assert CyclotomicNumber(5, [0, 0, 0, 0, 0, 1]) == _zeta(0)
        assert _zeta(7) == _zeta(2)
        assert hash(_zeta(7)) == hash(_zeta(2))

    @pytest.mark.timeout(30)
    def test_power_and_conjugate(self):
        z = _zeta(1, 7)
        assert z ** 7 == 1
        assert z.conjugate() == _zeta(6, 7)
        assert not z.is_real()
        with pytest.raises(DomainError):
            z ** -1

    @pytest.mark.timeout(30)
    def test_mixed_orders_rejected(self):
        with pytest.raises(OrderMismatchError):
            _zeta(1, 5) + _zeta(1, 7)


class TestSign:
    @pytest.mark.timeout(30)
    def test_signs_of_cosines(self):
        assert sign_of_real(_zeta(1) + _zeta(4)) == 1
        assert sign_of_real(_zeta(2) + _zeta(3)) == -1
        assert sign_of_real(CyclotomicNumber.zero(5)) == 0

    @pytest.mark.timeout(30)
    def test_quantum_integer_sign(self):
        assert sign_of_real(quantum_integer(2, RootOfUnity(10, 3))) == -1
        assert sign_of_real(quantum_integer(2, RootOfUnity(10, 1))) == 1
        assert quantum_integer(-2, RootOfUnity(10, 1)) == -quantum_integer(2, RootOfUnity(10, 1))

    @pytest.mark.timeout(30)
    def test_non_real_rejected(self):
        with pytest.raises(DomainError):
            sign_of_real(_zeta(1))

    @pytest.mark.timeout(30)
    def test_escalates_to_multiprecision(self, mocker):
        mocker.patch.object(cyclo_sign, "_float_estimate", return_value=(0.0, 1.0))
        spy = mocker.spy(cyclo_sign, "_mp_estimate")
        assert sign_of_real(_zeta(2) + _zeta(3)) == -1
        assert spy.call_count >= 1

    @pytest.mark.timeout(30)
    def test_unresolved_sign_raises(self, mocker):
        mocker.patch.object(cyclo_sign, "_float_estimate", return_value=(0.0, 1.0))
        mocker.patch.object(cyclo_sign, "_mp_estimate", return_value=(0.0, 1.0))
        with pytest.raises(ConditioningError):
            sign_of_real(_zeta(1) + _zeta(4))


class TestRoots:
    @pytest.mark.timeout(30)
    def test_root_normalization(self):
        assert RootOfUnity(10, 13).exponent == 3
        assert RootOfUnity(10, 4).multiplicative_order() == 5
        assert not RootOfUnity(10, 4).is_primitive()
        assert RootOfUnity(10, 3).conjugate() == RootOfUnity(10, 7)

    @pytest.mark.timeout(30)
    def test_standard_root(self):
        assert standard_root(5) == RootOfUnity(10, 3)
        assert standard_root(7) == RootOfUnity(14, 3)
        assert standard_root(6) == RootOfUnity(12, 7)
        for p in range(3, 40):
            assert standard_root(p).is_primitive()

    @pytest.mark.timeout(30)
    def test_theta(self):
        assert theta(9) == 3
        assert theta(6) == 2
        assert theta(5) == 5
        assert all(theta(p) == theta_case_table(p) for p in range(3, 200))
        with pytest.raises(DomainError):
            theta(2)

    @pytest.mark.timeout(30)
    def test_central_exponents(self):
        rho_c, scalar = central_exponents(5, RootOfUnity(10, 1))
        assert rho_c == RootOfUnity(10, 4)
        assert scalar == RootOfUnity(5, 4)
        assert scalar.multiplicative_order() == theta(5)
        with pytest.raises(DomainError):
            central_exponents(5, RootOfUnity(12, 1))

    @pytest.mark.timeout(30)
    def test_quantum_integer_domain(self):
        with pytest.raises(DomainError):
            quantum_integer(2, RootOfUnity(5, 1))
        with pytest.raises(DomainError):
            quantum_integer(2, RootOfUnity(10, 2))
