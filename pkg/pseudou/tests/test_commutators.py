import numpy as np
import pytest
from scipy import linalg

from .helpers import elliptic_diagonal
from .helpers import gen_member
from .helpers import hyperbolic_element
from .helpers import isotropic_vector
from .helpers import relative_residual
from .helpers import rng
from ..commutators import QuasiReflection
from ..commutators import Transvection
from ..commutators import build_quasi_reflection
from ..commutators import build_transvection
from ..commutators import commutator_decomposition
from ..commutators import complete_hyperbolic_pair
from ..commutators import factor_product
from ..commutators import hyperbolic_pair
from ..commutators import map_isotropic_line
from ..commutators import quasireflections_to_transvections
from ..commutators import reflection_factorization
from ..commutators import split_factors
from ..commutators import su11_to_transvections
from ..commutators import transvection_to_commutator
from ..exceptions import DomainError
from ..exceptions import MembershipError
from ..groups import SignatureForm
from ..groups.forms import hermitian_product
from ..groups.forms import quadratic_value
from ..utils.general import inf_norm


def _form(m, n):
    return SignatureForm.standard(m, n).matrix


def _commutator(A, B):
    return A @ B @ linalg.inv(A) @ linalg.inv(B)


class TestElements:
    @pytest.mark.timeout(30)
    def test_transvection_identities(self, rng):
        H = _form(2, 1)
        u = isotropic_vector(2, 1, rng)
        t_a = Transvection(u, 0.7j).matrix(H)
        t_b = Transvection(u, -0.2j).matrix(H)
        assert np.allclose(t_a @ t_b, Transvection(u, 0.5j).matrix(H))
        assert np.allclose(t_a.conj().T @ H @ t_a, H)
        assert linalg.det(t_a) == pytest.approx(1.0)
        assert np.allclose(Transvection(u, 0.7j).inverse().matrix(H), linalg.inv(t_a))
        x = rng.normal(size=3) + 1j * rng.normal(size=3)
        assert np.allclose(Transvection(u, 0.7j).apply(x, H), t_a @ x)

    @pytest.mark.timeout(30)
    def test_quasi_reflection(self, rng):
        H = _form(2, 1)
        w = rng.normal(size=3) + 1j * rng.normal(size=3)
        a = np.exp(0.9j)
        s = QuasiReflection(w, a).matrix(H)
        assert np.allclose(s.conj().T @ H @ s, H)
        assert linalg.det(s) == pytest.approx(a)
        assert np.allclose(s @ w, a * w)

    @pytest.mark.timeout(30)
    def test_conjugation(self, rng, gen_member):
        H = _form(2, 1)
        u = isotropic_vector(2, 1, rng)
        M, _, _ = gen_member(2, 1)
        tau = Transvection(u, 0.4j)
        expected = M @ tau.matrix(H) @ linalg.inv(M)
        assert relative_residual(tau.conjugate_by(M).matrix(H), expected) < 1e-10

    @pytest.mark.timeout(30)
    def test_builders_validate(self, rng):
        u = isotropic_vector(1, 1, rng)
        assert np.allclose(build_transvection(u, 0.3j, (1, 1)), Transvection(u, 0.3j).matrix(_form(1, 1)))
        with pytest.raises(DomainError):
            build_transvection(u, 0.3, (1, 1))
        with pytest.raises(DomainError):
            build_transvection(np.array([1.0, 0.0]), 0.3j, (1, 1))
        with pytest.raises(DomainError):
            build_quasi_reflection(u, 1j, (1, 1))
        with pytest.raises(DomainError):
            build_quasi_reflection(np.array([1.0, 0.0]), 2.0, (1, 1))

    @pytest.mark.timeout(30)
    def test_factor_product_order(self, rng):
        H = _form(1, 1)
        first = QuasiReflection(np.array([1.0, 0.0]), 1j)
        second = Transvection(isotropic_vector(1, 1, rng), 0.5j)
        expected = first.matrix(H) @ second.matrix(H)
        assert np.allclose(factor_product([first, second], H, 2), expected)


class TestPlanes:
    @pytest.mark.timeout(30)
    def test_hyperbolic_pair(self):
        H = _form(2, 1)
        plane = np.eye(3, dtype=complex)[:, [0, 2]]
        u, v = hyperbolic_pair(plane, H)
        assert abs(quadratic_value(u, H)) < 1e-12
        assert abs(quadratic_value(v, H)) < 1e-12
        assert abs(hermitian_product(v, u, H) - 1) < 1e-12
        with pytest.raises(DomainError):
            hyperbolic_pair(np.eye(3, dtype=complex)[:, [0, 1]], H)

    @pytest.mark.timeout(30)
    def test_complete_hyperbolic_pair(self, rng):
        H = _form(2, 2)
        u = isotropic_vector(2, 2, rng)
        v = complete_hyperbolic_pair(u, H)
        assert abs(quadratic_value(v, H)) < 1e-10
        assert abs(hermitian_product(v, u, H) - 1) < 1e-10

    @pytest.mark.timeout(30)
    def test_map_isotropic_line(self, rng):
        H = _form(2, 2)
        generic = (isotropic_vector(2, 2, rng), isotropic_vector(2, 2, rng))
        orthogonal = (np.array([1, 0, 1, 0]) / np.sqrt(2), np.array([0, 1, 0, 1]) / np.sqrt(2))
        for u, v in (generic, orthogonal):
            factors = map_isotropic_line(u.astype(complex), v.astype(complex), H, rng=rng)
            assert 1 <= len(factors) <= 2
            image = factor_product(factors, H, 4) @ u
            assert np.linalg.matrix_rank(np.column_stack([image, v]), tol=1e-8) == 1
        assert map_isotropic_line(generic[0], 2j * generic[0], H) == []

    @pytest.mark.timeout(30)
    def test_su11_factorization(self):
        H = _form(1, 1)
        u, v = hyperbolic_pair(np.eye(2, dtype=complex), H)
        for g in (hyperbolic_element(0.7), hyperbolic_element(-1.1), -np.eye(2, dtype=complex)):
            factors = su11_to_transvections(g, u, v, H)
            assert relative_residual(factor_product(factors, H, 2), g) < 1e-9

    @pytest.mark.timeout(30)
    def test_su11_parameters_stay_bounded(self):
        H = _form(1, 1)
        u, v = hyperbolic_pair(np.eye(2, dtype=complex), H)
        elements = [
            elliptic_diagonal(1e-7, -1e-7),
            elliptic_diagonal(np.pi / 2, -np.pi / 2),
            elliptic_diagonal(np.pi / 2 + 1e-3, -np.pi / 2 - 1e-3),
            elliptic_diagonal(2.0, -2.0),
            hyperbolic_element(1e-8),
            hyperbolic_element(3.0),
            hyperbolic_element(0.4) @ elliptic_diagonal(1.5, -1.5),
        ]
        for g in elements:
            factors = su11_to_transvections(g, u, v, H)
            assert len(factors) <= 7
            assert relative_residual(factor_product(factors, H, 2), g) < 1e-12
            size = max([abs(t.a) * np.vdot(t.u, t.u).real for t in factors], default=0.0)
            assert size <= 8 * max(1.0, inf_norm(g))
        assert su11_to_transvections(np.eye(2, dtype=complex), u, v, H) == []
        swap = su11_to_transvections(elliptic_diagonal(np.pi / 2, -np.pi / 2), u, v, H)
        assert len(swap) == 3

    @pytest.mark.timeout(30)
    def test_nearly_equal_lines(self, rng):
        H = _form(2, 2)
        x = rng.normal(size=2) + 1j * rng.normal(size=2)
        y = rng.normal(size=2) + 1j * rng.normal(size=2)
        u = np.concatenate([x / np.linalg.norm(x), y / np.linalg.norm(y)])
        for eps in (1e-3, 1e-6):
            x2 = x + eps * np.array([1.0, -1.0j])
            v = np.concatenate([x2 / np.linalg.norm(x2), y / np.linalg.norm(y)])
            factors = map_isotropic_line(u, v, H, rng=rng)
            assert 1 <= len(factors) <= 2
            image = factor_product(factors, H, 4) @ u
            assert np.linalg.matrix_rank(np.column_stack([image, v]), tol=1e-8) == 1
            assert all(abs(t.a) * np.vdot(t.u, t.u).real < 30 for t in factors)

    @pytest.mark.timeout(30)
    def test_nearly_parallel_plane(self):
        H = _form(2, 1)
        x = np.array([1.0, 0.0, 1.0], dtype=complex) / np.sqrt(2)
        e = np.array([1.0, 0.0, 0.0], dtype=complex)
        a = np.exp(0.3j)
        for delta in (1e-2, 1e-4):
            first, second = x + delta * e, x - delta * e
            u, v = hyperbolic_pair(np.column_stack([first, second]), H)
            assert np.linalg.norm(u) == pytest.approx(np.linalg.norm(v))
            assert abs(hermitian_product(v, u, H) - 1) < 1e-9
            assert abs(quadratic_value(u, H)) < 1e-9 * np.vdot(u, u).real
            factors = [QuasiReflection(first, a), QuasiReflection(second, np.conj(a))]
            g = factor_product(factors, H, 3)
            transvections = quasireflections_to_transvections(factors, H)
            assert len(transvections) <= 7
            assert relative_residual(factor_product(transvections, H, 3), g) < 1e-9


class TestPipeline:
    @pytest.mark.timeout(60)
    def test_reflection_factorization_and_split(self, rng, gen_member):
        for m, n in ((1, 1), (2, 1), (2, 2)):
            g, _, _ = gen_member(m, n)
            H = _form(m, n)
            factors = reflection_factorization(g, (m, n), rng=rng)
            assert relative_residual(factor_product(factors, H, m + n), g) < 1e-8
            quasi, trailing = split_factors(factors, H)
            assert all(isinstance(f, QuasiReflection) for f in quasi)
            assert all(isinstance(f, Transvection) for f in trailing)
            assert relative_residual(factor_product(quasi + trailing, H, m + n), g) < 1e-8

    @pytest.mark.timeout(60)
    def test_quasireflections_to_transvections(self, rng, gen_member):
        g, _, _ = gen_member(2, 2)
        H = _form(2, 2)
        quasi, _ = split_factors(reflection_factorization(g, (2, 2), rng=rng), H)
        transvections = quasireflections_to_transvections(quasi, H, rng=rng)
        expected = factor_product(quasi, H, 4)
        assert relative_residual(factor_product(transvections, H, 4), expected) < 1e-8
        assert all(abs(np.real(t.a)) < 1e-8 for t in transvections)

    @pytest.mark.timeout(30)
    def test_transvection_to_commutator(self, rng):
        H = _form(2, 1)
        tau = Transvection(isotropic_vector(2, 1, rng), 0.8j)
        A, B = transvection_to_commutator(tau, H)
        assert relative_residual(_commutator(A, B), tau.matrix(H)) < 1e-10
        assert np.allclose(A.conj().T @ H @ A, H)
        with pytest.raises(DomainError):
            transvection_to_commutator(tau, H, b=1.0)

    @pytest.mark.timeout(120)
    def test_commutator_decomposition(self, rng, gen_member):
        for m, n in ((1, 1), (2, 1), (2, 2), (3, 2)):
            for _ in range(3):
                g, _, _ = gen_member(m, n)
                result = commutator_decomposition(g, (m, n), rng=rng)
                assert relative_residual(result.product(), g) < 1e-8
                assert len(result) <= 14 * (m + n)
                assert result.report.residual < 1e-6
                assert result.to_json()["count"] == len(result)

    @pytest.mark.timeout(120)
    def test_decomposition_near_identity(self, rng, gen_member):
        for m, n in ((1, 1), (2, 1), (2, 2)):
            for scale in (1e-2, 1e-3, 1e-6):
                g, _, _ = gen_member(m, n, scale=scale)
                result = commutator_decomposition(g, (m, n), rng=rng)
                assert relative_residual(result.product(), g) < 1e-8
                assert len(result) <= 14 * (m + n)

    @pytest.mark.timeout(30)
    def test_decomposition_preconditions(self):
        with pytest.raises(DomainError):
            commutator_decomposition(np.eye(2), (2, 0))
        with pytest.raises(MembershipError):
            commutator_decomposition(elliptic_diagonal(0.3, 0.0), (1, 1))
        with pytest.raises(MembershipError):
            commutator_decomposition(np.diag([2.0, 0.5]), (1, 1))
