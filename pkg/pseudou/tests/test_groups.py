import numpy as np
import pytest
from scipy import linalg

from .helpers import elliptic_diagonal
from .helpers import gen_member
from .helpers import hyperbolic_element
from .helpers import mod1_distance
from .helpers import rng
from ..exceptions import DegenerateFormError
from ..exceptions import DimensionMismatchError
from ..exceptions import DomainError
from ..exceptions import MembershipError
from ..exceptions import NotSemisimpleError
from ..exceptions import SamplingError
from ..groups import GroupPath
from ..groups import SignatureForm
from ..groups import canonical_form
from ..groups import cartan_decomposition
from ..groups import cocycle
from ..groups import concatenate
from ..groups import dgw_phase
from ..groups import elliptic_part
from ..groups import is_member
from ..groups import lift_phase
from ..groups import positive_determinant
from ..groups import require_member
from ..groups import sp_phase
from ..groups import sp_to_su
from ..groups import sp_winding
from ..groups import spectral_analysis
from ..groups import su_to_sp
from ..groups import v0
from ..groups.embeddings import is_symplectic
from ..groups.embeddings import realify
from ..groups.embeddings import sp_lift
from ..groups.embeddings import su_path_to_sp
from ..groups.forms import as_form
from ..groups.paths import unwrap_phases
from ..groups.sampling import LOG_GAP
from ..groups.sampling import random_borel
from ..groups.sampling import random_compact
from ..groups.sampling import random_symplectic
from ..utils.general import inf_norm

ANTIDIAGONAL = np.array([[0, 1], [1, 0]], dtype=complex)
UNIPOTENT = np.array([[1 + 1j, -1j], [1j, 1 - 1j]])


class TestForms:
    @pytest.mark.timeout(30)
    def test_standard_form(self):
        form = SignatureForm.standard(2, 1)
        assert (form.m, form.n, form.dim) == (2, 1, 3)
        assert form.is_standard
        assert np.allclose(form.matrix, np.diag([1, 1, -1]))
        with pytest.raises(DomainError):
            SignatureForm.standard(0, 0)

    @pytest.mark.timeout(30)
    def test_signature_from_matrix(self):
        form = SignatureForm.from_matrix(ANTIDIAGONAL)
        assert (form.m, form.n) == (1, 1)
        assert not form.is_standard
        C = form.congruence()
        assert np.allclose(C.conj().T @ ANTIDIAGONAL @ C, np.diag([1, -1]))

    @pytest.mark.timeout(30)
    def test_invalid_forms(self):
        with pytest.raises(DegenerateFormError):
            SignatureForm.from_matrix(np.diag([1.0, 0.0]))
        with pytest.raises(DomainError):
            SignatureForm.from_matrix(np.array([[1, 1], [0, -1]]))
        with pytest.raises(DimensionMismatchError):
            as_form((2, 1), dim=2)

    @pytest.mark.timeout(30)
    def test_membership(self):
        result = is_member(hyperbolic_element(0.7), (1, 1))
        assert result and result.special
        assert not is_member(np.diag([2.0, 1.0]), (1, 1))
        with pytest.raises(MembershipError):
            require_member(np.diag([2.0, 1.0]), (1, 1))
        with pytest.raises(MembershipError):
            require_member(elliptic_diagonal(0.3, 0.0), (1, 1), special=True)


class TestSpectral:
    @pytest.mark.timeout(30)
    def test_elliptic_multiplicities(self):
        data = spectral_analysis(elliptic_diagonal(0.3, 0.5, -0.8), (2, 1))
        assert sum(data.n_plus) == 2
        assert sum(data.n_minus) == 1
        assert all(data.unit_circle)
        assert not data.pairs

    @pytest.mark.timeout(30)
    def test_unipotent_is_not_semisimple(self):
        assert is_member(UNIPOTENT, (1, 1)).special
        with pytest.raises(NotSemisimpleError):
            spectral_analysis(UNIPOTENT, (1, 1))

    @pytest.mark.timeout(30)
    def test_canonical_form_of_hyperbolic_pair(self):
        g = np.diag([-2.0, -0.5]).astype(complex)
        C, report = canonical_form(g, ANTIDIAGONAL)
        assert not report.unit_blocks
        assert len(report.hyperbolic_pairs) == 1
        assert np.allclose(C.conj().T @ ANTIDIAGONAL @ C, ANTIDIAGONAL)
        assert np.allclose(linalg.solve(C, g @ C), np.diag([-2.0, -0.5]))
        assert np.allclose(elliptic_part(g, ANTIDIAGONAL), -np.eye(2))

    @pytest.mark.timeout(60)
    def test_canonical_form_of_random_members(self, gen_member):
        for m, n in ((1, 1), (2, 1), (2, 2)):
            for _ in range(5):
                g, _, _ = gen_member(m, n)
                C, report = canonical_form(g, (m, n))
                plus = sum(1 for _, sign in report.unit_blocks if sign > 0)
                assert len(report.unit_blocks) + 2 * len(report.hyperbolic_pairs) == m + n
                assert plus + len(report.hyperbolic_pairs) == m
                assert C.shape == (m + n, m + n)


class TestPhase:
    @pytest.mark.timeout(30)
    def test_diagonal_phases(self):
        assert dgw_phase(-np.eye(2), (1, 1)) == pytest.approx(0.5)
        assert dgw_phase(hyperbolic_element(1.3), (1, 1)) == pytest.approx(0.0, abs=1e-12)
        value = dgw_phase(elliptic_diagonal(0.3, 0.5, -0.8), (2, 1))
        assert value == pytest.approx(0.8 / (2 * np.pi))

    @pytest.mark.timeout(30)
    def test_negative_hyperbolic_phase(self):
        g = np.diag([-2.0, -0.5]).astype(complex)
        assert dgw_phase(g, ANTIDIAGONAL) == pytest.approx(0.5)

    @pytest.mark.timeout(60)
    def test_conjugation_and_powers(self, gen_member):
        for m, n in ((1, 1), (2, 1), (2, 2)):
            for _ in range(5):
                g, _, _ = gen_member(m, n)
                h, _, _ = gen_member(m, n)
                phase = dgw_phase(g, (m, n))
                assert mod1_distance(dgw_phase(h @ g @ linalg.inv(h), (m, n)), phase) < 1e-7
                for k in (2, 3):
                    power = np.linalg.matrix_power(g, k)
                    assert mod1_distance(dgw_phase(power, (m, n)), k * phase) < 1e-7

    @pytest.mark.timeout(60)
    def test_commuting_additivity_on_a_torus(self, gen_member):
        def torus(alpha, t):
            g = np.zeros((3, 3), dtype=complex)
            g[0, 0] = np.exp(-2j * alpha)
            g[1:, 1:] = np.exp(1j * alpha) * hyperbolic_element(t)
            return g

        g1, g2 = torus(-0.2, 0.7), torus(0.45, 0.3)
        assert np.allclose(g1 @ g2, g2 @ g1)
        for _ in range(3):
            h, _, _ = gen_member(2, 1)
            a, b = h @ g1 @ linalg.inv(h), h @ g2 @ linalg.inv(h)
            total = dgw_phase(a, (2, 1)) + dgw_phase(b, (2, 1))
            assert mod1_distance(dgw_phase(a @ b, (2, 1)), total) < 1e-7
            assert mod1_distance(dgw_phase(b @ a, (2, 1)), total) < 1e-7

    @pytest.mark.timeout(60)
    def test_positive_determinant(self, gen_member):
        diagonal = elliptic_diagonal(0.3, 0.5, -0.8)
        assert positive_determinant(diagonal, (2, 1)) == pytest.approx(np.exp(0.8j))
        for _ in range(5):
            g, _, _ = gen_member(2, 1)
            det_phase = np.angle(positive_determinant(g, (2, 1))) / (2 * np.pi)
            assert mod1_distance(det_phase, dgw_phase(g, (2, 1))) < 1e-7

    @pytest.mark.timeout(60)
    def test_borel_elements_have_zero_phase(self, rng):
        for m, n in ((1, 1), (2, 1), (1, 2), (2, 2)):
            b, form = random_borel(m, n, rng)
            assert mod1_distance(dgw_phase(b, form), 0.0) < 1e-7

    @pytest.mark.timeout(60)
    def test_borel_diagonal_is_separated(self, rng):
        for m, n in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2)):
            for _ in range(20):
                b, form = random_borel(m, n, rng)
                assert is_member(b, form, tol=1e-8).member
                assert np.allclose(b, np.triu(b))
                logs = np.log(b.diagonal().real)
                assert np.all(np.diff(logs) <= -LOG_GAP + 1e-9)
                assert np.allclose(logs, -logs[::-1])
                assert mod1_distance(dgw_phase(b, form), 0.0) < 1e-7

    @pytest.mark.timeout(30)
    def test_cartan_decomposition(self, gen_member):
        g, _, _ = gen_member(2, 1)
        k, s = cartan_decomposition(g, (2, 1))
        assert np.allclose(k @ s, g)
        assert np.allclose(s, s.conj().T)
        assert np.all(linalg.eigvalsh(s) > 0)
        assert abs(v0(elliptic_diagonal(0.3, 0.5, -0.8), (2, 1)) - np.exp(0.8j)) < 1e-12


class TestPaths:
    @pytest.mark.timeout(30)
    def test_loop_generator_lift(self):
        loop = GroupPath.loop_generator(2, 1)
        assert loop.is_closed()
        assert lift_phase(loop) == pytest.approx(1.0)

    @pytest.mark.timeout(60)
    def test_exact_lift_of_random_paths(self, gen_member):
        for m, n in ((1, 1), (2, 1), (2, 2)):
            _, path, lift = gen_member(m, n)
            assert lift_phase(path) == pytest.approx(lift, abs=1e-8)

    @pytest.mark.timeout(60)
    def test_cocycle_matches_v0(self, gen_member):
        form = SignatureForm.standard(2, 1)
        for _ in range(5):
            g1, path1, _ = gen_member(2, 1)
            g2, path2, _ = gen_member(2, 1)
            c = cocycle(g1, g2, path1, path2)
            expected = v0(g1, form) * v0(g2, form) / v0(g1 @ g2, form)
            assert abs(np.exp(2j * np.pi * c) - expected) < 1e-8

    @pytest.mark.timeout(60)
    def test_cocycle_identity(self, gen_member):
        (g1, p1, _), (g2, p2, _), (g3, p3, _) = [gen_member(2, 1) for _ in range(3)]
        lhs = cocycle(g1, g2, p1, p2) + cocycle(g1 @ g2, g3, concatenate(p1, p2), p3)
        rhs = cocycle(g2, g3, p2, p3) + cocycle(g1, g2 @ g3, p1, concatenate(p2, p3))
        assert lhs == pytest.approx(rhs, abs=1e-6)
        identity = GroupPath([np.eye(3, dtype=complex)], SignatureForm.standard(2, 1))
        assert cocycle(g1, np.eye(3), p1, identity) == pytest.approx(0.0, abs=1e-8)

    @pytest.mark.timeout(30)
    def test_path_preconditions(self, gen_member):
        g, path, _ = gen_member(2, 1)
        with pytest.raises(DomainError):
            cocycle(g, g, path, path.left_translate(g))
        with pytest.raises(DomainError):
            lift_phase(path.left_translate(g))
        with pytest.raises(SamplingError):
            unwrap_phases([1.0, -1.0])


class TestEmbeddings:
    @pytest.mark.timeout(30)
    def test_symplectic_to_pseudo_unitary(self, rng):
        S, _ = random_symplectic(2, rng)
        assert is_symplectic(S)
        T = sp_to_su(S)
        assert is_member(T, (2, 2), tol=1e-8)
        with pytest.raises(MembershipError):
            sp_to_su(np.diag([2.0, 1.0, 1.0, 1.0]))

    @pytest.mark.timeout(30)
    def test_compact_elements_map_block_diagonally(self, rng):
        k = random_compact(2, 1, rng)
        assert is_member(k, (2, 1)).special
        U = np.exp(0.4j) * np.eye(1)
        T = sp_to_su(realify(U))
        assert inf_norm(T[:1, 1:]) < 1e-12
        assert inf_norm(T[1:, :1]) < 1e-12

    @pytest.mark.timeout(30)
    def test_windings(self):
        for m, n in ((1, 1), (2, 1), (1, 2)):
            loop = GroupPath.loop_generator(m, n)
            assert round(lift_phase(loop)) == 1
            assert sp_winding(su_path_to_sp(loop)) == 2

    @pytest.mark.timeout(30)
    def test_phase_doubles_under_embedding(self):
        T = elliptic_diagonal(0.3, 0.5, -0.8)
        S = su_to_sp(T, 2, 1)
        assert is_symplectic(S)
        assert mod1_distance(sp_phase(S), 2 * dgw_phase(T, (2, 1))) < 1e-9

    @pytest.mark.timeout(60)
    def test_phase_agrees_with_symplectic_phase(self, rng):
        for n in (1, 2, 3):
            for _ in range(3):
                S, path = random_symplectic(n, rng)
                T = sp_to_su(S)
                assert mod1_distance(dgw_phase(T, (n, n)), sp_phase(S)) < 1e-8
                image = GroupPath([sp_to_su(s) for s in path.samples], SignatureForm.standard(n, n))
                assert lift_phase(image) == pytest.approx(sp_lift(path), abs=1e-8)
                assert abs(np.exp(2j * np.pi * sp_lift(path)) - v0(T, (n, n))) < 1e-8
