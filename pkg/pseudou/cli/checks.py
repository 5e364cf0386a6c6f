"""
Acceptance checks run by `pseudou reproduce-paper`. Each check returns a
CheckResult; an exception inside a check counts as a failure.
"""
import logging
from typing import Callable
from typing import Dict
from typing import List
from typing import Sequence
from typing import Tuple
from collections import namedtuple

import numpy as np
from scipy import linalg
from scipy.stats import unitary_group

from ..burau import BraidWord
from ..burau import count_noncompact_roots
from ..burau import invariance_residual
from ..burau import is_singular
from ..burau import squier_definite
from ..burau import threshold_consistency
from ..blocks import central_obstruction
from ..blocks import congruence_check
from ..blocks import dim_blocks
from ..blocks import parity_checks
from ..blocks import signature
from ..blocks import zagier_dimension
from ..commutators import Transvection
from ..commutators import QuasiReflection
from ..commutators import commutator_decomposition
from ..commutators import transvection_to_commutator
from ..config import RunConfig
from ..cyclo import RootOfUnity
from ..cyclo import theta
from ..cyclo import theta_case_table
from ..exceptions import PseudoUError
from ..groups import GroupPath
from ..groups import SignatureForm
from ..groups import concatenate
from ..groups import cocycle
from ..groups import dgw_phase
from ..groups import lift_phase
from ..groups import positive_determinant
from ..groups import sp_to_su
from ..groups import v0
from ..groups.embeddings import realify
from ..groups.embeddings import sp_winding
from ..groups.embeddings import su_path_to_sp
from ..groups.sampling import random_borel
from ..groups.sampling import random_member
from ..logging import TimeIt
from ..recurrences import builtin_keys
from ..recurrences import builtin_spec
from ..recurrences import extend
from ..recurrences import mod_orbit
from ..recurrences import periodic_from
from ..utils.general import inf_norm

logger = logging.getLogger(__name__)

CheckResult = namedtuple("CheckResult", ("check", "name", "passed", "detail"))

# σ(g, p, ζ_{2p}^e) for g = 1..11
PUBLISHED_SEQUENCES: Dict[Tuple[int, int], List[int]] = {
    (5, 1): [2, 3, 3, 0, -9, -27, -54, -81, -81, 0, 243],
    (5, 3): [2, 5, 15, 50, 175, 625, 2250, 8125, 29375, 106250, 384375],
    (7, 1): [3, 8, 18, 29, 2, -237, -1275, -4703, -13750, -31156, -41167],
    (7, 3): [3, 14, 98, 833, 7546, 69629, 645869, 6000099, 55765626, 518361494, 4818550093],
    (7, 5): [3, 6, -10, -129, -406, 301, 8177, 32801, 15658, -472404, -2440135],
    (9, 1): [4, 16, 62, 211, 446, -1509, -29113, -259040, -1823114, -11137172, -60443933],
    (9, 5): [
        4,
        30,
        414,
        7317,
        137862,
        2637765,
        50664771,
        974133540,
        18734896134,
        360344121174,
        6930952607259,
    ],
    (9, 7): [4, 10, -102, -1259, -746, 90915, 687147, -2179104, -67636010, -303038972, 3064220783],
}

GROUP_SIGNATURES = ((1, 1), (2, 1), (2, 2))
COMMUTATOR_SIGNATURES = ((1, 1), (2, 1), (2, 2), (3, 2))


def mod1_distance(a: float, b: float) -> float:
    return abs((a - b + 0.5) % 1.0 - 0.5)


def _rng(config: RunConfig, check: int) -> np.random.Generator:
    return np.random.default_rng(config.SEED * 1000 + check)


def check_sequences(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    bad = [key for key in builtin_keys() if extend(builtin_spec(*key), 11) != PUBLISHED_SEQUENCES[key]]
    return not bad, f"mismatched specs: {bad}" if bad else f"{len(builtin_keys())} specs reproduced"


def check_signatures(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    bad = []
    for p, e in builtin_keys():
        g_max = 4 if p == 9 else 5
        expected = extend(builtin_spec(p, e), g_max)
        for g in range(1, g_max + 1):
            record = signature(g, p, RootOfUnity(2 * p, e), n_threads=config.N_THREADS)
            if record.sigma != expected[g - 1]:
                bad.append((p, e, g, record.sigma, expected[g - 1]))
    return not bad, f"mismatches: {bad}" if bad else "all signatures agree with the recurrences"


def check_dimensions(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    bad = []
    for g in (2, 3, 4):
        for k in range(2, 11):
            if dim_blocks(g, 2 * k, brute_force=False) != zagier_dimension(g, k):
                bad.append((g, 2 * k))
    p5 = [dim_blocks(g, 5, brute_force=False) for g in range(1, 8)]
    if p5 != [2, 5, 15, 50, 175, 625, 2250]:
        bad.append(("p=5", p5))
    for g, expected in ((2, 14), (3, 98)):
        value = dim_blocks(g, 7, n_threads=config.N_THREADS)
        if value != expected:
            bad.append((g, 7, value))
    return not bad, f"mismatches: {bad}" if bad else "closed forms and tabulated values agree"


def check_congruences(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    bad = []
    for p in range(5, 14, 2):
        for g in (2, 3, 4, 5):
            report = congruence_check(g, p)
            if not report.passed:
                bad.append(("congruence", g, p))
    for g in range(1, 13):
        if not parity_checks(g, 5).consistent:
            bad.append(("parity", g, 5))
    for p in (6, 10, 14):
        if not parity_checks(3, p).consistent:
            bad.append(("parity", 3, p))
    return not bad, f"failures: {bad}" if bad else "congruences and parity verdicts hold"


def check_theta(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    bad = [p for p in range(3, 1001) if theta(p) != theta_case_table(p)]
    return not bad, f"mismatches at p = {bad[:10]}" if bad else "θ(p) matches the case table for 3 ≤ p ≤ 1000"


def check_orbits(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    five = mod_orbit(builtin_spec(5, 1), 5)
    seven = mod_orbit(builtin_spec(7, 1), 7)
    three = mod_orbit(builtin_spec(7, 3), 7)
    results = {
        "(5,1) mod 5": five.period == 24 and five.zeros == [4, 10, 16, 22],
        "(7,1) mod 7": seven.period == 12 and seven.zeros == [11],
        "(7,3) mod 7": three.preperiod <= 55
        and 36 % three.period == 0
        and periodic_from(builtin_spec(7, 3), 7, 36, 55, 55 + 72),
    }
    failed = [name for name, ok in results.items() if not ok]
    return not failed, f"failed: {failed}" if failed else "periods and zero loci as published"


def _phase_properties(m: int, n: int, rng: np.random.Generator, tol: float) -> List[str]:
    failures = []
    g, _, _ = random_member(m, n, rng, scale=0.5)
    h, _, _ = random_member(m, n, rng, scale=0.5)
    form = SignatureForm.standard(m, n)
    phase = dgw_phase(g, form, tol=tol)
    if mod1_distance(dgw_phase(h @ g @ linalg.inv(h), form, tol=tol), phase) > 1e-7:
        failures.append("conjugation")
    for k in range(2, 7):
        if mod1_distance(dgw_phase(np.linalg.matrix_power(g, k), form, tol=tol), k * phase) > 1e-7:
            failures.append(f"power {k}")
    g2, g3 = np.linalg.matrix_power(g, 2), np.linalg.matrix_power(g, 3)
    total = dgw_phase(g2, form, tol=tol) + dgw_phase(g3, form, tol=tol)
    if mod1_distance(dgw_phase(g2 @ g3, form, tol=tol), total) > 1e-7:
        failures.append("additivity")
    det_phase = np.angle(positive_determinant(g, form, tol=tol)) / (2 * np.pi)
    if mod1_distance(det_phase, phase) > 1e-7:
        failures.append("positive determinant")
    if abs(m - n) <= 1:
        b, bform = random_borel(m, n, rng)
        if mod1_distance(dgw_phase(b, bform, tol=tol), 0.0) > 1e-7:
            failures.append("borel")
    return failures


def check_phase(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    rng = _rng(config, 7)
    samples = samples or 200
    failures = []
    for m, n in GROUP_SIGNATURES:
        for _ in range(samples // len(GROUP_SIGNATURES) + 1):
            failures += [(m, n, f) for f in _phase_properties(m, n, rng, config.TOLERANCE)]
    return not failures, f"failures: {failures[:10]}" if failures else "phase properties hold"


def check_cocycle(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    rng = _rng(config, 8)
    samples = samples or 100
    form = SignatureForm.standard(2, 1)
    identity = GroupPath([np.eye(3, dtype=complex)], form)
    worst_identity = worst_norm = worst_v0 = 0.0
    for _ in range(samples):
        (g1, p1, _), (g2, p2, _), (g3, p3, _) = [random_member(2, 1, rng, scale=0.5) for _ in range(3)]
        p12, p23 = concatenate(p1, p2), concatenate(p2, p3)
        lhs = cocycle(g1, g2, p1, p2) + cocycle(g1 @ g2, g3, p12, p3)
        rhs = cocycle(g2, g3, p2, p3) + cocycle(g1, g2 @ g3, p1, p23)
        worst_identity = max(worst_identity, abs(lhs - rhs))
        eye = np.eye(3, dtype=complex)
        worst_norm = max(worst_norm, abs(cocycle(g1, eye, p1, identity)), abs(cocycle(eye, g1, identity, p1)))
        c = cocycle(g1, g2, p1, p2)
        expected = v0(g1, form) * v0(g2, form) / v0(g1 @ g2, form)
        worst_v0 = max(worst_v0, abs(np.exp(2j * np.pi * c) - expected))
    passed = worst_identity < 1e-6 and worst_norm < 1e-6 and worst_v0 < 1e-8
    return passed, f"identity {worst_identity:.1e}, normalization {worst_norm:.1e}, v0 {worst_v0:.1e}"


def check_windings(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    rng = _rng(config, 9)
    worst = 0.0
    for n in (1, 2, 3):
        k = unitary_group.rvs(n, random_state=rng) if n > 1 else np.exp(2j * np.pi * rng.random((1, 1)))
        T = sp_to_su(realify(k))
        worst = max(worst, inf_norm(T[:n, n:]), inf_norm(T[n:, :n]))
    windings = {}
    for m, n in ((1, 1), (2, 1), (1, 2)):
        loop = GroupPath.loop_generator(m, n)
        windings[(m, n)] = (round(lift_phase(loop)), sp_winding(su_path_to_sp(loop)))
    passed = worst < 1e-10 and all(w == (1, 2) for w in windings.values())
    return passed, f"off-block {worst:.1e}, windings {sorted(windings.items())}"


def _isotropic(m: int, n: int, rng: np.random.Generator) -> np.ndarray:
    x = rng.normal(size=m) + 1j * rng.normal(size=m)
    y = rng.normal(size=n) + 1j * rng.normal(size=n)
    return np.concatenate([x / np.linalg.norm(x), y / np.linalg.norm(y)])


def _identity_suite(m: int, n: int, rng: np.random.Generator, tol: float = 1e-10) -> List[str]:
    failures = []
    H = SignatureForm.standard(m, n).matrix
    u = _isotropic(m, n, rng)
    a, b = 1j * rng.normal(), 1j * rng.normal()
    t_a, t_b = Transvection(u, a).matrix(H), Transvection(u, b).matrix(H)
    if inf_norm(t_a @ t_b - Transvection(u, a + b).matrix(H)) > tol:
        failures.append("transvection additivity")
    if inf_norm(t_a.conj().T @ H @ t_a - H) > tol or abs(linalg.det(t_a) - 1) > tol:
        failures.append("transvection isometry")
    w = rng.normal(size=m + n) + 1j * rng.normal(size=m + n)
    c = np.exp(2j * np.pi * rng.random())
    s = QuasiReflection(w, c).matrix(H)
    if inf_norm(s.conj().T @ H @ s - H) > tol * max(1.0, inf_norm(s) ** 2) or abs(linalg.det(s) - c) > tol:
        failures.append("quasi-reflection")
    M, _, _ = random_member(m, n, rng, scale=0.3)
    conjugated = M @ t_a @ linalg.inv(M)
    if inf_norm(conjugated - Transvection(u, a).conjugate_by(M).matrix(H)) > tol * inf_norm(M) ** 2:
        failures.append("conjugation")
    A, B = transvection_to_commutator(Transvection(u, a), H)
    if inf_norm(A @ B @ linalg.inv(A) @ linalg.inv(B) - t_a) > tol * max(1.0, inf_norm(A) ** 2):
        failures.append("commutator")
    if inf_norm(A.conj().T @ H @ A - H) > tol * max(1.0, inf_norm(A) ** 2):
        failures.append("diagonal isometry")
    return failures


def check_commutators(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    rng = _rng(config, 10)
    samples = samples or 100
    failures = []
    worst = 0.0
    most = 0
    for m, n in COMMUTATOR_SIGNATURES:
        for _ in range(samples):
            g, _, _ = random_member(m, n, rng, scale=0.5)
            result = commutator_decomposition(g, (m, n), tol=config.TOLERANCE, b=config.COMMUTATOR_B, rng=rng)
            residual = inf_norm(result.product() - g) / max(1.0, inf_norm(g))
            worst = max(worst, residual)
            most = max(most, len(result) / (m + n))
            if residual >= 1e-8 or len(result) > 14 * (m + n):
                failures.append((m, n, len(result), residual))
            failures += [(m, n, f) for f in _identity_suite(m, n, rng)]
    detail = f"worst residual {worst:.1e}, most commutators per dimension {most:.2f}"
    return not failures, f"{detail}; failures {failures[:5]}" if failures else detail


def _unit_roots(count: int) -> List[complex]:
    roots = []
    order = 2
    while len(roots) < count:
        roots += [np.exp(2j * np.pi * j / order) for j in range(1, order) if np.gcd(j, order) == 1]
        order += 1
    return roots[:count]


def check_burau(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    rng = _rng(config, 11)
    samples = samples or 20
    worst = 0.0
    for k in range(3, 8):
        for q in _unit_roots(20):
            for _ in range(max(1, samples // 20)):
                for word in (BraidWord.random(k, 3, rng, pure=True), BraidWord.random(k, 12, rng)):
                    worst = max(worst, invariance_residual(word, q))
    agreed = 0
    for k in range(3, 8):
        for q in _unit_roots(40):
            if not is_singular(k, q):
                squier_definite(k, q)
                agreed += 1
    bound_failures = []
    for g in range(4, 11):
        for p in range(5, 102, 2):
            report = count_noncompact_roots(g, p)
            if report.count < report.bound or report.window_count > report.window_bound:
                bound_failures.append((g, p))
    thresholds = threshold_consistency(10, 101)
    passed = (
        worst < 1e-10
        and not bound_failures
        and thresholds.nonstrict_holds
        and set(thresholds.exceptions) <= {(10, 23)}
    )
    detail = (
        f"invariance {worst:.1e}, {agreed} definiteness verdicts agree, "
        f"bound failures {bound_failures}, strict-threshold exceptions {thresholds.exceptions}"
    )
    return passed, detail


def check_obstruction(config: RunConfig, samples: int = None) -> Tuple[bool, str]:
    zeta = RootOfUnity(10, 1)
    low = central_obstruction(2, 5, zeta)
    high = central_obstruction(4, 5, zeta)
    phases_ok = all(
        mod1_distance(c.phase / (2 * np.pi), -6 * c.h_plus * zeta.arg() / (2 * np.pi)) < 1e-12
        for c in (low, high)
    )
    passed = low.nonvanishing and low.h_plus == 4 and not high.nonvanishing and high.h_plus == 25 and phases_ok
    return passed, f"h+ = {low.h_plus}, {high.h_plus}; nonvanishing {low.nonvanishing}, {high.nonvanishing}"


CHECKS: Sequence[Tuple[int, str, Callable]] = (
    (1, "sequence reproduction", check_sequences),
    (2, "signatures against recurrences", check_signatures),
    (3, "dimension cross-checks", check_dimensions),
    (4, "congruence and parity", check_congruences),
    (5, "theta table", check_theta),
    (6, "mod-p orbits", check_orbits),
    (7, "phase properties", check_phase),
    (8, "cocycle suite", check_cocycle),
    (9, "embedding and winding", check_windings),
    (10, "commutator pipeline", check_commutators),
    (11, "burau and squier", check_burau),
    (12, "central obstruction", check_obstruction),
)


def run_checks(config: RunConfig, only: Sequence[int] = (), samples: int = None) -> List[CheckResult]:
    results = []
    for number, name, func in CHECKS:
        if only and number not in only:
            continue
        with TimeIt(f"check_{number}", logger, check=number):
            try:
                passed, detail = func(config, samples)
            except PseudoUError as err:
                passed, detail = False, str(err)
            except Exception as err:
                # unknown exception, record it against the check and keep going
                logger.exception("check raised", extra={"check": number})
                passed, detail = False, f"{type(err).__name__}: {err}"
        if not passed:
            logger.warning("check failed", extra={"check": number, "detail": detail})
        results.append(CheckResult(number, name, bool(passed), detail))
    return results
