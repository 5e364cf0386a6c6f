"""
pseudou subcommands
"""
import logging
from typing import Any
from typing import Dict
from typing import List

import click
import numpy as np

from .app import emit
from .app import main
from .app import read_input
from .app import run_config
from .checks import run_checks
from ..blocks import central_obstruction
from ..blocks import dim_blocks
from ..blocks import signature
from ..burau import BraidWord
from ..burau import count_noncompact_roots
from ..burau import inertia
from ..burau import invariance_residual
from ..burau import is_singular
from ..burau import lattice_thresholds
from ..burau import reduced_burau
from ..burau import squier_definite
from ..burau import squier_form
from ..burau import square_root_parameter
from ..burau import threshold_consistency
from ..burau import unitarizable
from ..commutators import commutator_decomposition
from ..cyclo import RootOfUnity
from ..cyclo import standard_root
from ..cyclo import theta as theta_order
from ..exceptions import InputError
from ..groups import GroupPath
from ..groups import canonical_form as krein_canonical_form
from ..groups import cocycle as dgw_cocycle
from ..groups import dgw_phase as homogeneous_phase
from ..groups import lift_phase
from ..groups.forms import as_form
from ..recurrences import builtin_spec
from ..recurrences import extend
from ..recurrences import mod_orbit
from ..recurrences import spec_from_json
from ..utils.serializers import matrix_from_json
from ..utils.serializers import matrix_to_json

logger = logging.getLogger(__name__)


def _field(data: Dict, key: str) -> Any:
    if not isinstance(data, dict) or key not in data:
        raise InputError(f"input needs a '{key}' field")
    return data[key]


def form_from_json(data, dim: int, tol: float):
    """{"m": m, "n": n} for the standard form, {"matrix": H} otherwise."""
    if not isinstance(data, dict):
        raise InputError("form must be an object with 'm' and 'n' or 'matrix'")
    if "matrix" in data:
        return as_form(matrix_from_json(data["matrix"]), dim, tol=tol)
    return as_form((int(_field(data, "m")), int(_field(data, "n"))), dim, tol=tol)


def path_from_json(data, form) -> GroupPath:
    """A list of sample matrices, or {"generators": [...], "steps": k}."""
    if isinstance(data, list):
        return GroupPath([matrix_from_json(x) for x in data], form)
    generators = [matrix_from_json(x) for x in _field(data, "generators")]
    return GroupPath.one_parameter(generators, int(data.get("steps", 64)), form)


def _matrix_and_form(data, tol: float):
    g = matrix_from_json(_field(data, "matrix"))
    return g, form_from_json(_field(data, "form"), g.shape[0], tol)


def _letters(value: str) -> List[int]:
    try:
        return [int(x) for x in value.replace(" ", "").split(",") if x]
    except ValueError as err:
        raise click.BadParameter(f"letters must be comma separated integers: {err}")


@main.command("dgw-phase")
@click.pass_context
def dgw_phase(ctx):
    """Homogeneous phase of a semisimple element; also the lift of a path when given."""
    config = run_config(ctx)
    data = read_input(ctx)
    g, form = _matrix_and_form(data, config.TOLERANCE)
    result = {"phase": homogeneous_phase(g, form, tol=config.TOLERANCE)}
    if "path" in data:
        result["lift"] = lift_phase(path_from_json(data["path"], form), tol=config.TOLERANCE)
    emit(ctx, result)


@main.command("cocycle")
@click.pass_context
def cocycle(ctx):
    """c(g1, g2) from paths ending at g1 and g2."""
    config = run_config(ctx)
    data = read_input(ctx)
    g1 = matrix_from_json(_field(data, "g1"))
    g2 = matrix_from_json(_field(data, "g2"))
    form = form_from_json(_field(data, "form"), g1.shape[0], config.TOLERANCE)
    path1 = path_from_json(_field(data, "path1"), form)
    path2 = path_from_json(_field(data, "path2"), form)
    emit(ctx, {"cocycle": dgw_cocycle(g1, g2, path1, path2, tol=config.TOLERANCE)})


@main.command("canonical-form")
@click.pass_context
def canonical_form(ctx):
    config = run_config(ctx)
    g, form = _matrix_and_form(read_input(ctx), config.TOLERANCE)
    C, report = krein_canonical_form(g, form, tol=config.TOLERANCE)
    emit(ctx, {"C": matrix_to_json(C), "report": report})


@main.command("commutators")
@click.pass_context
def commutators(ctx):
    """Write an element of SU(m,n) as a product of commutators."""
    config = run_config(ctx)
    g, form = _matrix_and_form(read_input(ctx), config.TOLERANCE)
    result = commutator_decomposition(
        g,
        form,
        tol=config.TOLERANCE,
        b=config.COMMUTATOR_B,
        rng=np.random.default_rng(config.SEED),
    )
    emit(ctx, result)


@main.command("verlinde")
@click.option("--g", "genus", type=int, required=True)
@click.option("--p", type=int, required=True)
@click.option("--brute-force/--no-brute-force", default=True)
@click.pass_context
def verlinde(ctx, genus, p, brute_force):
    """Dimension N(g, p) of the conformal-block space."""
    config = run_config(ctx)
    emit(ctx, {"N": dim_blocks(genus, p, brute_force=brute_force, n_threads=config.N_THREADS)})


@main.command("theta")
@click.option("--p", type=int, required=True)
@click.pass_context
def theta(ctx, p):
    emit(ctx, {"theta": theta_order(p)})


@main.command("signature")
@click.option("--g", "genus", type=int, required=True)
@click.option("--p", type=int, required=True)
@click.option("--zeta", "zeta_exponent", type=int, default=None, help="ζ = exp(2πi·e/2p); defaults to A_p")
@click.option("--central", is_flag=True, help="also report the central obstruction")
@click.pass_context
def signature_cmd(ctx, genus, p, zeta_exponent, central):
    config = run_config(ctx)
    zeta = standard_root(p) if zeta_exponent is None else RootOfUnity(2 * p, zeta_exponent)
    result = signature(genus, p, zeta, n_threads=config.N_THREADS).to_json()
    if central:
        result["central"] = central_obstruction(genus, p, zeta)
    emit(ctx, result)


@main.command("recurrence")
@click.option("--p", type=int, default=None)
@click.option("--zeta", "zeta_exponent", type=int, default=None)
@click.option("--mod", "modulus", type=int, default=None)
@click.option("--g-max", type=int, default=11)
@click.pass_context
def recurrence(ctx, p, zeta_exponent, modulus, g_max):
    """
    Terms of a tabulated recurrence, or of a JSON spec read from the input,
    or with --mod its period and zero classes.
    """
    if p is None:
        spec = spec_from_json(read_input(ctx))
    else:
        spec = builtin_spec(p, 1 if zeta_exponent is None else zeta_exponent)
    if modulus is None:
        emit(ctx, {"terms": extend(spec, g_max)})
        return
    report = mod_orbit(spec, modulus)
    result = {"period": report.period, f"zeros_mod_{report.period}": report.zeros}
    if report.preperiod:
        result["preperiod"] = report.preperiod
    emit(ctx, result)


@main.command("burau")
@click.option("--k", "strands", type=int, required=True)
@click.option("--order", type=int, required=True, help="q = exp(2πi·exponent/order)")
@click.option("--exponent", type=int, default=1)
@click.option("--letters", type=str, default=None, help="braid word, e.g. 1,-2,1")
@click.pass_context
def burau(ctx, strands, order, exponent, letters):
    """Squier form, definiteness and unitarizability at q; the Burau matrix of a word."""
    config = run_config(ctx)
    q = RootOfUnity(order, exponent).to_complex()
    J = squier_form(strands, square_root_parameter(q))
    singular = is_singular(strands, q, config.TOLERANCE)
    result = {
        "q": q,
        "singular": singular,
        "inertia": inertia(J, config.TOLERANCE),
        "unitarizable": unitarizable(strands, q, config.TOLERANCE),
        "definite": None if singular else squier_definite(strands, q, config.TOLERANCE),
    }
    if letters is not None:
        word = BraidWord(strands, _letters(letters))
        result["matrix"] = matrix_to_json(reduced_burau(word, q, config.TOLERANCE))
        result["pure"] = word.is_pure()
        result["invariance_residual"] = invariance_residual(word, q)
    emit(ctx, result)


@main.command("count-roots")
@click.option("--g", "genus", type=int, required=True)
@click.option("--p", type=int, required=True)
@click.option("--consistency", is_flag=True, help="also scan the lattice thresholds up to g and p")
@click.pass_context
def count_roots(ctx, genus, p, consistency):
    report = count_noncompact_roots(genus, p)
    t_g, threshold = lattice_thresholds(genus)
    result = dict(report._asdict(), window_bound=str(report.window_bound), t_g=t_g, p_threshold=str(threshold))
    if consistency:
        scan = threshold_consistency(genus, p)
        result["consistency"] = {
            "checked": scan.checked,
            "exceptions": scan.exceptions,
            "nonstrict_holds": scan.nonstrict_holds,
        }
    emit(ctx, result)


@main.command("reproduce-paper")
@click.option("--only", type=click.IntRange(1, 12), multiple=True, help="run only these checks")
@click.option("--samples", type=int, default=None, help="random samples per randomized check")
@click.pass_context
def reproduce_paper(ctx, only, samples):
    """Run the acceptance checks; exit 3 unless every selected check passes."""
    config = run_config(ctx)
    results = run_checks(config, only=only, samples=samples)
    emit(ctx, results, title="acceptance checks")
    failed = [r.check for r in results if not r.passed]
    logger.info("acceptance checks", extra={"run": len(results), "failed": failed})
    if failed:
        ctx.exit(3)
