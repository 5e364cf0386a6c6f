"""
Signatures of the Hermitian forms on conformal-block spaces, diagonal in the
coloring basis, and the central-element obstruction.
"""
import math
import logging
from typing import Dict
from typing import List
from collections import namedtuple

from sympy import isprime

from .colorings import Coloring
from .colorings import chain_total
from .colorings import enumerate_colorings
from .colorings import sign_table
from .colorings import color_set
from .dimensions import BRUTE_FORCE_LIMIT
from .dimensions import dim_blocks
from .graphs import chain_graph
from .symbols import check_root
from .symbols import loop_sign
from .symbols import theta_sign
from ..cyclo import RootOfUnity
from ..cyclo import central_exponents
from ..exceptions import ConsistencyError
from ..exceptions import DomainError

logger = logging.getLogger(__name__)


class SignatureRecord(namedtuple("SignatureRecord", ("g", "p", "zeta", "N", "sigma", "h_plus"))):
    __slots__ = ()

    @property
    def h_minus(self) -> int:
        return self.N - self.h_plus

    def to_json(self):
        return {
            "g": self.g,
            "p": self.p,
            "zeta_exponent": self.zeta.exponent,
            "N": self.N,
            "sigma": self.sigma,
            "h_plus": self.h_plus,
            "h_minus": self.h_minus,
        }


CentralObstruction = namedtuple(
    "CentralObstruction", ("phase", "nonvanishing", "h_plus", "rho_c", "scalar")
)
PositivityReport = namedtuple(
    "PositivityReport", ("records", "propagation", "tensor_bound", "sign_relation")
)


def _check_odd(p: int):
    if p < 3 or p % 2 == 0:
        raise DomainError(f"signatures are computed for odd p ≥ 3, got {p}")


def norm_sign(coloring: Coloring, zeta: RootOfUnity) -> int:
    """sign H(X,X) = Π_v sign⟨a_v,b_v,c_v⟩ Π_e sign⟨c_e⟩."""
    graph = coloring.graph
    colors = coloring.colors
    if graph.is_loop:
        return 1
    # η = 1/D with D > 0 contributes no sign
    sign = 1
    for c in colors:
        sign *= loop_sign(c, zeta)
    for edges in graph.incidence().values():
        sign *= theta_sign(*sorted(colors[e] for e in edges), zeta)
    return sign


def signature(g: int, p: int, zeta: RootOfUnity, brute_force: bool = True, n_threads: int = 1) -> SignatureRecord:
    """σ = #positive − #negative over the admissible colorings."""
    _check_odd(p)
    check_root(p, zeta)
    N = dim_blocks(g, p, brute_force=False)
    if g == 1:
        sigma = N
    else:
        table = sign_table(p, zeta)
        sigma = chain_total(g, p, table)
        if brute_force and N <= BRUTE_FORCE_LIMIT:
            count, direct = enumerate_colorings(chain_graph(g), p, table, n_threads=n_threads)
            if (count, direct) != (N, sigma):
                raise ConsistencyError(
                    f"σ({g},{p},ζ) = {sigma} by transfer matrix, {direct} by enumeration"
                )
    if (N - sigma) % 2 or abs(sigma) > N:
        raise ConsistencyError(f"signature {sigma} incompatible with dimension {N}")
    record = SignatureRecord(g, p, zeta, N, sigma, (N + sigma) // 2)
    logger.debug("signature", extra=record.to_json())
    return record


def central_obstruction(g: int, p: int, zeta: RootOfUnity) -> CentralObstruction:
    """
    Phase −6 h⁺ arg ζ mod 2π of the central element; the obstruction is nonzero
    when h⁺ is prime to p (p prime).
    """
    record = signature(g, p, zeta, brute_force=False)
    arg = 2 * math.pi * zeta.exponent / zeta.order
    phase = (-6 * record.h_plus * arg) % (2 * math.pi)
    rho_c, scalar = central_exponents(p, zeta)
    if not isprime(p):
        logger.info("nonvanishing criterion stated for prime p", extra={"p": p})
    return CentralObstruction(phase, record.h_plus % p != 0, record.h_plus, rho_c, scalar)


def positivity_report(p: int, zeta: RootOfUnity, g_max: int = 5) -> PositivityReport:
    """
    Positivity propagation from genus 3, the tensor lower bounds on h± and the
    sign relation between ⟨a⟩ and η when genus 3 is positive.
    """
    _check_odd(p)
    records: Dict[int, SignatureRecord] = {
        g: signature(g, p, zeta, brute_force=False) for g in range(1, g_max + 1)
    }
    base = (p - 1) // 2
    positive3 = 3 in records and records[3].sigma == records[3].N

    propagation = (not positive3) or all(r.sigma == r.N for r in records.values())
    tensor: List[bool] = [r.h_plus >= base ** g for g, r in records.items()]
    if 3 in records:
        h3 = records[3].h_minus
        tensor += [r.h_minus >= base ** (g - 3) * h3 for g, r in records.items() if g >= 3]
    sign_relation = (not positive3) or all(loop_sign(a, zeta) == 1 for a in color_set(p, even=False))
    return PositivityReport(list(records.values()), propagation, all(tensor), sign_relation)
