"""
Admissible colorings: depth-first enumeration on any trivalent graph and
transfer matrices on chain graphs. Both return exact integer totals.
"""
import itertools
from typing import Dict
from typing import List
from typing import Tuple
from typing import Optional
from collections import namedtuple

import numpy as np
from multiwrapper import multiprocessing_utils as mu

from .graphs import TrivalentGraph
from .symbols import SignTable
from ..cyclo import RootOfUnity
from ..exceptions import DomainError

Coloring = namedtuple("Coloring", ("graph", "colors"))


def color_set(p: int, even: Optional[bool] = None) -> List[int]:
    """
    Odd rule: even colors 0, 2, ..., p − 3. Even rule: 0, 1, ..., p/2 − 2.
    """
    even = (p % 2 == 0) if even is None else even
    if p < 3:
        raise DomainError(f"p must be at least 3, got {p}")
    if even:
        if p % 2:
            raise DomainError(f"even color rule needs even p, got {p}")
        return list(range(0, p // 2 - 1))
    if p % 2 == 0:
        raise DomainError(f"odd color rule needs odd p, got {p}")
    return list(range(0, p - 2, 2))


def admissible(a: int, b: int, c: int, p: int, even: bool) -> bool:
    if a > b + c or b > a + c or c > a + b:
        return False
    if even:
        return (a + b + c) % 2 == 0 and a + b + c <= p - 4
    return a + b + c <= 2 * (p - 2)


def admissible_triples(p: int, even: bool) -> List[Tuple[int, int, int]]:
    """Sorted triples only."""
    colors = color_set(p, even)
    return [
        t for t in itertools.combinations_with_replacement(colors, 3) if admissible(*t, p, even)
    ]


def _graph_data(graph: TrivalentGraph):
    """Edge order plus, for each position, the vertices completed there."""
    order = graph.search_order()
    position = {e: i for i, e in enumerate(order)}
    incidence = graph.incidence()
    completes: List[List[Tuple[int, int, int]]] = [[] for _ in order]
    for edges in incidence.values():
        last = max(position[e] for e in edges)
        completes[last].append(tuple(edges))
    return order, completes


def _search_helper(args) -> Tuple[int, int]:
    order, completes, colors, p, even, edge_sign, vertex_sign, first = args
    assignment: Dict[int, int] = {}
    totals = [0, 0]

    def descend(pos: int, sign: int):
        if pos == len(order):
            totals[0] += 1
            totals[1] += sign
            return
        edge = order[pos]
        for color in colors if pos else [first]:
            assignment[edge] = color
            s = sign * edge_sign[color] if edge_sign else sign
            for vertex in completes[pos]:
                triple = tuple(sorted(assignment[e] for e in vertex))
                if not admissible(*triple, p, even):
                    break
                if vertex_sign:
                    s *= vertex_sign[triple]
            else:
                descend(pos + 1, s)
        assignment.pop(edge, None)

    descend(0, 1)
    return totals[0], totals[1]


def enumerate_colorings(
    graph: TrivalentGraph, p: int, table: SignTable = None, even: Optional[bool] = None, n_threads: int = 1
) -> Tuple[int, int]:
    """
    (number of admissible colorings, Σ sign H(X,X)). Without a sign table the second
    entry equals the first. The search is split over the color of the first edge.
    """
    even = (p % 2 == 0) if even is None else even
    colors = color_set(p, even)
    if graph.is_loop:
        # genus-one basis is orthonormal
        return len(colors), len(colors)
    order, completes = _graph_data(graph)
    edge_sign = table.edge if table else None
    vertex_sign = table.vertex if table else None
    multi_args = [
        (order, completes, colors, p, even, edge_sign, vertex_sign, first) for first in colors
    ]
    results = mu.multiprocess_func(
        _search_helper, multi_args, n_threads=n_threads, verbose=False, debug=n_threads == 1
    )
    count = sum(r[0] for r in results)
    sigma = sum(r[1] for r in results)
    return count, sigma


def iter_colorings(graph: TrivalentGraph, p: int, even: Optional[bool] = None):
    """Yields every admissible Coloring; for small graphs only."""
    even = (p % 2 == 0) if even is None else even
    colors = color_set(p, even)
    edges = graph.edges
    incidence = graph.incidence()
    for values in itertools.product(colors, repeat=len(edges)):
        if all(admissible(*sorted(values[e] for e in v), p, even) for v in incidence.values()):
            yield Coloring(graph, values)


def _weights(p: int, even: bool, table: SignTable = None):
    colors = color_set(p, even)
    size = len(colors)

    def vertex(a, b, c):
        t = tuple(sorted((colors[a], colors[b], colors[c])))
        if not admissible(*t, p, even):
            return 0
        return table.vertex[t] if table else 1

    edge = np.array([table.edge[c] if table else 1 for c in colors], dtype=object)
    loop_end = np.array(
        [sum(vertex(a, a, b) * edge[a] for a in range(size)) for b in range(size)], dtype=object
    )
    stem = edge * loop_end
    T = np.array(
        [[sum(vertex(l, r, c) * stem[c] for c in range(size)) for r in range(size)] for l in range(size)],
        dtype=object,
    )
    return edge, loop_end, stem, T


def chain_total(g: int, p: int, table: SignTable = None, even: Optional[bool] = None) -> int:
    """
    Σ over admissible colorings of the chain graph of genus g ≥ 2 of 1 (no table)
    or sign H(X,X): stem · T · (W T)^{g−3} · stem, W the spine edge signs.
    """
    if g < 2:
        raise DomainError(f"chain graphs need genus at least 2, got {g}")
    even = (p % 2 == 0) if even is None else even
    edge, loop_end, stem, T = _weights(p, even, table)
    if g == 2:
        total = int(np.dot(stem, loop_end))
    else:
        W = np.diag(edge)
        vector = np.dot(stem, T)
        for _ in range(g - 3):
            vector = np.dot(np.dot(vector, W), T)
        total = int(np.dot(vector, stem))
    return total


def genus_one_total(p: int, even: Optional[bool] = None) -> int:
    return len(color_set(p, even))


def sign_table(p: int, zeta: RootOfUnity) -> SignTable:
    colors = color_set(p, even=False)
    return SignTable(p, zeta, colors, admissible_triples(p, even=False))
