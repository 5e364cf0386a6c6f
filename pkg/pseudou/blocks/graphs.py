"""
Trivalent graphs without leaves, as networkx multigraphs with keyed edges.
"""
from typing import Dict
from typing import List
from typing import Tuple
from typing import Hashable
from typing import Sequence

import networkx as nx

from ..exceptions import DomainError

Edge = Tuple[Hashable, Hashable, int]


class TrivalentGraph:
    """
    Connected multigraph with every vertex of degree 3; loops count twice.
    Edges are (u, v, key) triples in insertion order.
    """

    def __init__(self, graph: nx.MultiGraph, name: str = None):
        self._graph = graph
        self._name = name
        self._validate()

    @classmethod
    def from_edges(cls, edges: Sequence[Tuple[Hashable, Hashable]], name: str = None) -> "TrivalentGraph":
        graph = nx.MultiGraph()
        graph.add_edges_from(edges)
        return cls(graph, name=name)

    def _validate(self):
        if self._graph.number_of_nodes() == 0:
            raise DomainError("graph has no vertices")
        if self.is_loop:
            return
        if not nx.is_connected(self._graph):
            raise DomainError("graph is not connected")
        bad = {v: d for v, d in self._graph.degree() if d != 3}
        if bad:
            raise DomainError(f"vertices without degree 3: {bad}")

    @property
    def graph(self) -> nx.MultiGraph:
        return self._graph

    @property
    def name(self) -> str:
        return self._name

    @property
    def vertices(self) -> List[Hashable]:
        return list(self._graph.nodes)

    @property
    def edges(self) -> List[Edge]:
        return list(self._graph.edges(keys=True))

    @property
    def is_loop(self) -> bool:
        """One marker node carrying a single self-loop: the genus-one convention."""
        graph = self._graph
        return graph.number_of_nodes() == 1 and graph.number_of_edges() == 1 and nx.number_of_selfloops(graph) == 1

    @property
    def genus(self) -> int:
        return self._graph.number_of_edges() - self._graph.number_of_nodes() + 1

    def incidence(self) -> Dict[Hashable, List[int]]:
        """Vertex → indices into `edges`, a loop listed twice. The genus-one loop has no vertices."""
        if self.is_loop:
            return {}
        result = {v: [] for v in self._graph.nodes}
        for i, (u, v, _) in enumerate(self.edges):
            result[u].append(i)
            result[v].append(i)
        return result

    def search_order(self) -> List[int]:
        """Edge indices ordered so that vertices complete early along a BFS."""
        edges = self.edges
        if self.is_loop:
            return [0]
        incidence = self.incidence()
        start = next(iter(self._graph.nodes))
        order, seen = [], set()
        for v in [start] + [t for _, t in nx.bfs_edges(self._graph, start)]:
            for i in incidence[v]:
                if i not in seen:
                    seen.add(i)
                    order.append(i)
        assert len(order) == len(edges)
        return order

    def to_json(self):
        return {
            "name": self._name,
            "genus": self.genus,
            "edges": [[str(u), str(v)] for u, v, _ in self.edges],
        }

    def __repr__(self):
        return f"TrivalentGraph(name={self._name}, genus={self.genus})"


def theta_graph() -> TrivalentGraph:
    return TrivalentGraph.from_edges([(0, 1), (0, 1), (0, 1)], name="theta")


def dumbbell_graph() -> TrivalentGraph:
    return TrivalentGraph.from_edges([(0, 0), (0, 1), (1, 1)], name="dumbbell")


def k4_graph() -> TrivalentGraph:
    return TrivalentGraph(nx.MultiGraph(nx.complete_graph(4)), name="k4")


def loop_graph() -> TrivalentGraph:
    return TrivalentGraph.from_edges([("o", "o")], name="loop")


def chain_graph(g: int) -> TrivalentGraph:
    """
    g loops on a path: loop vertices ("l", i) carry a self-loop and a stem to the
    spine ("s", 2), ..., ("s", g − 1); both end loops hang off the end spine vertices.
    g = 2 is the dumbbell, g = 3 the tripod.
    """
    if g < 2:
        raise DomainError(f"chain graphs need genus at least 2, got {g}")
    if g == 2:
        return TrivalentGraph.from_edges(
            [(("l", 1), ("l", 1)), (("l", 1), ("l", 2)), (("l", 2), ("l", 2))], name="chain"
        )
    edges = []
    for i in range(1, g + 1):
        edges.append((("l", i), ("l", i)))
        spine = min(max(i, 2), g - 1)
        edges.append((("l", i), ("s", spine)))
    for i in range(2, g - 1):
        edges.append((("s", i), ("s", i + 1)))
    return TrivalentGraph.from_edges(edges, name="chain")


def standard_genus_graph(g: int, style: str = "theta") -> TrivalentGraph:
    """
    Loops on a path, with the theta graph (or the dumbbell) in genus 2. Genus 1 is a
    single loop edge without trivalent vertices, so its colorings are the color set.
    """
    if g < 1:
        raise DomainError(f"genus must be positive, got {g}")
    if g == 1:
        return loop_graph()
    if g == 2 and style == "theta":
        return theta_graph()
    return chain_graph(g)
