from dataclasses import dataclass, field

import networkx as nx

from domain.entities.composition import Composition
from domain.errors import DomainError


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class LabeledTree:
    vertex_count: int
    edges: frozenset[tuple[int, int]]
    root: int = 0
    graph: nx.Graph = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.vertex_count < 1:
            raise DomainError('a tree has at least one vertex')
        edges = frozenset(_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, 'edges', edges)
        if len(edges) != self.vertex_count - 1:
            raise DomainError(
                f'{len(edges)} edges cannot span {self.vertex_count} vertices as a tree'
            )
        for u, v in edges:
            if u == v or not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise DomainError(f'invalid edge {(u, v)}')
        if not 0 <= self.root < self.vertex_count:
            raise DomainError(f'root {self.root} is not a vertex')
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(edges)
        if not nx.is_tree(graph):
            raise DomainError('edge set is not connected')
        object.__setattr__(self, 'graph', graph)

    def bfs_levels(self) -> dict[int, int]:
        """Distance from the root for every vertex."""
        return dict(nx.single_source_shortest_path_length(self.graph, self.root))

    def degree(self, v: int) -> int:
        return self.graph.degree[v]


@dataclass(frozen=True)
class TreeCensus:
    n: int
    total_rooted_trees: int
    profile_counts: dict[Composition, int]
    distinct_trees: int = 0

    def __post_init__(self):
        assert (
            sum(self.profile_counts.values()) == self.total_rooted_trees
        ), 'profile counts must add up to the census total'
