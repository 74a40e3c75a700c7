"""
Finite simple graphs and the class axioms of K_alpha.

A ``FiniteGraph`` is immutable: vertex ids are opaque strings, edges are stored
once as sorted pairs. Derived data (components, the networkx view, forest
orbit indices) is computed on first use and cached on the instance.
"""
from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement, product
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Tuple, Union

import networkx as nx

from src.config.config import Config
from src.core.errors import GraphError, NotAForestError, UnknownVertexError, require_capacity

logger = logging.getLogger(__name__)

Vertex = str
Edge = Tuple[str, str]
VertexSet = FrozenSet[str]


class FiniteGraph:
    """Simple undirected graph with named vertices."""

    __slots__ = ('_vertices', '_edges', '_adj', '_cache')

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[Iterable[str]] = ()):
        vertex_set = frozenset(str(v) for v in vertices)
        adj: Dict[str, set] = {v: set() for v in vertex_set}
        normalized = set()
        for edge in edges:
            u, v = (str(x) for x in edge)
            if u == v:
                raise GraphError(f"Self-loop at vertex {u}")
            missing = {u, v} - vertex_set
            if missing:
                raise UnknownVertexError(missing, f"edge ({u}, {v})")
            normalized.add((u, v) if u < v else (v, u))
            adj[u].add(v)
            adj[v].add(u)

        self._vertices = vertex_set
        self._edges = frozenset(normalized)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._cache: Dict[str, object] = {}

    # ---- construction helpers -------------------------------------------

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[str]], vertices: Iterable[str] = ()) -> 'FiniteGraph':
        """Graph on the edge endpoints plus any extra ``vertices``."""
        edges = [tuple(e) for e in edges]
        all_vertices = set(vertices)
        for u, v in edges:
            all_vertices.update((u, v))
        return cls(all_vertices, edges)

    @classmethod
    def from_networkx(cls, graph: nx.Graph, prefix: str = '') -> 'FiniteGraph':
        return cls((f"{prefix}{v}" for v in graph.nodes),
                   ((f"{prefix}{u}", f"{prefix}{v}") for u, v in graph.edges))

    def to_networkx(self) -> nx.Graph:
        """Frozen networkx view of this graph."""
        graph = self._cache.get('nx')
        if graph is None:
            graph = nx.Graph()
            graph.add_nodes_from(sorted(self._vertices))
            graph.add_edges_from(sorted(self._edges))
            graph = nx.freeze(graph)
            self._cache['nx'] = graph
        return graph

    def to_dict(self) -> dict:
        return {'vertices': list(self.vertices), 'edges': [list(e) for e in self.edges]}

    # ---- basic accessors --------------------------------------------------

    @property
    def vertices(self) -> Tuple[str, ...]:
        return tuple(sorted(self._vertices))

    @property
    def vertex_set(self) -> VertexSet:
        return self._vertices

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self._edges))

    @property
    def edge_set(self) -> FrozenSet[Edge]:
        return self._edges

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self._vertices

    def __iter__(self) -> Iterator[str]:
        return iter(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._vertices, self._edges))

    def __repr__(self) -> str:
        return f"FiniteGraph(|V|={len(self._vertices)}, |E|={len(self._edges)})"

    def neighbors(self, vertex: str) -> FrozenSet[str]:
        try:
            return self._adj[vertex]
        except KeyError:
            raise UnknownVertexError([vertex]) from None

    def degree(self, vertex: str) -> int:
        return len(self.neighbors(vertex))

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def has_edge(self, u: str, v: str) -> bool:
        return v in self._adj.get(u, ())

    def check_vertices(self, vertices: Iterable[str], context: str = '') -> VertexSet:
        """Return ``vertices`` as a frozenset, raising on ids foreign to this graph."""
        selected = frozenset(vertices)
        missing = selected - self._vertices
        if missing:
            raise UnknownVertexError(missing, context)
        return selected

    def edges_within(self, vertices: Iterable[str]) -> int:
        selected = set(vertices)
        return sum(1 for u, v in self._edges if u in selected and v in selected)

    def induced(self, vertices: Iterable[str]) -> 'FiniteGraph':
        selected = self.check_vertices(vertices, 'induced subgraph')
        return FiniteGraph(selected, (e for e in self._edges if e[0] in selected and e[1] in selected))

    def relabel(self, mapping: Mapping[str, str]) -> 'FiniteGraph':
        """Rename vertices; ids missing from ``mapping`` keep their name."""
        rename = lambda v: mapping.get(v, v)
        renamed = [rename(v) for v in self._vertices]
        if len(set(renamed)) != len(renamed):
            raise GraphError("Relabelling is not injective")
        return FiniteGraph(renamed, ((rename(u), rename(v)) for u, v in self._edges))

    def prefixed(self, prefix: str) -> 'FiniteGraph':
        return self.relabel({v: f"{prefix}{v}" for v in self._vertices})

    # ---- components and acyclicity ---------------------------------------

    def components(self) -> Tuple[VertexSet, ...]:
        """Connected components, ordered by their smallest vertex id."""
        comps = self._cache.get('components')
        if comps is None:
            found = [frozenset(c) for c in nx.connected_components(self.to_networkx())]
            comps = tuple(sorted(found, key=min))
            self._cache['components'] = comps
        return comps

    def component_index(self) -> Dict[str, int]:
        index = self._cache.get('component_index')
        if index is None:
            index = {v: i for i, comp in enumerate(self.components()) for v in comp}
            self._cache['component_index'] = index
        return index

    def component_of(self, vertex: str) -> VertexSet:
        self.check_vertices([vertex])
        return self.components()[self.component_index()[vertex]]

    def components_meeting(self, vertices: Iterable[str]) -> Tuple[VertexSet, ...]:
        index = self.component_index()
        ids = sorted({index[v] for v in self.check_vertices(vertices)})
        return tuple(self.components()[i] for i in ids)

    def is_forest(self) -> bool:
        return len(self._edges) == len(self._vertices) - len(self.components())

    def find_cycle(self) -> Tuple[str, ...]:
        """Vertices of some cycle, or ``()`` for a forest."""
        if self.is_forest():
            return ()
        cycle_edges = nx.find_cycle(self.to_networkx())
        return tuple(u for u, _ in cycle_edges)

    def require_forest(self, context: str = '') -> None:
        if not self.is_forest():
            raise NotAForestError(self.find_cycle(), context)


# ==================== CLASS INDEX ====================

@dataclass(frozen=True, order=True)
class ClassIndex:
    """alpha in {0, 1, 2, ...} or omega (``value=None``)."""
    value: Optional[int] = None

    def __post_init__(self):
        if self.value is not None and self.value < 0:
            raise ValueError(f"Class index must be a natural number or omega, got {self.value}")

    @classmethod
    def omega(cls) -> 'ClassIndex':
        return cls(None)

    @classmethod
    def parse(cls, text: Union[str, int, 'ClassIndex']) -> 'ClassIndex':
        if isinstance(text, ClassIndex):
            return text
        if isinstance(text, int):
            return cls(text)
        token = str(text).strip().lower()
        if token in ('omega', 'w', 'ω', 'inf'):
            return cls(None)
        if not token.isdigit():
            raise ValueError(f"Invalid class index {text!r}: expected a natural number or 'omega'")
        return cls(int(token))

    @property
    def is_omega(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return 'omega' if self.value is None else str(self.value)


OMEGA = ClassIndex.omega()


@dataclass(frozen=True)
class Violation:
    """Witness that a graph is not in K_alpha."""
    kind: str                      # 'cycle' | 'degree' | 'path'
    vertices: Tuple[str, ...]
    detail: str

    def to_dict(self) -> dict:
        return {'kind': self.kind, 'vertices': list(self.vertices), 'detail': self.detail}


@dataclass(frozen=True)
class MembershipReport:
    is_member: bool
    alpha: ClassIndex
    violation: Optional[Violation] = None

    def __bool__(self) -> bool:
        return self.is_member


def predimension(graph: FiniteGraph, vertices: Iterable[str]) -> int:
    """delta(S) = |S| - number of edges inside S."""
    selected = graph.check_vertices(vertices, 'predimension')
    return len(selected) - graph.edges_within(selected)


def _farthest_path(graph: FiniteGraph, source: str, length: int) -> Optional[List[str]]:
    """In a forest, a simple path of ``length`` edges from ``source`` if one exists."""
    distances = nx.single_source_shortest_path_length(graph.to_networkx(), source, cutoff=length)
    targets = sorted(v for v, d in distances.items() if d == length)
    if not targets:
        return None
    return nx.shortest_path(graph.to_networkx(), source, targets[0])


def class_membership(graph: FiniteGraph, alpha: Union[ClassIndex, str, int]) -> MembershipReport:
    """
    Decide G in K_alpha and name a witness on failure.

    Acyclicity is checked first; then max degree <= 3 for alpha = 0, and for
    alpha = n >= 1 that no vertex of degree >= n + 2 starts a simple path of
    2n edges.
    """
    alpha = ClassIndex.parse(alpha)

    cycle = graph.find_cycle()
    if cycle:
        return MembershipReport(False, alpha, Violation('cycle', cycle, f"cycle of length {len(cycle)}"))

    if alpha.is_omega:
        return MembershipReport(True, alpha)

    if alpha.value == 0:
        for v in graph.vertices:
            if graph.degree(v) > 3:
                return MembershipReport(False, alpha, Violation(
                    'degree', (v,), f"degree {graph.degree(v)} exceeds 3"))
        return MembershipReport(True, alpha)

    n = alpha.value
    for v in graph.vertices:
        if graph.degree(v) < n + 2:
            continue
        path = _farthest_path(graph, v, 2 * n)
        if path is not None:
            return MembershipReport(False, alpha, Violation(
                'path', tuple(path),
                f"vertex {v} of degree {graph.degree(v)} starts a path with {2 * n} edges"))
    return MembershipReport(True, alpha)


def dist(graph: FiniteGraph, a: str, b: str) -> Union[int, float]:
    """Shortest-path edge count, ``math.inf`` across components."""
    graph.check_vertices((a, b), 'dist')
    try:
        return nx.shortest_path_length(graph.to_networkx(), a, b)
    except nx.NetworkXNoPath:
        return math.inf


class Neighbourhood(NamedTuple):
    graph: FiniteGraph
    root: str


def neighborhood(graph: FiniteGraph, a: str, r: int) -> Neighbourhood:
    """Induced subgraph on the vertices within distance ``r`` of ``a``."""
    graph.check_vertices([a], 'neighborhood')
    if r < 0:
        raise ValueError("Radius must be a natural number")
    ball = nx.single_source_shortest_path_length(graph.to_networkx(), a, cutoff=r)
    return Neighbourhood(graph.induced(ball), a)


def distances_from(graph: FiniteGraph, source: str) -> Dict[str, int]:
    """BFS distances from ``source``; vertices in other components are absent."""
    cache = graph._cache.setdefault('bfs', {})
    found = cache.get(source)
    if found is None:
        graph.check_vertices([source])
        found = dict(nx.single_source_shortest_path_length(graph.to_networkx(), source))
        while len(cache) >= max(1, Config.DISTANCE_CACHE_SIZE):
            cache.pop(next(iter(cache)))
        cache[source] = found
    return found


# ==================== ENUMERATION ====================

def _trees_of_order(order: int) -> List[FiniteGraph]:
    if order == 0:
        return []
    if order == 1:
        return [FiniteGraph(['0'])]
    return [FiniteGraph.from_networkx(t) for t in nx.nonisomorphic_trees(order)]


def _partitions(total: int, largest: int) -> Iterator[Tuple[int, ...]]:
    """Integer partitions of ``total`` with parts <= ``largest``, parts descending."""
    if total == 0:
        yield ()
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, part):
            yield (part,) + rest


def _disjoint_union(parts: Iterable[FiniteGraph]) -> FiniteGraph:
    vertices: List[str] = []
    edges: List[Edge] = []
    counter = 0
    for part in parts:
        mapping = {}
        for v in part.vertices:
            mapping[v] = f"v{counter}"
            counter += 1
        vertices.extend(mapping.values())
        edges.extend((mapping[u], mapping[v]) for u, v in part.edges)
    return FiniteGraph(vertices, edges)


@lru_cache(maxsize=64)
def _class_trees(alpha: ClassIndex, order: int, max_degree: Optional[int]) -> Tuple[Tuple[str, FiniteGraph], ...]:
    from src.core.canonical import canonical_code

    found = []
    for tree in _trees_of_order(order):
        if max_degree is not None and tree.max_degree() > max_degree:
            continue
        if class_membership(tree, alpha):
            tree = _disjoint_union([tree])
            found.append((canonical_code(tree), tree))
    return tuple(sorted(found, key=lambda item: item[0]))


@lru_cache(maxsize=32)
def _enumerate(alpha: ClassIndex, max_size: int) -> Tuple[FiniteGraph, ...]:
    from src.core.canonical import canonical_code

    members = []
    for total in range(max_size + 1):
        for partition in _partitions(total, total):
            sizes = sorted(set(partition))
            choices_per_size = []
            for size in sizes:
                trees = [t for _, t in _class_trees(alpha, size, None)]
                choices_per_size.append(list(combinations_with_replacement(trees, partition.count(size))))
            for selection in product(*choices_per_size):
                forest = _disjoint_union(t for group in selection for t in group)
                members.append((total, canonical_code(forest), forest))
    members.sort(key=lambda item: (item[0], item[1]))
    logger.debug(f"enumerate_class({alpha}, {max_size}): {len(members)} members")
    return tuple(forest for _, _, forest in members)


def enumerate_class(alpha: Union[ClassIndex, str, int], max_size: int) -> List[FiniteGraph]:
    """
    All members of K_alpha with at most ``max_size`` vertices, one per
    isomorphism class, ordered by (size, canonical code).
    """
    alpha = ClassIndex.parse(alpha)
    require_capacity('ENUMERATION_MAX_SIZE', max_size)
    return list(_enumerate(alpha, max_size))


def enumerate_trees(alpha: Union[ClassIndex, str, int], max_size: int,
                    max_degree: Optional[int] = None) -> List[FiniteGraph]:
    """Connected members of K_alpha up to ``max_size``, optionally degree-pruned."""
    alpha = ClassIndex.parse(alpha)
    require_capacity('ENUMERATION_MAX_SIZE', max_size)
    trees = []
    for order in range(1, max_size + 1):
        trees.extend(t for _, t in _class_trees(alpha, order, max_degree))
    return trees


def bfs_order(graph: FiniteGraph, sources: Iterable[str], within: Optional[Iterable[str]] = None) -> List[str]:
    """Vertices reachable from ``sources`` (inside ``within``), in BFS order, ties by id."""
    allowed = graph.vertex_set if within is None else frozenset(within)
    seen = set(s for s in sources if s in allowed)
    queue = deque(sorted(seen))
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in sorted(graph.neighbors(u)):
            if w in allowed and w not in seen:
                seen.add(w)
                queue.append(w)
    return order
