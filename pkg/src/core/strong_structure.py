"""
Closedness, minimal pairs, intrinsic extensions, closures and dimension.

Every operation here works over a forest ambient, where the predimension
calculus reduces to component structure:

* A is closed in B iff no edge joins A to B \\ A;
* A is weakly closed in B iff every component of B \\ A sends at most one
  edge to A;
* cl*(S) is the union of the components meeting S, and d(S) counts them.

Brute-force versions of the same notions live in ``src.core.oracles``.
"""
from __future__ import annotations

import heapq
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Tuple, Union

import networkx as nx

from src.core.errors import NoPathError, PreconditionError
from src.core.graph import FiniteGraph, bfs_order, predimension

logger = logging.getLogger(__name__)


class ExtensionKind(str, Enum):
    CLOSED = 'closed'
    WEAKLY_CLOSED = 'weaklyClosed'
    MINIMAL_PAIR = 'minimalPair'
    ZERO_MINIMAL_PAIR = 'zeroMinimalPair'
    WEAK_MINIMAL_PAIR = 'weakMinimalPair'
    INTRINSIC = 'intrinsic'
    ZERO_INTRINSIC = 'zeroIntrinsic'
    WEAK_INTRINSIC = 'weakIntrinsic'
    NONE = 'none'

    @property
    def is_intrinsic(self) -> bool:
        """True for every tag that certifies an intrinsic extension."""
        return self in _INTRINSIC_KINDS

    @property
    def is_minimal_pair(self) -> bool:
        return self in (ExtensionKind.MINIMAL_PAIR, ExtensionKind.ZERO_MINIMAL_PAIR)


_INTRINSIC_KINDS = frozenset({
    ExtensionKind.MINIMAL_PAIR, ExtensionKind.ZERO_MINIMAL_PAIR, ExtensionKind.WEAK_MINIMAL_PAIR,
    ExtensionKind.INTRINSIC, ExtensionKind.ZERO_INTRINSIC, ExtensionKind.WEAK_INTRINSIC,
})


@dataclass(frozen=True)
class ChainStep:
    """(base, base + added) is a minimal pair; ``delta`` is delta(base + added / base)."""
    base: FrozenSet[str]
    added: str
    delta: int

    def to_dict(self) -> dict:
        return {'base': sorted(self.base), 'added': self.added, 'delta': self.delta}


@dataclass(frozen=True)
class ClosureResult:
    closure: FrozenSet[str]
    chain: Tuple[ChainStep, ...] = ()

    def replay(self, start: Iterable[str]) -> FrozenSet[str]:
        """Rebuild the closure from ``start`` by adding the chain's vertices."""
        return frozenset(start).union(step.added for step in self.chain)

    def to_dict(self) -> dict:
        return {'closure': sorted(self.closure), 'chain': [s.to_dict() for s in self.chain]}


@dataclass(frozen=True)
class ExtensionReport:
    kind: ExtensionKind
    relative_predimension: int
    singleton: Optional[str] = None
    chain: Tuple[ChainStep, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {
            'kind': self.kind.value,
            'relative_predimension': self.relative_predimension,
            'singleton': self.singleton,
            'chain': [s.to_dict() for s in self.chain],
        }


def _scope(graph: FiniteGraph, subset: Iterable[str], superset: Optional[Iterable[str]],
           context: str) -> Tuple[FrozenSet[str], FrozenSet[str]]:
    graph.require_forest(context)
    inner = graph.check_vertices(subset, context)
    outer = graph.vertex_set if superset is None else graph.check_vertices(superset, context)
    if not inner <= outer:
        raise PreconditionError(f"{context}: A is not a subset of B (extra: {', '.join(sorted(inner - outer))})")
    return inner, outer


def _outside_components(graph: FiniteGraph, inner: FrozenSet[str],
                        outer: FrozenSet[str]) -> List[Tuple[FrozenSet[str], int]]:
    """Components of outer \\ inner with their number of edges into inner."""
    rest = outer - inner
    found = []
    remaining = set(rest)
    for start in sorted(rest):
        if start not in remaining:
            continue
        component = frozenset(bfs_order(graph, [start], within=rest))
        remaining -= component
        edges_in = sum(len(graph.neighbors(v) & inner) for v in component)
        found.append((component, edges_in))
    return found


def is_closed(graph: FiniteGraph, A: Iterable[str], B: Optional[Iterable[str]] = None) -> bool:
    """A <=* B: no edge between A and B \\ A."""
    inner, outer = _scope(graph, A, B, 'is_closed')
    rest = outer - inner
    return not any(graph.neighbors(a) & rest for a in inner)


def is_weakly_closed(graph: FiniteGraph, A: Iterable[str], B: Optional[Iterable[str]] = None) -> bool:
    """A <= B: no path in B leaves A and comes back."""
    inner, outer = _scope(graph, A, B, 'is_weakly_closed')
    return all(edges <= 1 for _, edges in _outside_components(graph, inner, outer))


def _closure_chain(graph: FiniteGraph, start: FrozenSet[str], target: FrozenSet[str]) -> Tuple[ChainStep, ...]:
    """Minimal-pair tower from ``start`` up to ``target``, smallest id first."""
    current = set(start)
    frontier: List[str] = []
    for v in current:
        for w in graph.neighbors(v):
            if w in target and w not in current:
                heapq.heappush(frontier, w)

    steps = []
    while frontier:
        v = heapq.heappop(frontier)
        if v in current:
            continue
        steps.append(ChainStep(frozenset(current), v, 1 - len(graph.neighbors(v) & current)))
        current.add(v)
        for w in graph.neighbors(v):
            if w in target and w not in current:
                heapq.heappush(frontier, w)
    return tuple(steps)


def closure_star(graph: FiniteGraph, S: Iterable[str]) -> ClosureResult:
    """cl*(S): the union of the components meeting S, with its minimal-pair tower."""
    graph.require_forest('closure_star')
    start = graph.check_vertices(S, 'closure_star')
    closure = frozenset().union(*graph.components_meeting(start)) if start else frozenset()
    return ClosureResult(closure, _closure_chain(graph, start, closure))


def weak_closure(graph: FiniteGraph, S: Iterable[str]) -> FrozenSet[str]:
    """cl(S): add connecting paths between distinct components of S until none remain."""
    graph.require_forest('weak_closure')
    current = set(graph.check_vertices(S, 'weak_closure'))

    for _ in range(len(graph) + 1):
        component_of = graph.induced(current).component_index()
        added = set()
        for component, edges_in in _outside_components(graph, frozenset(current), graph.vertex_set):
            if edges_in < 2:
                continue
            attachments = sorted((k, c) for k in component for c in graph.neighbors(k) & current)
            local = graph.induced(component).to_networkx()
            for i, (k1, c1) in enumerate(attachments):
                for k2, c2 in attachments[i + 1:]:
                    if component_of[c1] != component_of[c2]:
                        added.update(nx.shortest_path(local, k1, k2))
        if not added:
            break
        current |= added
    return frozenset(current)


def dimension(graph: FiniteGraph, S: Iterable[str]) -> int:
    """d(S) = min delta(C) over C containing S, i.e. the number of components meeting S."""
    graph.require_forest('dimension')
    return len(graph.components_meeting(graph.check_vertices(S, 'dimension')))


def relative_dimension(graph: FiniteGraph, S: Iterable[str], T: Iterable[str]) -> int:
    """d(S / T) = d(S u T) - d(T)."""
    S = graph.check_vertices(S, 'relative_dimension')
    T = graph.check_vertices(T, 'relative_dimension')
    return dimension(graph, S | T) - dimension(graph, T)


def minimal_pairs_over(graph: FiniteGraph, A: Iterable[str]) -> Tuple[ChainStep, ...]:
    """Every b with (A, A + b) a minimal pair in ``graph``."""
    inner, _ = _scope(graph, A, None, 'minimal_pairs_over')
    found = []
    for v in graph.vertices:
        if v in inner:
            continue
        edges_in = len(graph.neighbors(v) & inner)
        if edges_in:
            found.append(ChainStep(inner, v, 1 - edges_in))
    return tuple(found)


def _is_attached_path(graph: FiniteGraph, component: FrozenSet[str], inner: FrozenSet[str]) -> bool:
    """``component`` induces a path whose two ends each carry one edge into ``inner``."""
    local = graph.induced(component)
    if len(local.edges) != len(component) - 1 or local.max_degree() > 2:
        return False
    ends = [v for v in local.vertices if local.degree(v) <= 1]
    if len(ends) != 2:
        return False
    return all(len(graph.neighbors(e) & inner) == 1 for e in ends)


def classify_extension(A: Union[FiniteGraph, Iterable[str]], B: FiniteGraph) -> ExtensionReport:
    """
    Most restrictive tag describing how B extends A, with delta(B/A).

    ``A`` may be a vertex collection or a FiniteGraph that must be an induced
    substructure of ``B``.
    """
    if isinstance(A, FiniteGraph):
        if not A.vertex_set <= B.vertex_set or B.induced(A.vertex_set) != A:
            raise PreconditionError("classify_extension: A is not an induced substructure of B")
        A = A.vertex_set
    inner, outer = _scope(B, A, None, 'classify_extension')
    rest = outer - inner
    delta = predimension(B, outer) - predimension(B, inner)
    components = _outside_components(B, inner, outer)

    if all(edges == 0 for _, edges in components):
        return ExtensionReport(ExtensionKind.CLOSED, delta)

    chain = _closure_chain(B, inner, outer)
    if len(rest) == 1:
        (b,) = rest
        kind = ExtensionKind.ZERO_MINIMAL_PAIR if delta == 0 else ExtensionKind.MINIMAL_PAIR
        return ExtensionReport(kind, delta, b, chain)

    if len(components) == 1 and components[0][1] == 2 and _is_attached_path(B, components[0][0], inner):
        return ExtensionReport(ExtensionKind.WEAK_MINIMAL_PAIR, delta, None, chain)

    if weak_closure(B, inner) == outer:
        return ExtensionReport(ExtensionKind.WEAK_INTRINSIC, delta, None, chain)

    if all(edges >= 1 for _, edges in components):
        kind = ExtensionKind.ZERO_INTRINSIC if delta == 0 else ExtensionKind.INTRINSIC
        return ExtensionReport(kind, delta, None, chain)

    if all(edges <= 1 for _, edges in components):
        return ExtensionReport(ExtensionKind.WEAKLY_CLOSED, delta)
    return ExtensionReport(ExtensionKind.NONE, delta)


def unique_path_to(graph: FiniteGraph, A: Iterable[str], b: str, check_precondition: bool = False) -> Tuple[str, ...]:
    """
    The path from ``b`` to A meeting A only in its last vertex.

    Requires A weakly closed in ``graph``; pass ``check_precondition=True``
    to verify that up front.
    """
    inner, _ = _scope(graph, A, None, 'unique_path_to')
    graph.check_vertices([b], 'unique_path_to')
    if check_precondition and not is_weakly_closed(graph, inner):
        raise PreconditionError("unique_path_to: A is not weakly closed")
    if b in inner:
        return (b,)

    component = bfs_order(graph, [b], within=graph.vertex_set - inner)
    exits = sorted((k, a) for k in component for a in graph.neighbors(k) & inner)
    if not exits:
        raise NoPathError(f"unique_path_to: no path from {b} to A")
    if len(exits) > 1:
        raise PreconditionError(f"unique_path_to: {b} reaches A along {len(exits)} paths; A is not weakly closed")

    k, a = exits[0]
    local = graph.induced(component).to_networkx()
    return tuple(nx.shortest_path(local, b, k)) + (a,)
