"""
Brute-force reference implementations of the strong-structure calculus.

These follow the definitions literally (subset enumeration over the
predimension) and are used by the tests to check the component-based fast
paths. Every entry point refuses ambients above ``ORACLE_MAX_VERTICES``.
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence

import networkx as nx
from networkx.algorithms import isomorphism

from src.core.errors import PreconditionError, require_capacity
from src.core.graph import FiniteGraph, predimension
from src.core.strong_structure import ExtensionKind

logger = logging.getLogger(__name__)


def _guard(graph: FiniteGraph) -> None:
    require_capacity('ORACLE_MAX_VERTICES', len(graph))


def subsets_between(inner: Iterable[str], outer: Iterable[str], proper: bool = False) -> Iterator[FrozenSet[str]]:
    """Every C with inner <= C <= outer, smallest first; ``proper`` drops C == outer."""
    inner = frozenset(inner)
    rest = sorted(frozenset(outer) - inner)
    top = len(rest) - 1 if proper else len(rest)
    for size in range(top + 1):
        for extra in combinations(rest, size):
            yield inner.union(extra)


def _scope(graph: FiniteGraph, A: Iterable[str], B: Optional[Iterable[str]]):
    _guard(graph)
    inner = graph.check_vertices(A, 'oracle')
    outer = graph.vertex_set if B is None else graph.check_vertices(B, 'oracle')
    if not inner <= outer:
        raise PreconditionError("oracle: A is not a subset of B")
    return inner, outer


def oracle_is_closed(graph: FiniteGraph, A: Iterable[str], B: Optional[Iterable[str]] = None) -> bool:
    inner, outer = _scope(graph, A, B)
    base = predimension(graph, inner)
    return all(predimension(graph, C) > base for C in subsets_between(inner, outer) if C != inner)


def oracle_is_weakly_closed(graph: FiniteGraph, A: Iterable[str], B: Optional[Iterable[str]] = None) -> bool:
    inner, outer = _scope(graph, A, B)
    base = predimension(graph, inner)
    return all(predimension(graph, C) >= base for C in subsets_between(inner, outer))


def _least(graph: FiniteGraph, S: Iterable[str], test) -> FrozenSet[str]:
    start, _ = _scope(graph, S, None)
    candidates = [C for C in subsets_between(start, graph.vertex_set) if test(graph, C)]
    return frozenset.intersection(*candidates)


def oracle_closure_star(graph: FiniteGraph, S: Iterable[str]) -> FrozenSet[str]:
    """Intersection of every closed superset of S."""
    return _least(graph, S, oracle_is_closed)


def oracle_weak_closure(graph: FiniteGraph, S: Iterable[str]) -> FrozenSet[str]:
    return _least(graph, S, oracle_is_weakly_closed)


def oracle_dimension(graph: FiniteGraph, S: Iterable[str]) -> int:
    start, _ = _scope(graph, S, None)
    return min(predimension(graph, C) for C in subsets_between(start, graph.vertex_set))


def oracle_is_minimal_pair(B: FiniteGraph, A: Iterable[str]) -> bool:
    inner, outer = _scope(B, A, None)
    if inner == outer or oracle_is_closed(B, inner):
        return False
    return all(oracle_is_closed(B, inner, C) for C in subsets_between(inner, outer, proper=True))


def oracle_is_weak_minimal_pair(B: FiniteGraph, A: Iterable[str]) -> bool:
    inner, outer = _scope(B, A, None)
    if inner == outer or oracle_is_weakly_closed(B, inner):
        return False
    return all(oracle_is_weakly_closed(B, inner, C) for C in subsets_between(inner, outer, proper=True))


def oracle_is_intrinsic(B: FiniteGraph, A: Iterable[str]) -> bool:
    """No proper C with A <= C < B is closed in B."""
    inner, outer = _scope(B, A, None)
    return not any(oracle_is_closed(B, C) for C in subsets_between(inner, outer, proper=True))


def oracle_is_weak_intrinsic(B: FiniteGraph, A: Iterable[str]) -> bool:
    inner, outer = _scope(B, A, None)
    return not any(oracle_is_weakly_closed(B, C) for C in subsets_between(inner, outer, proper=True))


def oracle_classify(A: Iterable[str], B: FiniteGraph) -> ExtensionKind:
    """Most restrictive tag, decided from the definitions alone."""
    inner, outer = _scope(B, A, None)
    delta = predimension(B, outer) - predimension(B, inner)
    if oracle_is_closed(B, inner):
        return ExtensionKind.CLOSED
    if oracle_is_minimal_pair(B, inner):
        return ExtensionKind.ZERO_MINIMAL_PAIR if delta == 0 else ExtensionKind.MINIMAL_PAIR
    if oracle_is_weak_minimal_pair(B, inner):
        return ExtensionKind.WEAK_MINIMAL_PAIR
    if oracle_is_weak_intrinsic(B, inner):
        return ExtensionKind.WEAK_INTRINSIC
    if oracle_is_intrinsic(B, inner):
        return ExtensionKind.ZERO_INTRINSIC if delta == 0 else ExtensionKind.INTRINSIC
    if oracle_is_weakly_closed(B, inner):
        return ExtensionKind.WEAKLY_CLOSED
    return ExtensionKind.NONE


def oracle_tower_closure(graph: FiniteGraph, S: Iterable[str]) -> List[FrozenSet[str]]:
    """
    Grow S by minimal pairs until none is left.

    Returns the tower S = B_0, B_1, ..., B_n; each extension is the smallest
    (then lexicographically first) D with (B_i, B_i + D) a minimal pair.
    """
    current, _ = _scope(graph, S, None)
    tower = [current]
    while True:
        step = None
        for D in subsets_between(frozenset(), graph.vertex_set - current):
            if D and oracle_is_minimal_pair(graph.induced(current | D), current):
                step = D
                break
        if step is None:
            return tower
        current = current | step
        tower.append(current)


def oracle_marked_isomorphic(first: FiniteGraph, first_marks: Sequence[str],
                             second: FiniteGraph, second_marks: Sequence[str]) -> bool:
    """VF2 search for an isomorphism sending the i-th mark to the i-th mark."""
    if len(first_marks) != len(second_marks) or len(first) != len(second):
        return False

    def labelled(graph: FiniteGraph, marks: Sequence[str]) -> nx.Graph:
        positions = {}
        for i, v in enumerate(marks):
            positions.setdefault(v, []).append(i)
        copy = nx.Graph(graph.to_networkx())
        for v in copy.nodes:
            copy.nodes[v]['mark'] = tuple(positions.get(v, ()))
        return copy

    matcher = isomorphism.GraphMatcher(
        labelled(first, first_marks), labelled(second, second_marks),
        node_match=lambda x, y: x['mark'] == y['mark'])
    return matcher.is_isomorphic()
