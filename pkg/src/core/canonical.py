"""
AHU-style canonical codes for marked forests.

Each tree is encoded from its centre(s) as a nested parenthesis string whose
labels record the positions at which a vertex occurs in the mark sequence;
a forest's code is the sorted concatenation of its component codes. Equal codes
hold exactly for forests isomorphic by a map respecting the marks.

The orbit index groups the vertices of a forest into automorphism orbits
(relative to an optional mark sequence) so that searches over vertices can
visit one representative per orbit.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from src.core.graph import FiniteGraph


def _mark_labels(marks: Sequence[str]) -> Dict[str, str]:
    positions: Dict[str, List[int]] = defaultdict(list)
    for i, v in enumerate(marks):
        positions[v].append(i)
    return {v: '<' + ','.join(map(str, ps)) + '>' for v, ps in positions.items()}


def _tree_centers(graph: FiniteGraph, component: Iterable[str]) -> List[str]:
    nodes = sorted(component)
    if len(nodes) <= 2:
        return nodes
    deg = {v: graph.degree(v) for v in nodes}
    leaves = [v for v in nodes if deg[v] <= 1]
    removed = len(leaves)
    while removed < len(nodes):
        new_leaves = []
        for u in leaves:
            deg[u] = 0
            for w in graph.neighbors(u):
                if deg[w] > 0:
                    deg[w] -= 1
                    if deg[w] == 1:
                        new_leaves.append(w)
        removed += len(new_leaves)
        leaves = new_leaves
    return sorted(leaves)


def _rooted_code(graph: FiniteGraph, root: str, labels: Mapping[str, str]) -> str:
    parent = {root: None}
    order = []
    stack = [root]
    while stack:
        u = stack.pop()
        order.append(u)
        for w in graph.neighbors(u):
            if w != parent[u]:
                parent[w] = u
                stack.append(w)

    codes: Dict[str, str] = {}
    for u in reversed(order):
        children = sorted(codes[w] for w in graph.neighbors(u) if w != parent[u])
        codes[u] = '(' + labels.get(u, '') + ''.join(children) + ')'
    return codes[root]


def _component_code(graph: FiniteGraph, component: Iterable[str], labels: Mapping[str, str]) -> str:
    return min(_rooted_code(graph, c, labels) for c in _tree_centers(graph, component))


def canonical_code(graph: FiniteGraph, marks: Sequence[str] = ()) -> str:
    """
    Canonical form of ``graph`` with the ordered ``marks``.

    Raises NotAForestError when ``graph`` has a cycle.
    """
    graph.require_forest('canonical_code')
    marks = tuple(marks)
    graph.check_vertices(marks, 'marks')
    labels = _mark_labels(marks)
    return ''.join(sorted(_component_code(graph, comp, labels) for comp in graph.components()))


def marked_signature(graph: FiniteGraph, marks: Sequence[str]) -> Tuple[str, ...]:
    """
    Codes of the marked components only.

    Within one fixed forest two mark sequences have equal signatures iff some
    automorphism maps one onto the other.
    """
    labels = _mark_labels(marks)
    return tuple(sorted(_component_code(graph, comp, labels) for comp in graph.components_meeting(marks)))


def rooted_code(graph: FiniteGraph, vertex: str) -> str:
    """Code of ``vertex``'s component rooted at ``vertex``."""
    cache = graph._cache.setdefault('rooted_codes', {})
    code = cache.get(vertex)
    if code is None:
        graph.require_forest('rooted_code')
        code = _rooted_code(graph, vertex, {vertex: '*'})
        cache[vertex] = code
    return code


@dataclass(frozen=True)
class OrbitIndex:
    """Per-forest lookup of rooted codes, grouped by component."""
    by_code: Mapping[str, Tuple[Tuple[int, str], ...]]   # code -> (component id, first vertex) per component

    def representatives_outside(self, blocked: Iterable[int]) -> List[Tuple[str, str]]:
        """One (code, vertex) per orbit among components not in ``blocked``."""
        blocked = set(blocked)
        found = []
        for code in sorted(self.by_code):
            for comp_id, vertex in self.by_code[code]:
                if comp_id not in blocked:
                    found.append((code, vertex))
                    break
        return found


def orbit_index(graph: FiniteGraph) -> OrbitIndex:
    index = graph._cache.get('orbit_index')
    if index is None:
        graph.require_forest('orbit_index')
        grouped: Dict[str, List[Tuple[int, str]]] = defaultdict(list)
        for comp_id, comp in enumerate(graph.components()):
            seen = set()
            for v in sorted(comp):
                code = rooted_code(graph, v)
                if code not in seen:
                    seen.add(code)
                    grouped[code].append((comp_id, v))
        index = OrbitIndex({code: tuple(entries) for code, entries in grouped.items()})
        graph._cache['orbit_index'] = index
    return index


def vertex_orbit_key(graph: FiniteGraph, marks: Sequence[str], vertex: str) -> Tuple:
    """Key equal for two vertices iff an automorphism fixing ``marks`` swaps them."""
    comp_of = graph.component_index()
    marked = {comp_of[m] for m in marks}
    if comp_of[vertex] not in marked:
        return ('free', rooted_code(graph, vertex))
    return ('bound', marked_signature(graph, tuple(marks) + (vertex,)))


def orbit_representatives(graph: FiniteGraph, marks: Sequence[str] = ()) -> List[Tuple[Tuple, str]]:
    """
    One vertex per orbit of the automorphisms of ``graph`` fixing ``marks``,
    as (orbit key, vertex) pairs in deterministic order.
    """
    comp_of = graph.component_index()
    marked = sorted({comp_of[m] for m in marks})
    reps = [(('free', code), v) for code, v in orbit_index(graph).representatives_outside(marked)]

    seen = set()
    for comp_id in marked:
        for v in sorted(graph.components()[comp_id]):
            key = ('bound', marked_signature(graph, tuple(marks) + (v,)))
            if key not in seen:
                seen.add(key)
                reps.append((key, v))
    return reps
