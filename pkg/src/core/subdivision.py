"""
Search for subdivided cliques: K_m with every edge replaced by a path of at
most r + 1 edges, internally disjoint, as a (not necessarily induced) subgraph.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

import networkx as nx

from src.core.errors import require_capacity
from src.core.graph import FiniteGraph

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubdividedClique:
    branch_vertices: Tuple[str, ...]
    paths: Tuple[Tuple[str, ...], ...]      # one path per pair of branch vertices

    def to_dict(self) -> dict:
        return {'branch_vertices': list(self.branch_vertices), 'paths': [list(p) for p in self.paths]}


def _connect(view_source: nx.Graph, pairs: List[Tuple[str, str]], index: int, used: Set[str],
             paths: Dict[Tuple[str, str], Tuple[str, ...]], r: int) -> Optional[Dict]:
    if index == len(pairs):
        return dict(paths)
    s, t = pairs[index]
    view = nx.restricted_view(view_source, used - {s, t}, [])
    for path in nx.all_simple_paths(view, s, t, cutoff=r + 1):
        interior = path[1:-1]
        paths[(s, t)] = tuple(path)
        used.update(interior)
        found = _connect(view_source, pairs, index + 1, used, paths, r)
        if found is not None:
            return found
        used.difference_update(interior)
        del paths[(s, t)]
    return None


def find_subdivided_clique(graph: FiniteGraph, m: int, r: int) -> Optional[SubdividedClique]:
    """A member of C^r_m inside ``graph``, or None."""
    if m < 2:
        raise ValueError("m must be at least 2")
    if r < 0:
        raise ValueError("r must be a natural number")
    require_capacity('SEARCH_MAX_VERTICES', len(graph))

    source = graph.to_networkx()
    candidates = [v for v in graph.vertices if graph.degree(v) >= m - 1]
    for branch in combinations(candidates, m):
        pairs = list(combinations(branch, 2))
        found = _connect(source, pairs, 0, set(branch), {}, r)
        if found is not None:
            logger.debug(f"Subdivided K_{m} (r={r}) found on branch vertices {branch}")
            return SubdividedClique(tuple(branch), tuple(found[p] for p in pairs))
    return None


def contains_subdivided_clique(graph: FiniteGraph, m: int, r: int) -> bool:
    return find_subdivided_clique(graph, m, r) is not None
