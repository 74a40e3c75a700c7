"""
A sufficient condition for Duplicator to win the k-round EF game.

With r = (3^k - 1) / 2 it asks, symmetrically for both boards: for every y
on one board and every k - 1 picks on the other, is there a vertex x on the
other board, k-similar to y at radius r, at distance > 2r + 1 from all
picks? True certifies a Duplicator win; false says nothing.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from src.config.config import Config
from src.core.canonical import orbit_representatives, rooted_code
from src.core.errors import PreconditionError, require_capacity
from src.core.graph import FiniteGraph, distances_from, neighborhood
from src.games.ef_game import distance_ef_game

logger = logging.getLogger(__name__)


@dataclass
class SufficiencyReport:
    holds: bool
    radius: int
    failure: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {'holds': self.holds, 'radius': self.radius, 'failure': self.failure}


class _SimilarityTable:
    """k-similarity of r-neighbourhoods, cached by rooted code."""

    def __init__(self, k: int, r: int):
        self.k = k
        self.r = r
        self._balls: Dict[Tuple[int, str], Tuple[str, FiniteGraph]] = {}
        self._verdicts: Dict[FrozenSet[str], bool] = {}

    def ball(self, graph: FiniteGraph, v: str) -> Tuple[str, FiniteGraph]:
        key = (id(graph), v)
        found = self._balls.get(key)
        if found is None:
            local = neighborhood(graph, v, self.r).graph
            found = (rooted_code(local, v), local)
            self._balls[key] = found
        return found

    def similar(self, g1: FiniteGraph, x: str, g2: FiniteGraph, y: str) -> bool:
        code_x, ball_x = self.ball(g1, x)
        code_y, ball_y = self.ball(g2, y)
        if code_x == code_y:
            return True
        pair = frozenset((code_x, code_y))
        verdict = self._verdicts.get(pair)
        if verdict is None:
            verdict = distance_ef_game(ball_x, x, ball_y, y, self.k).duplicator_wins
            self._verdicts[pair] = verdict
        return verdict


def _covering_picks(graph: FiniteGraph, targets: Set[str], picks: int, reach: int) -> Optional[Tuple[str, ...]]:
    """At most ``picks`` vertices within ``reach`` of every target, if any exist."""
    if not targets:
        return ()
    comp_of = graph.component_index()
    if len({comp_of[t] for t in targets}) > picks:
        return None

    near: Dict[str, Set[str]] = {}
    for t in targets:
        for v, d in distances_from(graph, t).items():
            if d <= reach:
                near.setdefault(v, set()).add(t)
    candidates = sorted(near)
    for chosen in combinations(candidates, min(picks, len(candidates))):
        covered = set().union(*(near[v] for v in chosen))
        if covered >= targets:
            return chosen
    return None


def _one_direction(here: FiniteGraph, there: FiniteGraph, k: int, r: int,
                   table: _SimilarityTable, label: str) -> Optional[dict]:
    """First y in ``there`` the picks in ``here`` can fence off, or None."""
    for _, y in orbit_representatives(there):
        similar = {x for x in here.vertices if table.similar(here, x, there, y)}
        blocking = _covering_picks(here, similar, k - 1, 2 * r + 1)
        if blocking is not None:
            logger.debug(f"sufficiency condition ({label}) fails at y={y}, picks={blocking}")
            return {'condition': label, 'y': y, 'picks': list(blocking)}
    return None


def duplicator_sufficient(left: FiniteGraph, right: FiniteGraph, k: int) -> SufficiencyReport:
    """Check both directions of the far-away similar vertex condition on forests."""
    if k < 1:
        raise PreconditionError("duplicator_sufficient needs k >= 1")
    require_capacity('GAME_MAX_ROUNDS', k)
    for graph in (left, right):
        graph.require_forest('duplicator_sufficient')
        require_capacity('FOREST_GAME_MAX_VERTICES', len(graph))

    r = Config.approximant_radius(k)
    table = _SimilarityTable(k, r)
    failure = (_one_direction(left, right, k, r, table, 'i')
               or _one_direction(right, left, k, r, table, 'ii'))
    return SufficiencyReport(failure is None, r, failure)
