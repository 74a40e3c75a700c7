"""
Ehrenfeucht-Fraisse games and their distance variant, solved by minimax.

A position is the sequence of picks on each side plus the rounds left. Each
new pair is checked against the earlier pairs when it is made, so a position
that is reached is always legal. In the last round Duplicator wins iff both
sides realise the same set of pick profiles: (equal, adjacent) per earlier
pick in the plain game, the distance per earlier pick in the distance game.

On forests the solver works up to automorphism: the memo is keyed by the
marked signatures of the two pick sequences, Spoiler tries one vertex per
orbit, and Duplicator's candidates are reduced the same way, trying
candidates of the same orbit type as Spoiler's vertex first.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.config.config import Config
from src.core.canonical import marked_signature, orbit_representatives, vertex_orbit_key
from src.core.errors import PreconditionError, require_capacity
from src.core.graph import FiniteGraph, distances_from, neighborhood

logger = logging.getLogger(__name__)

Picks = Tuple[str, ...]


class Player(str, Enum):
    SPOILER = 'Spoiler'
    DUPLICATOR = 'Duplicator'


class GameMode(str, Enum):
    PLAIN = 'plain'
    DISTANCE = 'distance'


@dataclass(frozen=True)
class GamePosition:
    left: FiniteGraph
    right: FiniteGraph
    pairs: Tuple[Tuple[str, str], ...]
    rounds_left: int
    mode: GameMode = GameMode.PLAIN

    def __post_init__(self):
        if self.rounds_left < 0:
            raise ValueError("rounds_left must be a natural number")


@dataclass
class GameResult:
    winner: Player
    mode: GameMode
    rounds: int
    positions_explored: int
    transcript: Optional[List[dict]] = field(default=None)

    @property
    def duplicator_wins(self) -> bool:
        return self.winner is Player.DUPLICATOR

    def to_dict(self) -> dict:
        data = {
            'winner': self.winner.value,
            'mode': self.mode.value,
            'rounds': self.rounds,
            'positions_explored': self.positions_explored,
        }
        if self.transcript is not None:
            data['transcript'] = self.transcript
        return data


class _Side:
    """One board: the graph plus cached structure used by the solver."""

    def __init__(self, graph: FiniteGraph, mode: GameMode):
        self.graph = graph
        self.mode = mode
        self.forest = graph.is_forest()

    def profile(self, picks: Picks, x: str) -> Tuple:
        if self.mode is GameMode.PLAIN:
            return tuple((x == p, self.graph.has_edge(x, p)) for p in picks)
        return tuple(distances_from(self.graph, p).get(x, math.inf) for p in picks)

    def near(self, picks: Picks) -> Set[str]:
        """Vertices whose profile can differ from the all-far profile."""
        found: Set[str] = set()
        if self.mode is GameMode.PLAIN:
            for p in picks:
                found.add(p)
                found.update(self.graph.neighbors(p))
        else:
            for comp in self.graph.components_meeting(picks):
                found.update(comp)
        return found

    def far_profile(self, picks: Picks) -> Tuple:
        if self.mode is GameMode.PLAIN:
            return tuple((False, False) for _ in picks)
        return tuple(math.inf for _ in picks)

    def profile_set(self, picks: Picks) -> Set[Tuple]:
        near = self.near(picks)
        found = {self.profile(picks, x) for x in near}
        if len(near) < len(self.graph):
            found.add(self.far_profile(picks))
        return found

    def with_profile(self, picks: Picks, wanted: Tuple) -> List[str]:
        near = self.near(picks)
        if wanted == self.far_profile(picks):
            pool: Iterable[str] = (v for v in self.graph.vertices if v not in near or self.profile(picks, v) == wanted)
            return list(pool)
        return sorted(v for v in near if self.profile(picks, v) == wanted)

    def spoiler_moves(self, picks: Picks) -> List[Tuple[Tuple, str]]:
        if self.forest:
            return orbit_representatives(self.graph, picks)
        return [(None, v) for v in self.graph.vertices]

    def orbit_key(self, picks: Picks, x: str):
        return vertex_orbit_key(self.graph, picks, x) if self.forest else None

    def position_key(self, picks: Picks):
        return marked_signature(self.graph, picks) if self.forest else picks


class GameSolver:
    """
    Minimax solver for one pair of boards.

    The memo table belongs to the instance; share results, not solvers,
    between threads.
    """

    def __init__(self, left: FiniteGraph, right: FiniteGraph, mode: GameMode = GameMode.PLAIN,
                 memoize: bool = True):
        both_forests = left.is_forest() and right.is_forest()
        guard = 'FOREST_GAME_MAX_VERTICES' if both_forests else 'GAME_MAX_VERTICES'
        require_capacity(guard, max(len(left), len(right)))
        self.mode = GameMode(mode)
        self.sides = (_Side(left, self.mode), _Side(right, self.mode))
        self.memoize = memoize
        self.memo: Dict[Tuple, bool] = {}
        self.positions_explored = 0

    # ---- legality -------------------------------------------------------

    def legal_extension(self, picks: Tuple[Picks, Picks], x: str, y: str) -> bool:
        left, right = self.sides
        return left.profile(picks[0], x) == right.profile(picks[1], y)

    def legal_start(self, pairs: Sequence[Tuple[str, str]]) -> bool:
        picks: Tuple[Picks, Picks] = ((), ())
        for x, y in pairs:
            if not self.legal_extension(picks, x, y):
                return False
            picks = (picks[0] + (x,), picks[1] + (y,))
        return True

    # ---- search ---------------------------------------------------------

    def _key(self, picks: Tuple[Picks, Picks], rounds: int) -> Tuple:
        return (self.sides[0].position_key(picks[0]), self.sides[1].position_key(picks[1]), rounds)

    def responses(self, picks: Tuple[Picks, Picks], side: int, x: str) -> List[str]:
        """Duplicator's legal answers on the other board to ``x`` on ``side``."""
        mover, answerer = self.sides[side], self.sides[1 - side]
        wanted = mover.profile(picks[side], x)
        candidates = answerer.with_profile(picks[1 - side], wanted)
        if not answerer.forest:
            if mover.graph is answerer.graph and x in candidates:
                candidates.remove(x)
                candidates.insert(0, x)
            return candidates

        target = mover.orbit_key(picks[side], x)
        seen = set()
        preferred, rest = [], []
        for y in candidates:
            key = answerer.orbit_key(picks[1 - side], y)
            if key in seen:
                continue
            seen.add(key)
            (preferred if key == target else rest).append(y)
        return preferred + rest

    def _extend(self, picks: Tuple[Picks, Picks], side: int, x: str, y: str) -> Tuple[Picks, Picks]:
        if side == 0:
            return (picks[0] + (x,), picks[1] + (y,))
        return (picks[0] + (y,), picks[1] + (x,))

    def duplicator_wins(self, picks: Tuple[Picks, Picks], rounds: int) -> bool:
        if rounds == 0:
            return True
        key = self._key(picks, rounds) if self.memoize else None
        if key is not None and key in self.memo:
            return self.memo[key]

        self.positions_explored += 1
        if rounds == 1:
            result = self.sides[0].profile_set(picks[0]) == self.sides[1].profile_set(picks[1])
        else:
            result = all(
                any(self.duplicator_wins(self._extend(picks, side, x, y), rounds - 1)
                    for y in self.responses(picks, side, x))
                for side in (0, 1)
                for _, x in self.sides[side].spoiler_moves(picks[side])
            )
        if key is not None:
            self.memo[key] = result
        return result

    # ---- principal line -------------------------------------------------

    def _last_round_move(self, picks: Tuple[Picks, Picks]) -> dict:
        for side in (0, 1):
            mine = self.sides[side].profile_set(picks[side])
            theirs = self.sides[1 - side].profile_set(picks[1 - side])
            missing = mine - theirs
            if missing:
                wanted = min(missing, key=repr)
                x = self.sides[side].with_profile(picks[side], wanted)[0]
                return {'side': side, 'spoiler': x, 'duplicator': None}
        side, x = 0, self.sides[0].graph.vertices[0]
        return {'side': side, 'spoiler': x, 'duplicator': self.responses(picks, side, x)[0]}

    def principal_line(self, picks: Tuple[Picks, Picks], rounds: int) -> List[dict]:
        """One line of optimal play from the given position."""
        line = []
        while rounds > 0:
            wins = self.duplicator_wins(picks, rounds)
            if rounds == 1 and not wins:
                line.append(self._last_round_move(picks))
                break
            move = None
            for side in (0, 1):
                for _, x in self.sides[side].spoiler_moves(picks[side]):
                    answers = self.responses(picks, side, x)
                    good = [y for y in answers if self.duplicator_wins(self._extend(picks, side, x, y), rounds - 1)]
                    if wins and good:
                        move = (side, x, good[0])
                    elif not wins and not good:
                        move = (side, x, answers[0] if answers else None)
                    if move:
                        break
                if move:
                    break
            if move is None:
                break
            side, x, y = move
            line.append({'side': side, 'spoiler': x, 'duplicator': y})
            if y is None:
                break
            picks = self._extend(picks, side, x, y)
            rounds -= 1
        return line

    def solve(self, rounds: int, start: Sequence[Tuple[str, str]] = (), transcript: bool = False) -> GameResult:
        start = [(str(x), str(y)) for x, y in start]
        self.sides[0].graph.check_vertices([x for x, _ in start], 'start pairs')
        self.sides[1].graph.check_vertices([y for _, y in start], 'start pairs')
        if not self.legal_start(start):
            line = [] if transcript else None
            return GameResult(Player.SPOILER, self.mode, rounds, 0, line)

        picks = (tuple(x for x, _ in start), tuple(y for _, y in start))
        wins = self.duplicator_wins(picks, rounds)
        line = self.principal_line(picks, rounds) if transcript else None
        logger.debug(f"{self.mode.value} game, {rounds} rounds: "
                     f"{'Duplicator' if wins else 'Spoiler'} ({self.positions_explored} positions)")
        return GameResult(Player.DUPLICATOR if wins else Player.SPOILER, self.mode, rounds,
                          self.positions_explored, line)


def _check_start(start: Optional[Sequence[Tuple[str, str]]]) -> List[Tuple[str, str]]:
    pairs = list(start or ())
    for pair in pairs:
        if len(pair) != 2:
            raise PreconditionError(f"Malformed start pair {pair!r}")
    lefts = [x for x, _ in pairs]
    rights = [y for _, y in pairs]
    for x, y in zip(lefts, rights):
        # a partial map: equal left ids must go to equal right ids and conversely
        if any(x == x2 and y != y2 or y == y2 and x != x2 for x2, y2 in pairs):
            raise PreconditionError(f"Start pairs do not form a partial map at ({x}, {y})")
    return pairs


def ef_game(left: FiniteGraph, right: FiniteGraph, k: int,
            start: Optional[Sequence[Tuple[str, str]]] = None,
            memoize: bool = True, transcript: bool = False) -> GameResult:
    """Winner of the k-round EF game, optionally from given start pairs."""
    if k < 0:
        raise PreconditionError("k must be a natural number")
    require_capacity('GAME_MAX_ROUNDS', k)
    pairs = _check_start(start)
    return GameSolver(left, right, GameMode.PLAIN, memoize).solve(k, pairs, transcript)


def distance_ef_game(left: FiniteGraph, a: str, right: FiniteGraph, b: str, k: int,
                     start_is_round: Optional[bool] = None,
                     memoize: bool = True, transcript: bool = False) -> GameResult:
    """
    Distance game started by selecting (a, b).

    By default k full rounds follow the start; with ``start_is_round`` the
    start is round 1 and k - 1 rounds follow.
    """
    if k < 1:
        raise PreconditionError("distance_ef_game needs k >= 1")
    left.check_vertices([a], 'distance_ef_game')
    right.check_vertices([b], 'distance_ef_game')
    if start_is_round is None:
        start_is_round = Config.DISTANCE_GAME_START_IS_ROUND
    rounds = k - 1 if start_is_round else k
    require_capacity('GAME_MAX_ROUNDS', rounds)
    return GameSolver(left, right, GameMode.DISTANCE, memoize).solve(rounds, [(a, b)], transcript)


def k_similar(left: FiniteGraph, a: str, right: FiniteGraph, b: str, k: int, r: int,
              start_is_round: Optional[bool] = None) -> bool:
    """Whether a and b have k-similar r-neighbourhoods."""
    first = neighborhood(left, a, r)
    second = neighborhood(right, b, r)
    return distance_ef_game(first.graph, a, second.graph, b, k, start_is_round).duplicator_wins
