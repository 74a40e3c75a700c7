"""
Tests for the EF game solver, the distance game and k-similarity
"""

import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import CapacityError, PreconditionError, UnknownVertexError
from src.core.graph import FiniteGraph
from src.games.ef_game import (
    GameMode, GamePosition, GameSolver, Player, distance_ef_game, ef_game, k_similar,
)
from src.logic.evaluator import eval_formula
from tests.fixtures.builders import cycle_graph, forests, isolated, path_graph, rank_two_sentences

EDGE = path_graph(2, prefix='e')
TWO_ISOLATED = isolated(2)
TWO_EDGES = FiniteGraph(['a0', 'a1', 'b0', 'b1'], [('a0', 'a1'), ('b0', 'b1')])


class TestPlainGame(unittest.TestCase):

    def test_zero_rounds(self):
        self.assertEqual(ef_game(EDGE, TWO_ISOLATED, 0).winner, Player.DUPLICATOR)

    def test_edge_against_two_points(self):
        self.assertTrue(ef_game(EDGE, TWO_ISOLATED, 1).duplicator_wins)
        self.assertEqual(ef_game(EDGE, TWO_ISOLATED, 2).winner, Player.SPOILER)

    def test_paths(self):
        self.assertEqual(ef_game(path_graph(3), path_graph(4, prefix='q'), 2).winner, Player.SPOILER)

    def test_square_against_two_edges(self):
        self.assertEqual(ef_game(cycle_graph(4), TWO_EDGES, 2).winner, Player.DUPLICATOR)
        self.assertEqual(ef_game(cycle_graph(4), TWO_EDGES, 3).winner, Player.SPOILER)

    def test_result_to_dict(self):
        data = ef_game(EDGE, TWO_ISOLATED, 2).to_dict()
        self.assertEqual(data['winner'], 'Spoiler')
        self.assertEqual(data['mode'], 'plain')
        self.assertEqual(data['rounds'], 2)
        self.assertNotIn('transcript', data)


class TestStartPairs(unittest.TestCase):

    def test_start_pairs_change_the_verdict(self):
        path = path_graph(3)
        self.assertTrue(ef_game(path, path, 1, start=[('p0', 'p0')]).duplicator_wins)
        self.assertEqual(ef_game(path, path, 1, start=[('p0', 'p1')]).winner, Player.SPOILER)

    def test_illegal_start_is_lost_at_once(self):
        path = path_graph(3)
        result = ef_game(path, path, 2, start=[('p0', 'p1'), ('p2', 'p0')])
        self.assertEqual(result.winner, Player.SPOILER)
        self.assertEqual(result.positions_explored, 0)

    def test_start_must_be_a_partial_map(self):
        path = path_graph(3)
        with self.assertRaises(PreconditionError):
            ef_game(path, path, 1, start=[('p0', 'p1'), ('p0', 'p2')])
        with self.assertRaises(PreconditionError):
            ef_game(path, path, 1, start=[('p0', 'p1', 'p2')])

    def test_start_vertices_must_exist(self):
        with self.assertRaises(UnknownVertexError):
            ef_game(EDGE, TWO_ISOLATED, 1, start=[('e0', 'nowhere')])


class TestLimits(unittest.TestCase):

    def test_negative_rounds(self):
        with self.assertRaises(PreconditionError):
            ef_game(EDGE, EDGE, -1)

    def test_round_guard(self):
        with self.assertRaises(CapacityError) as ctx:
            ef_game(EDGE, EDGE, 7)
        self.assertEqual(ctx.exception.guard, 'GAME_MAX_ROUNDS')

    def test_position_rounds(self):
        with self.assertRaises(ValueError):
            GamePosition(EDGE, EDGE, (), -1)


class TestSolverVariants(unittest.TestCase):

    @given(forests(min_size=1, max_size=5), forests(min_size=1, max_size=5), st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_memo_does_not_change_verdict(self, left, right, k):
        self.assertEqual(ef_game(left, right, k).winner, ef_game(left, right, k, memoize=False).winner)

    @given(forests(min_size=1, max_size=5), forests(min_size=1, max_size=5), st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_orbit_reduction_does_not_change_verdict(self, left, right, k):
        plain = GameSolver(left, right)
        for side in plain.sides:
            side.forest = False
        self.assertEqual(plain.solve(k).winner, ef_game(left, right, k).winner)

    @given(forests(min_size=1, max_size=6), forests(min_size=1, max_size=6))
    @settings(max_examples=40, deadline=None)
    def test_sentence_disagreement_means_spoiler_wins(self, left, right):
        disagree = any(eval_formula(left, s) != eval_formula(right, s) for s in rank_two_sentences())
        if disagree:
            self.assertEqual(ef_game(left, right, 2).winner, Player.SPOILER)


class TestTranscript(unittest.TestCase):

    def test_spoiler_line(self):
        result = ef_game(EDGE, TWO_ISOLATED, 2, transcript=True)
        line = result.to_dict()['transcript']
        self.assertEqual(len(line), 2)
        self.assertIsNotNone(line[0]['duplicator'])
        self.assertIsNone(line[1]['duplicator'])

    def test_duplicator_line(self):
        result = ef_game(EDGE, path_graph(2, prefix='q'), 2, transcript=True)
        self.assertEqual(len(result.transcript), 2)
        self.assertTrue(all(move['duplicator'] is not None for move in result.transcript))


class TestDistanceGame(unittest.TestCase):

    def test_start_pair_is_not_a_round_by_default(self):
        path = path_graph(3)
        result = distance_ef_game(path, 'p0', path, 'p1', 1)
        self.assertEqual(result.winner, Player.SPOILER)
        self.assertEqual(result.mode, GameMode.DISTANCE)

    def test_start_pair_as_round(self):
        path = path_graph(3)
        self.assertTrue(distance_ef_game(path, 'p0', path, 'p1', 1, start_is_round=True).duplicator_wins)

    def test_needs_a_round(self):
        with self.assertRaises(PreconditionError):
            distance_ef_game(EDGE, 'e0', EDGE, 'e0', 0)

    def test_same_vertex(self):
        path = path_graph(4)
        self.assertTrue(distance_ef_game(path, 'p1', path, 'p1', 2).duplicator_wins)

    def test_k_similar(self):
        path = path_graph(3)
        self.assertTrue(k_similar(path, 'p0', path, 'p1', 1, 1))
        self.assertFalse(k_similar(path, 'p0', path, 'p1', 2, 1))


if __name__ == '__main__':
    unittest.main()
