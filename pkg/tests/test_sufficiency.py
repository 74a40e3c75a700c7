"""
Tests for the far-away similar vertex condition
"""

import sys
import unittest
from pathlib import Path

from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import NotAForestError, PreconditionError
from src.core.graph import FiniteGraph
from src.games.ef_game import ef_game
from src.games.sufficiency import duplicator_sufficient
from tests.fixtures.builders import cycle_graph, forests, isolated, path_graph


class TestDuplicatorSufficient(unittest.TestCase):

    def test_single_round(self):
        report = duplicator_sufficient(isolated(1), isolated(2), 1)
        self.assertTrue(report)
        self.assertEqual(report.radius, 1)

    def test_many_far_points(self):
        report = duplicator_sufficient(isolated(2), isolated(3, prefix='w'), 2)
        self.assertTrue(report.holds)
        self.assertEqual(report.to_dict(), {'holds': True, 'radius': 4, 'failure': None})

    def test_fails_without_similar_vertex(self):
        report = duplicator_sufficient(path_graph(2), isolated(2), 2)
        self.assertFalse(report)
        self.assertEqual(report.failure['condition'], 'i')
        self.assertEqual(report.failure['picks'], [])

    def test_second_direction(self):
        left = FiniteGraph(['v0', 'v1', 'v2', 'a', 'b'], [('a', 'b')])
        report = duplicator_sufficient(left, isolated(3, prefix='w'), 2)
        self.assertFalse(report)
        self.assertEqual(report.failure['condition'], 'ii')

    @given(forests(min_size=1, max_size=5), forests(min_size=1, max_size=5), st.integers(1, 2))
    @settings(max_examples=40, deadline=None)
    def test_condition_is_sound(self, left, right, k):
        if duplicator_sufficient(left, right, k):
            self.assertTrue(ef_game(left, right, k).duplicator_wins)

    def test_needs_a_round(self):
        with self.assertRaises(PreconditionError):
            duplicator_sufficient(isolated(1), isolated(1), 0)

    def test_requires_forests(self):
        with self.assertRaises(NotAForestError):
            duplicator_sufficient(cycle_graph(3), isolated(1), 1)


if __name__ == '__main__':
    unittest.main()
