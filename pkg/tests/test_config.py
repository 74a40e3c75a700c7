"""
Tests for configuration constants and the GFL_CAPACITY overrides
"""

import os
import sys
import unittest
from pathlib import Path
from unittest.mock import patch

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.config.config import Config
from src.core.errors import CapacityError, require_capacity


class TestCapacity(unittest.TestCase):

    @patch.dict(os.environ, {}, clear=False)
    def test_defaults(self):
        os.environ.pop(Config.CAPACITY_ENV_VAR, None)
        self.assertEqual(Config.capacity('SEARCH_MAX_VERTICES'), 32)
        self.assertEqual(Config.capacity('GAME_MAX_ROUNDS'), 6)

    @patch.dict(os.environ, {'GFL_CAPACITY': 'search=40, rounds=7'})
    def test_named_overrides(self):
        self.assertEqual(Config.capacity('SEARCH_MAX_VERTICES'), 40)
        self.assertEqual(Config.capacity('GAME_MAX_ROUNDS'), 7)
        self.assertEqual(Config.capacity('ENUMERATION_MAX_SIZE'), Config.ENUMERATION_MAX_SIZE)

    @patch.dict(os.environ, {'GFL_CAPACITY': '100'})
    def test_bare_integer_raises_vertex_guards_only(self):
        self.assertEqual(Config.capacity('SEARCH_MAX_VERTICES'), 100)
        self.assertEqual(Config.capacity('FOREST_GAME_MAX_VERTICES'), 100)
        self.assertEqual(Config.capacity('GAME_MAX_ROUNDS'), Config.GAME_MAX_ROUNDS)

    @patch.dict(os.environ, {'GFL_CAPACITY': 'search=abc,bogus=3,oracle=5'})
    def test_malformed_entries_are_ignored(self):
        with self.assertLogs('src.config.config', level='WARNING') as log:
            self.assertEqual(Config.capacity('SEARCH_MAX_VERTICES'), Config.SEARCH_MAX_VERTICES)
        self.assertEqual(len(log.records), 2)
        self.assertEqual(Config.capacity('ORACLE_MAX_VERTICES'), 5)

    def test_unknown_guard(self):
        with self.assertRaises(KeyError):
            Config.capacity('NO_SUCH_GUARD')

    @patch.dict(os.environ, {'GFL_CAPACITY': 'rounds=2'})
    def test_override_reaches_the_guard(self):
        with self.assertRaises(CapacityError) as ctx:
            require_capacity('GAME_MAX_ROUNDS', 3)
        self.assertEqual((ctx.exception.requested, ctx.exception.limit), (3, 2))
        require_capacity('GAME_MAX_ROUNDS', 2)


class TestApproximantParameters(unittest.TestCase):

    def test_radius(self):
        self.assertEqual([Config.approximant_radius(k) for k in (1, 2, 3)], [1, 4, 13])

    def test_size_cap(self):
        self.assertEqual(Config.approximant_size_cap(1), 4)
        self.assertEqual(Config.approximant_size_cap(2), 10)

    def test_value_cap(self):
        self.assertEqual([Config.approximant_value_cap(k) for k in (1, 2, 3)], [1, 1, 2])


if __name__ == '__main__':
    unittest.main()
