"""
Test suite for the strong-structure calculus.

The component-based implementations are checked against the brute-force
reference implementations over small random forests, plus worked examples
for each extension tag.
"""

import sys
import unittest
from itertools import combinations
from pathlib import Path

from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import NoPathError, NotAForestError, PreconditionError
from src.core.graph import FiniteGraph, enumerate_class
from src.core.oracles import (
    oracle_classify, oracle_closure_star, oracle_dimension, oracle_is_closed, oracle_is_weakly_closed,
    oracle_tower_closure, oracle_weak_closure,
)
from src.core.strong_structure import (
    ExtensionKind, classify_extension, closure_star, dimension, is_closed, is_weakly_closed,
    minimal_pairs_over, relative_dimension, unique_path_to, weak_closure,
)
from tests.fixtures.builders import cycle_graph, forest_with_subset, forests, path_graph, star_graph


class TestAgainstOracles(unittest.TestCase):
    """Fast paths agree with the definitions on every small forest tried."""

    @given(forest_with_subset(max_size=7))
    @settings(max_examples=60, deadline=None)
    def test_is_closed(self, case):
        graph, A = case
        self.assertEqual(is_closed(graph, A), oracle_is_closed(graph, A))

    @given(forest_with_subset(max_size=7))
    @settings(max_examples=60, deadline=None)
    def test_is_weakly_closed(self, case):
        graph, A = case
        self.assertEqual(is_weakly_closed(graph, A), oracle_is_weakly_closed(graph, A))

    @given(forest_with_subset(max_size=7))
    @settings(max_examples=50, deadline=None)
    def test_closure_star(self, case):
        graph, S = case
        self.assertEqual(closure_star(graph, S).closure, oracle_closure_star(graph, S))

    @given(forest_with_subset(max_size=7))
    @settings(max_examples=50, deadline=None)
    def test_weak_closure(self, case):
        graph, S = case
        self.assertEqual(weak_closure(graph, S), oracle_weak_closure(graph, S))

    @given(forest_with_subset(max_size=7))
    @settings(max_examples=50, deadline=None)
    def test_dimension(self, case):
        graph, S = case
        self.assertEqual(dimension(graph, S), oracle_dimension(graph, S))

    @given(forest_with_subset(max_size=7))
    @settings(max_examples=40, deadline=None)
    def test_tower_reaches_the_closure(self, case):
        graph, S = case
        self.assertEqual(oracle_tower_closure(graph, S)[-1], closure_star(graph, S).closure)

    @given(forest_with_subset(max_size=7))
    @settings(max_examples=60, deadline=None)
    def test_classify_extension(self, case):
        graph, A = case
        self.assertEqual(classify_extension(A, graph).kind, oracle_classify(A, graph))

    @given(st.data())
    @settings(max_examples=40, deadline=None)
    def test_is_closed_relative_to_superset(self, data):
        graph = data.draw(forests(min_size=1, max_size=7))
        B = frozenset(data.draw(st.sets(st.sampled_from(graph.vertices))))
        A = frozenset(data.draw(st.sets(st.sampled_from(sorted(B))))) if B else frozenset()
        self.assertEqual(is_closed(graph, A, B), oracle_is_closed(graph, A, B))
        self.assertEqual(is_weakly_closed(graph, A, B), oracle_is_weakly_closed(graph, A, B))


class TestClosures(unittest.TestCase):

    def test_closure_is_union_of_components(self):
        graph = FiniteGraph(['a', 'b', 'c', 'd', 'e'], [('a', 'b'), ('b', 'c'), ('d', 'e')])
        result = closure_star(graph, ['a'])
        self.assertEqual(result.closure, frozenset({'a', 'b', 'c'}))
        self.assertEqual([step.added for step in result.chain], ['b', 'c'])
        self.assertTrue(all(step.delta == 0 for step in result.chain))
        self.assertEqual(result.replay(['a']), result.closure)

    @given(forest_with_subset(max_size=9))
    @settings(max_examples=60, deadline=None)
    def test_chain_replays_to_closure(self, case):
        graph, S = case
        result = closure_star(graph, S)
        self.assertEqual(result.replay(S), result.closure)

    def test_weak_closure_adds_connecting_path(self):
        path = path_graph(5)
        self.assertEqual(weak_closure(path, ['p0', 'p3']), frozenset({'p0', 'p1', 'p2', 'p3'}))
        self.assertEqual(weak_closure(path, ['p2']), frozenset({'p2'}))

    def test_weak_closure_spans_steiner_tree(self):
        star = star_graph(4)
        self.assertEqual(weak_closure(star, ['l0', 'l1', 'l2']), frozenset({'c', 'l0', 'l1', 'l2'}))

    def test_dimension_and_relative_dimension(self):
        graph = FiniteGraph(['a', 'b', 'c', 'd'], [('a', 'b')])
        self.assertEqual(dimension(graph, ['a', 'b', 'c']), 2)
        self.assertEqual(dimension(graph, []), 0)
        self.assertEqual(relative_dimension(graph, ['b'], ['a']), 0)
        self.assertEqual(relative_dimension(graph, ['c'], ['a']), 1)

    def test_requires_forest(self):
        with self.assertRaises(NotAForestError):
            closure_star(cycle_graph(3), ['c0'])
        with self.assertRaises(NotAForestError):
            is_closed(cycle_graph(4), ['c0'])

    def test_subset_check(self):
        with self.assertRaises(PreconditionError):
            is_closed(path_graph(3), ['p0', 'p1'], ['p0'])


class TestClassifyExtension(unittest.TestCase):
    """One worked example per tag."""

    def test_closed(self):
        graph = FiniteGraph(['a', 'b', 'c'], [('b', 'c')])
        report = classify_extension(['a'], graph)
        self.assertEqual(report.kind, ExtensionKind.CLOSED)
        self.assertEqual(report.relative_predimension, 1)

    def test_zero_minimal_pair(self):
        report = classify_extension(['p0'], path_graph(2))
        self.assertEqual(report.kind, ExtensionKind.ZERO_MINIMAL_PAIR)
        self.assertEqual(report.singleton, 'p1')
        self.assertEqual(report.relative_predimension, 0)

    def test_minimal_pair(self):
        report = classify_extension(['p0', 'p2'], path_graph(3))
        self.assertEqual(report.kind, ExtensionKind.MINIMAL_PAIR)
        self.assertEqual(report.relative_predimension, -1)

    def test_weak_minimal_pair(self):
        report = classify_extension(['p0', 'p3'], path_graph(4))
        self.assertEqual(report.kind, ExtensionKind.WEAK_MINIMAL_PAIR)
        self.assertTrue(report.kind.is_intrinsic)
        self.assertFalse(report.kind.is_minimal_pair)

    def test_weak_intrinsic(self):
        report = classify_extension(['l0', 'l1', 'l2'], star_graph(3))
        # a single vertex with three edges is still a minimal pair
        self.assertEqual(report.kind, ExtensionKind.MINIMAL_PAIR)
        graph = FiniteGraph(['a', 'b', 'd', 'x', 'y'], [('a', 'x'), ('x', 'y'), ('y', 'b'), ('y', 'd')])
        self.assertEqual(classify_extension(['a', 'b', 'd'], graph).kind, ExtensionKind.WEAK_INTRINSIC)

    def test_intrinsic(self):
        # z hangs off the connecting path, so {a, b, x, y} is weakly closed
        graph = FiniteGraph(['a', 'b', 'x', 'y', 'z'], [('a', 'x'), ('x', 'y'), ('y', 'b'), ('y', 'z')])
        report = classify_extension(['a', 'b'], graph)
        self.assertEqual(report.kind, ExtensionKind.INTRINSIC)
        self.assertEqual(report.relative_predimension, -1)

    def test_zero_intrinsic(self):
        graph = FiniteGraph(['a', 'x', 'y'], [('a', 'x'), ('x', 'y')])
        self.assertEqual(classify_extension(['a'], graph).kind, ExtensionKind.ZERO_INTRINSIC)

    def test_weakly_closed(self):
        graph = FiniteGraph(['a', 'x', 'z'], [('a', 'x')])
        self.assertEqual(classify_extension(['a'], graph).kind, ExtensionKind.WEAKLY_CLOSED)

    def test_none(self):
        graph = FiniteGraph(['a', 'b', 'x', 'z'], [('a', 'x'), ('b', 'x')])
        self.assertEqual(classify_extension(['a', 'b'], graph).kind, ExtensionKind.NONE)

    def test_graph_argument_must_be_induced(self):
        B = path_graph(3)
        A = FiniteGraph(['p0', 'p1'])
        with self.assertRaises(PreconditionError):
            classify_extension(A, B)
        self.assertEqual(classify_extension(B.induced(['p0', 'p1']), B).kind, ExtensionKind.ZERO_MINIMAL_PAIR)

    def test_to_dict(self):
        data = classify_extension(['p0'], path_graph(2)).to_dict()
        self.assertEqual(data['kind'], 'zeroMinimalPair')
        self.assertEqual(data['chain'], [{'base': ['p0'], 'added': 'p1', 'delta': 0}])


class TestPathsAndPairs(unittest.TestCase):

    def test_minimal_pairs_over(self):
        steps = minimal_pairs_over(path_graph(3), ['p1'])
        self.assertEqual(sorted(s.added for s in steps), ['p0', 'p2'])
        self.assertTrue(all(s.delta == 0 for s in steps))

    def test_unique_path(self):
        self.assertEqual(unique_path_to(path_graph(4), ['p0'], 'p3'), ('p3', 'p2', 'p1', 'p0'))
        self.assertEqual(unique_path_to(path_graph(4), ['p0'], 'p0'), ('p0',))

    def test_unique_path_without_path(self):
        graph = FiniteGraph(['a', 'b'])
        with self.assertRaises(NoPathError):
            unique_path_to(graph, ['a'], 'b')

    def test_unique_path_needs_weak_closedness(self):
        with self.assertRaises(PreconditionError):
            unique_path_to(path_graph(4), ['p0', 'p2'], 'p1')
        with self.assertRaises(PreconditionError):
            unique_path_to(path_graph(4), ['p0', 'p2'], 'p3', check_precondition=True)


class TestClosureInteractions(unittest.TestCase):

    def test_union_of_intrinsic_extensions(self):
        for graph in enumerate_class('omega', 5):
            vertices = sorted(graph.vertices)
            subsets = [frozenset(c) for size in range(len(vertices) + 1) for c in combinations(vertices, size)]
            for A in subsets:
                intrinsic = [B for B in subsets if A < B
                             and classify_extension(A, graph.induced(B)).kind.is_intrinsic]
                for B1, B2 in combinations(intrinsic, 2):
                    union = classify_extension(A, graph.induced(B1 | B2))
                    self.assertTrue(union.kind.is_intrinsic, (graph.to_dict(), sorted(A), sorted(B1), sorted(B2)))

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_closed_set_misses_outside_closures(self, data):
        graph, S = data.draw(forest_with_subset(max_size=8))
        A = closure_star(graph, S).closure
        self.assertTrue(is_closed(graph, A))
        outside = sorted(graph.vertex_set - A)
        b = data.draw(st.sets(st.sampled_from(outside))) if outside else set()
        self.assertFalse(A & closure_star(graph, b).closure)

    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def test_closure_splits_over_disjoint_tuples(self, data):
        graph, a = data.draw(forest_with_subset(max_size=8))
        closure_a = closure_star(graph, a).closure
        outside = sorted(graph.vertex_set - closure_a)
        b = frozenset(data.draw(st.sets(st.sampled_from(outside)))) if outside else frozenset()
        closure_b = closure_star(graph, b).closure

        self.assertEqual(closure_star(graph, a | b).closure, closure_a | closure_b)
        self.assertFalse(closure_a & closure_b)
        self.assertFalse(any(graph.neighbors(v) & closure_b for v in closure_a))


if __name__ == '__main__':
    unittest.main()
