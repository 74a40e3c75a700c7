"""
Tests for components over a set, d-independence, free joins and forking
"""

import sys
import unittest
from itertools import combinations
from pathlib import Path

from hypothesis import given, settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import PreconditionError, UnknownVertexError
from src.core.graph import FiniteGraph, enumerate_class
from src.core.independence import (
    AclOracle, ForkingCase, component_over, d_independent, forking_case, is_free_join, nonforking_over,
)
from src.core.strong_structure import closure_star, is_weakly_closed
from tests.fixtures.builders import forests, path_graph


class TestAclOracle(unittest.TestCase):

    def test_trivial(self):
        acl = AclOracle.trivial(path_graph(3))
        self.assertEqual(acl(['p0']), frozenset({'p0'}))
        self.assertTrue(acl.is_algebraically_closed(['p1', 'p2']))

    def test_from_table_closes_under_rules(self):
        graph = path_graph(4)
        acl = AclOracle.from_table(graph, {frozenset({'p0'}): {'p0', 'p1'}, frozenset({'p1'}): {'p1', 'p2'}})
        self.assertEqual(acl(['p0']), frozenset({'p0', 'p1', 'p2'}))
        self.assertEqual(acl(['p3']), frozenset({'p3'}))
        self.assertEqual(acl.name, 'table')

    def test_rejects_non_idempotent_function(self):
        graph = path_graph(4)

        def one_step(X):
            return X.union(*(graph.neighbors(v) for v in X))

        with self.assertRaises(PreconditionError):
            AclOracle.from_function(graph, one_step)

    def test_rejects_foreign_vertices(self):
        with self.assertRaises(UnknownVertexError):
            AclOracle.from_function(path_graph(2), lambda X: X | {'elsewhere'})


class TestComponentsAndIndependence(unittest.TestCase):

    def test_component_over(self):
        self.assertEqual(component_over(path_graph(4), 'p3', ['p1']), frozenset({'p2', 'p3'}))
        self.assertEqual(component_over(path_graph(4), 'p0', []), frozenset({'p0', 'p1', 'p2', 'p3'}))

    def test_component_over_rejects_member_of_A(self):
        with self.assertRaises(PreconditionError):
            component_over(path_graph(3), 'p1', ['p1'])

    def test_independent_of_other_component(self):
        graph = FiniteGraph(['a', 'b', 'c'], [('a', 'b')])
        report = d_independent(graph, ['c'], [], ['a'])
        self.assertTrue(report)
        self.assertEqual(report.to_dict(), {'holds': True, 'failed_clauses': []})

    def test_dimension_clause_fails_for_neighbour(self):
        graph = FiniteGraph(['a', 'b', 'c'], [('a', 'b')])
        report = d_independent(graph, ['b'], [], ['a'])
        self.assertFalse(report)
        self.assertEqual(report.failed_clauses, ('a',))

    def test_both_clauses_fail(self):
        report = d_independent(path_graph(3), ['p0', 'p2'], [], ['p1'])
        self.assertEqual(report.failed_clauses, ('a', 'b'))


class TestFreeJoin(unittest.TestCase):

    def test_free_join_over_shared_vertex(self):
        graph = FiniteGraph(['a', 'b', 'c'], [('a', 'c'), ('c', 'b')])
        self.assertTrue(is_free_join(graph, ['a', 'c'], ['c'], ['c', 'b']))

    def test_edge_across_is_not_free(self):
        self.assertFalse(is_free_join(path_graph(2), ['p0'], [], ['p1']))

    def test_union_must_be_weakly_closed(self):
        self.assertFalse(is_free_join(path_graph(3), ['p0'], [], ['p2']))

    def test_intersection_must_be_C(self):
        with self.assertRaises(PreconditionError):
            is_free_join(path_graph(3), ['p0', 'p1'], [], ['p1', 'p2'])


class TestForking(unittest.TestCase):

    def test_nonforking(self):
        graph = FiniteGraph(['p0', 'p1', 'p2', 'z'], [('p0', 'p1'), ('p1', 'p2')])
        acl = AclOracle.trivial(graph)
        self.assertFalse(nonforking_over(graph, ['p2'], ['p0'], ['p0', 'p1'], acl))
        self.assertTrue(nonforking_over(graph, ['z'], ['p0'], ['p0', 'p1'], acl))
        self.assertTrue(nonforking_over(graph, ['p0'], ['p0'], ['p0', 'p1'], acl))

    def test_nonforking_requires_closed_base(self):
        graph = path_graph(3)
        acl = AclOracle.from_table(graph, {frozenset({'p0'}): {'p0', 'p1'}})
        with self.assertRaises(PreconditionError):
            nonforking_over(graph, ['p2'], ['p0'], ['p0', 'p1'], acl)

    def test_case_outside_closure(self):
        graph = FiniteGraph(['p0', 'p1', 'z', 'w', 'q'], [('p0', 'p1'), ('z', 'w')])
        acl = AclOracle.trivial(graph)
        self.assertEqual(forking_case(graph, 'w', ['p0'], ['p0', 'z'], acl), ForkingCase.OUTSIDE_CLOSURE)
        self.assertIsNone(forking_case(graph, 'q', ['p0'], ['p0', 'z'], acl))

    def test_case_in_B(self):
        graph = path_graph(2)
        self.assertEqual(forking_case(graph, 'p1', ['p0'], ['p0', 'p1'], AclOracle.trivial(graph)),
                         ForkingCase.IN_B)
        algebraic = AclOracle.from_table(graph, {frozenset({'p0'}): {'p0', 'p1'}})
        self.assertIsNone(forking_case(graph, 'p1', ['p0'], ['p0', 'p1'], algebraic))

    def test_case_through_B(self):
        graph = FiniteGraph(['a0', 'b1', 'x'], [('a0', 'b1'), ('b1', 'x')])
        self.assertEqual(forking_case(graph, 'x', ['a0'], ['a0', 'b1'], AclOracle.trivial(graph)),
                         ForkingCase.THROUGH_B)
        algebraic = AclOracle.from_table(graph, {frozenset({'a0'}): {'a0', 'b1'}})
        self.assertIsNone(forking_case(graph, 'x', ['a0'], ['a0', 'b1'], algebraic))

    def test_preconditions(self):
        graph = path_graph(3)
        acl = AclOracle.trivial(graph)
        with self.assertRaises(PreconditionError):
            forking_case(graph, 'p1', ['p0', 'p1'], ['p0'], acl)
        # A = {p0, p2} is not weakly closed in B = the whole path
        with self.assertRaises(PreconditionError):
            forking_case(graph, 'p1', ['p0', 'p2'], ['p0', 'p1', 'p2'], acl)


def _subsets(vertices):
    vertices = sorted(vertices)
    return [frozenset(c) for size in range(len(vertices) + 1) for c in combinations(vertices, size)]


class TestFreeJoinCharacterisation(unittest.TestCase):
    """Exhaustive checks over every forest with at most five vertices."""

    FORESTS = enumerate_class('omega', 5)

    def test_d_independence_is_free_join(self):
        checked = 0
        for graph in self.FORESTS:
            weakly_closed = [S for S in _subsets(graph.vertices) if is_weakly_closed(graph, S)]
            closed_lookup = set(weakly_closed)
            for B1 in weakly_closed:
                for B2 in weakly_closed:
                    C = B1 & B2
                    if C not in closed_lookup:
                        continue
                    self.assertEqual(is_free_join(graph, B1, C, B2), bool(d_independent(graph, B1, C, B2)),
                                     (graph.to_dict(), sorted(B1), sorted(B2)))
                    checked += 1
        self.assertGreater(checked, 1000)

    def test_component_over_is_closure_after_deleting_A(self):
        for graph in self.FORESTS:
            for A in _subsets(graph.vertices):
                outside = graph.vertex_set - closure_star(graph, A).closure
                rest = graph.induced(graph.vertex_set - A)
                for a in sorted(outside):
                    self.assertEqual(component_over(graph, a, A), closure_star(rest, [a]).closure)

    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_independence_survives_shrinking_A(self, data):
        graph = data.draw(forests(min_size=1, max_size=7))
        pick = st.sets(st.sampled_from(graph.vertices))
        b, C, A = data.draw(pick), data.draw(pick), data.draw(pick)
        smaller = data.draw(st.sets(st.sampled_from(sorted(A)))) if A else set()
        if d_independent(graph, b, C, A):
            self.assertTrue(d_independent(graph, b, C, smaller))

    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def test_nonforking_survives_shrinking_B(self, data):
        graph = data.draw(forests(min_size=1, max_size=7))
        acl = AclOracle.trivial(graph)
        pick = st.sets(st.sampled_from(graph.vertices))
        a, A, extra = data.draw(pick), data.draw(pick), data.draw(pick)
        B = A | extra
        middle = A | data.draw(st.sets(st.sampled_from(sorted(extra)))) if extra else A
        if nonforking_over(graph, a, A, B, acl):
            self.assertTrue(nonforking_over(graph, a, A, middle, acl))



if __name__ == '__main__':
    unittest.main()
