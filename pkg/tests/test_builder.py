"""
Tests for free joins, closed embeddings, generic chains and the pseudofinite chain
"""

import sys
import unittest
from itertools import combinations
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.core.errors import CapacityError, EnumerationExhaustedError, NotAForestError, PreconditionError
from src.core.graph import FiniteGraph, class_membership, enumerate_class
from src.core.strong_structure import is_closed
from src.generic.builder import (
    ChainBuilder, disjoint_copies, find_closed_embedding, free_join, generic_chain, pseudofinite_chain,
    universality_report,
)
from tests.fixtures.builders import cycle_graph, isolated, path_graph

AB = FiniteGraph(['a', 'b'], [('a', 'b')])
BC = FiniteGraph(['b', 'c'], [('b', 'c')])


class TestFreeJoin(unittest.TestCase):

    def test_join_over_shared_vertex(self):
        joined = free_join(AB, ['b'], BC)
        self.assertEqual(joined, FiniteGraph(['a', 'b', 'c'], [('a', 'b'), ('b', 'c')]))
        self.assertEqual(free_join(AB, FiniteGraph(['b']), BC), joined)

    def test_overlap_must_be_the_shared_part(self):
        with self.assertRaises(PreconditionError):
            free_join(AB, [], BC)

    def test_shared_part_must_be_induced(self):
        with self.assertRaises(PreconditionError):
            free_join(AB, FiniteGraph(['a', 'b']), AB)

    def test_sides_must_agree_on_shared_edges(self):
        with self.assertRaises(PreconditionError):
            free_join(AB, ['a', 'b'], FiniteGraph(['a', 'b']))

    def test_disjoint_copies(self):
        copies = disjoint_copies([('x', path_graph(2)), ('y', path_graph(2))])
        self.assertEqual(len(copies), 4)
        self.assertEqual(len(copies.components()), 2)
        self.assertTrue(copies.has_edge('xp0', 'xp1'))
        self.assertFalse(copies.has_edge('xp1', 'yp0'))

    def test_full_amalgamation(self):
        # every B with A closed in B is C[A] plus a disjoint rest D
        for alpha in ('0', '1', '2', 'omega'):
            members = enumerate_class(alpha, 6)
            for C in members:
                C = C.prefixed('c')
                vertices = sorted(C.vertices)
                for size in range(len(vertices) + 1):
                    for A in combinations(vertices, size):
                        for D in members:
                            if len(C) + len(D) > 6:
                                break
                            B = free_join(C.induced(A), (), D.prefixed('d'))
                            self.assertTrue(class_membership(B, alpha))
                            self.assertTrue(is_closed(B, A))
                            joined = free_join(B, A, C)
                            self.assertTrue(class_membership(joined, alpha), (alpha, joined.to_dict()))
                            self.assertTrue(is_closed(joined, C.vertex_set))


class TestClosedEmbedding(unittest.TestCase):

    def test_maps_onto_a_matching_component(self):
        ambient = FiniteGraph(['p0', 'p1', 'p2', 'q0', 'q1'], [('p0', 'p1'), ('p1', 'p2'), ('q0', 'q1')])
        mapping = find_closed_embedding(ambient, AB)
        self.assertEqual(set(mapping), {'a', 'b'})
        self.assertEqual(set(mapping.values()), {'q0', 'q1'})
        self.assertTrue(is_closed(ambient, mapping.values()))

    def test_needs_enough_components(self):
        self.assertIsNone(find_closed_embedding(isolated(3), path_graph(3)))
        self.assertIsNone(find_closed_embedding(isolated(1), isolated(2, prefix='w')))
        self.assertIsNotNone(find_closed_embedding(isolated(3), isolated(2, prefix='w')))

    def test_requires_forests(self):
        with self.assertRaises(NotAForestError):
            find_closed_embedding(cycle_graph(3), AB)


class TestPseudofiniteChain(unittest.TestCase):

    def test_first_member_is_empty(self):
        self.assertEqual(len(pseudofinite_chain('omega', 0, 3)), 0)

    def test_contains_every_small_member(self):
        chain = pseudofinite_chain('omega', 6, 3)
        report = universality_report(chain, 'omega', 3)
        self.assertTrue(report)
        self.assertEqual(report.checked, 7)
        self.assertEqual(report.to_dict()['missing'], [])

    def test_small_stage_misses_members(self):
        report = universality_report(pseudofinite_chain('omega', 1, 3), 'omega', 3)
        self.assertFalse(report)
        self.assertEqual(len(report.missing), 5)

    def test_index_range(self):
        with self.assertRaises(EnumerationExhaustedError):
            pseudofinite_chain('omega', 7, 3)
        with self.assertRaises(PreconditionError):
            pseudofinite_chain('omega', -1, 3)


class TestGenericChain(unittest.TestCase):

    def test_single_vertex_bound(self):
        chain = generic_chain('omega', 5, 1)
        self.assertEqual(len(chain.stages), 2)
        self.assertEqual(len(chain.ledger), 1)
        self.assertTrue(chain.exhausted)
        self.assertEqual(len(chain.final), 1)

    def test_ledger_and_closed_stages(self):
        chain = generic_chain('omega', 10, 2)
        self.assertEqual([entry.obligation.kind for entry in chain.ledger], ['u', 'u', 'u', 'h'])
        self.assertTrue(chain.exhausted)
        self.assertEqual(chain.pending, 0)
        self.assertEqual(len(chain.final), 6)
        for previous, nxt in zip(chain.stages, chain.stages[1:]):
            self.assertTrue(is_closed(nxt, previous.vertex_set))

    def test_extension_keeps_the_old_copy(self):
        chain = generic_chain('omega', 10, 2)
        first, last = chain.ledger[0], chain.ledger[-1]
        # the (h) step extends the copy made by the first (u) step
        self.assertTrue(set(dict(first.embedding).values()) <= set(dict(last.embedding).values()))

    def test_stops_early_with_pending_work(self):
        chain = generic_chain('omega', 2, 2)
        self.assertEqual(len(chain.stages), 3)
        self.assertFalse(chain.exhausted)
        self.assertEqual(chain.pending, 2)
        self.assertEqual(chain.provenance()['steps'], 2)

    def test_builder_steps_one_at_a_time(self):
        builder = ChainBuilder('omega', 1)
        self.assertTrue(builder.step())
        self.assertFalse(builder.step())
        self.assertEqual(len(builder.current), 1)

    def test_step_guard(self):
        with self.assertRaises(CapacityError):
            generic_chain('omega', 501, 1)


if __name__ == '__main__':
    unittest.main()
