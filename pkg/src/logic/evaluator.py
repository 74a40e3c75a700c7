"""
Tarskian evaluation of formulas on finite graphs.

Quantifiers expand over the vertices of the graph. On forests the candidate
witnesses are reduced to one vertex per automorphism orbit of the values the
quantified subformula depends on; elsewhere they are tried by descending
degree. Connectives short-circuit.
"""
from __future__ import annotations

import logging
from typing import Dict, List, Mapping, Optional, Tuple

from src.core.canonical import orbit_representatives
from src.core.errors import UnassignedVariableError
from src.core.graph import FiniteGraph
from src.logic.formula import (
    And, Bottom, Eq, Exists, Forall, Formula, Implies, Not, Or, Rel, Top, free_variables,
)

logger = logging.getLogger(__name__)


class _Evaluator:
    def __init__(self, graph: FiniteGraph, use_orbits: bool):
        self.graph = graph
        self.use_orbits = use_orbits and graph.is_forest()
        self.by_degree = sorted(graph.vertices, key=lambda v: (-graph.degree(v), v))
        self._candidates: Dict[Tuple, List[str]] = {}

    def candidates(self, formula: Formula, env: Mapping[str, str]) -> List[str]:
        if not self.use_orbits:
            return self.by_degree
        depends_on = sorted(free_variables(formula))
        marks = tuple(env[v] for v in depends_on)
        found = self._candidates.get(marks)
        if found is None:
            found = [v for _, v in orbit_representatives(self.graph, marks)]
            self._candidates[marks] = found
        return found

    def holds(self, formula: Formula, env: Dict[str, str]) -> bool:
        if isinstance(formula, Rel):
            return self.graph.has_edge(env[formula.left], env[formula.right])
        if isinstance(formula, Eq):
            return env[formula.left] == env[formula.right]
        if isinstance(formula, Top):
            return True
        if isinstance(formula, Bottom):
            return False
        if isinstance(formula, Not):
            return not self.holds(formula.body, env)
        if isinstance(formula, And):
            return all(self.holds(p, env) for p in formula.parts)
        if isinstance(formula, Or):
            return any(self.holds(p, env) for p in formula.parts)
        if isinstance(formula, Implies):
            return not self.holds(formula.left, env) or self.holds(formula.right, env)
        if isinstance(formula, (Exists, Forall)):
            want = isinstance(formula, Exists)
            for v in self.candidates(formula, env):
                if self.holds(formula.body, {**env, formula.var: v}) == want:
                    return want
            return not want
        raise TypeError(f"Not a formula: {formula!r}")


def eval_formula(graph: FiniteGraph, formula: Formula, assignment: Optional[Mapping[str, str]] = None,
                 use_orbits: bool = True) -> bool:
    """
    Truth value of ``formula`` on ``graph`` under ``assignment``.

    Raises UnassignedVariableError when a free variable has no value.
    """
    assignment = dict(assignment or {})
    missing = free_variables(formula) - set(assignment)
    if missing:
        raise UnassignedVariableError(missing)
    graph.check_vertices(assignment.values(), 'assignment')
    return _Evaluator(graph, use_orbits).holds(formula, assignment)


def satisfies_all(graph: FiniteGraph, sentences, use_orbits: bool = True) -> bool:
    evaluator = _Evaluator(graph, use_orbits)
    return all(evaluator.holds(s, {}) for s in sentences)
