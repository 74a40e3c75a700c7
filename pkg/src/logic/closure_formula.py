"""
Closure formulas: diagrams and quantifiers over intrinsic extensions.

A closure formula of arity n speaks about a tuple x1..xn. ``CExistsExt``
and ``CForallExt`` bind fresh variables for the new vertices of an intrinsic
extension A -> B, constrained by the relative diagram of B over A; their
body has arity n + |B \\ A|. Evaluation searches witnesses by walking out
from the tuple along edges, which stays inside cl*(tuple) because every
component of B \\ A is attached to A.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from src.core.canonical import canonical_code
from src.core.errors import FormulaError, PreconditionError
from src.core.graph import FiniteGraph, bfs_order
from src.core.strong_structure import classify_extension, closure_star
from src.logic.builders import build_diagram
from src.logic.evaluator import eval_formula
from src.logic.formula import (
    Formula, Implies, Not, Top, conjunction, disjunction, exists_all, forall_all,
)

logger = logging.getLogger(__name__)


class ClosureFormula:
    """Base of the closure-formula nodes."""

    @property
    def arity(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True)
class CTop(ClosureFormula):
    width: int

    @property
    def arity(self) -> int:
        return self.width


@dataclass(frozen=True)
class CDiagram(ClosureFormula):
    """diag_A(x1..xn) with ``order[i]`` the vertex of A bound to x(i+1)."""
    graph: FiniteGraph
    order: Tuple[str, ...]

    def __post_init__(self):
        if sorted(self.order) != list(self.graph.vertices):
            raise FormulaError("CDiagram: order must list every vertex of A exactly once")

    @property
    def arity(self) -> int:
        return len(self.order)


@dataclass(frozen=True)
class _Extension(ClosureFormula):
    base_order: Tuple[str, ...]
    ext: FiniteGraph
    new_order: Tuple[str, ...]
    body: ClosureFormula

    def __post_init__(self):
        base = set(self.base_order)
        if len(base) != len(self.base_order) or not base <= self.ext.vertex_set:
            raise FormulaError(f"{type(self).__name__}: base order must be distinct vertices of B")
        if sorted(self.new_order) != sorted(self.ext.vertex_set - base):
            raise FormulaError(f"{type(self).__name__}: new order must list B \\ A exactly once")
        if self.body.arity != len(self.base_order) + len(self.new_order):
            raise FormulaError(
                f"{type(self).__name__}: body has arity {self.body.arity}, "
                f"expected {len(self.base_order) + len(self.new_order)}")
        report = classify_extension(base, self.ext)
        if not report.kind.is_intrinsic:
            raise FormulaError(f"{type(self).__name__}: B is not intrinsic over A ({report.kind.value})")

    @property
    def arity(self) -> int:
        return len(self.base_order)

    def search_order(self) -> List[Tuple[str, str]]:
        """New vertices in BFS order from A, each with an earlier neighbour."""
        placed = set(self.base_order)
        order = []
        for v in bfs_order(self.ext, self.base_order):
            if v in placed:
                continue
            anchor = min(w for w in self.ext.neighbors(v) if w in placed)
            order.append((v, anchor))
            placed.add(v)
        return order


@dataclass(frozen=True)
class CExistsExt(_Extension):
    pass


@dataclass(frozen=True)
class CForallExt(_Extension):
    pass


@dataclass(frozen=True)
class CNot(ClosureFormula):
    body: ClosureFormula

    @property
    def arity(self) -> int:
        return self.body.arity


@dataclass(frozen=True)
class _Junction(ClosureFormula):
    parts: Tuple[ClosureFormula, ...]

    def __post_init__(self):
        if not self.parts:
            raise FormulaError(f"{type(self).__name__} needs at least one part")
        if len({p.arity for p in self.parts}) != 1:
            raise FormulaError(f"{type(self).__name__}: parts disagree on arity")

    @property
    def arity(self) -> int:
        return self.parts[0].arity


@dataclass(frozen=True)
class CAnd(_Junction):
    pass


@dataclass(frozen=True)
class COr(_Junction):
    pass


def closure_formula_rank(formula: ClosureFormula) -> int:
    """Quantifier rank of the translated formula."""
    if isinstance(formula, (CTop, CDiagram)):
        return 0
    if isinstance(formula, CNot):
        return closure_formula_rank(formula.body)
    if isinstance(formula, _Junction):
        return max(closure_formula_rank(p) for p in formula.parts)
    if isinstance(formula, _Extension):
        return len(formula.new_order) + closure_formula_rank(formula.body)
    raise TypeError(f"Not a closure formula: {formula!r}")


# ==================== TRANSLATION ====================

def _translate(formula: ClosureFormula, names: Sequence[str]) -> Formula:
    if isinstance(formula, CTop):
        return Top()
    if isinstance(formula, CDiagram):
        return build_diagram(formula.graph, names=dict(zip(formula.order, names)))
    if isinstance(formula, CNot):
        return Not(_translate(formula.body, names))
    if isinstance(formula, CAnd):
        return conjunction(_translate(p, names) for p in formula.parts)
    if isinstance(formula, COr):
        return disjunction(_translate(p, names) for p in formula.parts)
    if isinstance(formula, _Extension):
        fresh = [f"x{len(names) + i}" for i in range(1, len(formula.new_order) + 1)]
        mapping = dict(zip(formula.base_order, names))
        mapping.update(zip(formula.new_order, fresh))
        relative = build_diagram(formula.ext, over=formula.base_order, names=mapping)
        body = _translate(formula.body, list(names) + fresh)
        if isinstance(formula, CExistsExt):
            return exists_all(fresh, conjunction([relative, body]))
        return forall_all(fresh, Implies(relative, body))
    raise TypeError(f"Not a closure formula: {formula!r}")


def translate_closure_formula(formula: ClosureFormula) -> Formula:
    """Equivalent plain formula with free variables x1..x(arity)."""
    return _translate(formula, [f"x{i}" for i in range(1, formula.arity + 1)])


# ==================== EVALUATION ====================

def _witnesses(graph: FiniteGraph, node: _Extension, tuple_: Sequence[str]) -> Iterator[Tuple[str, ...]]:
    """Every image of B \\ A satisfying the relative diagram over ``tuple_``."""
    image: Dict[str, str] = dict(zip(node.base_order, tuple_))
    order = node.search_order()
    used = set(tuple_)

    def fits(v: str, target: str) -> bool:
        for w, w_image in image.items():
            if node.ext.has_edge(v, w) != graph.has_edge(target, w_image):
                return False
        return True

    def extend(index: int) -> Iterator[Tuple[str, ...]]:
        if index == len(order):
            yield tuple(image[v] for v in node.new_order)
            return
        v, anchor = order[index]
        for target in sorted(graph.neighbors(image[anchor])):
            if target in used or not fits(v, target):
                continue
            image[v] = target
            used.add(target)
            yield from extend(index + 1)
            used.discard(target)
            del image[v]

    yield from extend(0)


def _holds(graph: FiniteGraph, formula: ClosureFormula, tuple_: Tuple[str, ...]) -> bool:
    if isinstance(formula, CTop):
        return True
    if isinstance(formula, CDiagram):
        if len(set(tuple_)) != len(tuple_):
            return False
        image = dict(zip(formula.order, tuple_))
        return all(formula.graph.has_edge(u, v) == graph.has_edge(image[u], image[v])
                   for i, u in enumerate(formula.order) for v in formula.order[i + 1:])
    if isinstance(formula, CNot):
        return not _holds(graph, formula.body, tuple_)
    if isinstance(formula, CAnd):
        return all(_holds(graph, p, tuple_) for p in formula.parts)
    if isinstance(formula, COr):
        return any(_holds(graph, p, tuple_) for p in formula.parts)
    if isinstance(formula, CExistsExt):
        return any(_holds(graph, formula.body, tuple_ + w) for w in _witnesses(graph, formula, tuple_))
    if isinstance(formula, CForallExt):
        return all(_holds(graph, formula.body, tuple_ + w) for w in _witnesses(graph, formula, tuple_))
    raise TypeError(f"Not a closure formula: {formula!r}")


def closure_formula_eval(graph: FiniteGraph, formula: ClosureFormula, tuple_: Sequence[str],
                         method: str = 'optimized') -> bool:
    """
    Truth of ``formula`` at ``tuple_`` in ``graph``.

    ``method='reference'`` translates to a plain formula and runs the
    generic evaluator instead of the witness search.
    """
    tuple_ = tuple(tuple_)
    if len(tuple_) != formula.arity:
        raise PreconditionError(f"closure formula has arity {formula.arity}, got a tuple of length {len(tuple_)}")
    graph.check_vertices(tuple_, 'closure_formula_eval')
    if method == 'reference':
        assignment = {f"x{i}": v for i, v in enumerate(tuple_, 1)}
        return eval_formula(graph, translate_closure_formula(formula), assignment)
    if method != 'optimized':
        raise ValueError(f"Unknown evaluation method {method!r}")
    return _holds(graph, formula, tuple_)


# ==================== CLOSURE TYPES ====================

def closure_type_code(graph: FiniteGraph, tuple_: Sequence[str]) -> str:
    """Canonical code of cl*(tuple) with the tuple as ordered marks."""
    closure = closure_star(graph, tuple_).closure
    return canonical_code(graph.induced(closure), tuple(tuple_))


@dataclass(frozen=True)
class Realization:
    tuple: Tuple[str, ...]
    witness: FiniteGraph        # cl*(tuple) inside the search structure
    marks: Tuple[str, ...]

    def to_dict(self) -> dict:
        return {'tuple': list(self.tuple), 'witness': self.witness.to_dict(), 'marks': list(self.marks)}


def realize_closure_formula(formula: ClosureFormula, search: FiniteGraph) -> Optional[Realization]:
    """First tuple of distinct vertices (lexicographic) satisfying ``formula``, with its closure."""
    for candidate in permutations(search.vertices, formula.arity):
        if _holds(search, formula, candidate):
            closure = closure_star(search, candidate).closure
            logger.debug(f"realize_closure_formula: witness tuple {candidate}, |closure|={len(closure)}")
            return Realization(candidate, search.induced(closure), candidate)
    return None
