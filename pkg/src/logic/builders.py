"""
Formula builders: diagrams, the closedness formula and the finite fragments
of the class axioms.
"""
from __future__ import annotations

import logging
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Union

from src.core.errors import PreconditionError, require_capacity
from src.core.graph import ClassIndex, FiniteGraph, enumerate_class
from src.logic.formula import (
    Forall, Formula, Implies, Not, Rel, conjunction, exists_all, forall_all, neq,
)

logger = logging.getLogger(__name__)


def build_gamma_star(m: int) -> Formula:
    """forall y (y != x1 & ... & y != xm -> ~R(x1,y) & ... & ~R(xm,y))."""
    if m < 1:
        raise ValueError("build_gamma_star needs m >= 1")
    xs = [f"x{i}" for i in range(1, m + 1)]
    return Forall('y', Implies(
        conjunction(neq('y', x) for x in xs),
        conjunction(Not(Rel(x, 'y')) for x in xs),
    ))


def diagram_names(A: FiniteGraph, over: Optional[Iterable[str]] = None) -> Dict[str, str]:
    """Default variable of each vertex: x1.. for A (or ``over``), y1.. for the new vertices."""
    if over is None:
        return {v: f"x{i}" for i, v in enumerate(A.vertices, 1)}
    base = sorted(A.check_vertices(over, 'build_diagram'))
    names = {v: f"x{i}" for i, v in enumerate(base, 1)}
    new = [v for v in A.vertices if v not in names]
    names.update({v: f"y{i}" for i, v in enumerate(new, 1)})
    return names


def build_diagram(A: FiniteGraph, over: Union[FiniteGraph, Iterable[str], None] = None,
                  names: Optional[Mapping[str, str]] = None) -> Formula:
    """
    Quantifier-free diagram of A: distinctness, then edges, then non-edges.

    With ``over`` only the relative part is produced: every pair with at
    least one vertex outside ``over``.
    """
    if isinstance(over, FiniteGraph):
        if over.vertex_set - A.vertex_set or A.induced(over.vertex_set) != over:
            raise PreconditionError("build_diagram: 'over' is not an induced substructure of A")
        over = over.vertex_set
    base = None if over is None else A.check_vertices(over, 'build_diagram')
    names = dict(names) if names is not None else diagram_names(A, base)

    order = sorted(A.vertices, key=lambda v: (base is not None and v not in base, v))
    pairs = [(u, v) for u, v in combinations(order, 2) if base is None or u not in base or v not in base]

    distinct: List[Formula] = [neq(names[u], names[v]) for u, v in pairs]
    edges: List[Formula] = [Rel(names[u], names[v]) for u, v in pairs if A.has_edge(u, v)]
    non_edges: List[Formula] = [Not(Rel(names[u], names[v])) for u, v in pairs if not A.has_edge(u, v)]
    return conjunction(distinct + edges + non_edges)


# ==================== CLASS AXIOMS ====================

def _distinct(variables: List[str]) -> List[Formula]:
    return [neq(u, v) for u, v in combinations(variables, 2)]


def no_cycle_sentence(length: int) -> Formula:
    """No cycle on ``length`` distinct vertices."""
    xs = [f"x{i}" for i in range(1, length + 1)]
    ring = [Rel(xs[i], xs[(i + 1) % length]) for i in range(length)]
    return Not(exists_all(xs, conjunction(_distinct(xs) + ring)))


def class_axiom_sentence(alpha: Union[ClassIndex, str, int]) -> Optional[Formula]:
    """The degree/path axiom of K_alpha as a sentence; None for omega."""
    alpha = ClassIndex.parse(alpha)
    if alpha.is_omega:
        return None

    if alpha.value == 0:
        ys = [f"y{i}" for i in range(1, 5)]
        has_four = exists_all(ys, conjunction(_distinct(ys) + [Rel('x', y) for y in ys]))
        return Forall('x', Not(has_four))

    n = alpha.value
    zs = [f"z{i}" for i in range(1, n + 3)]
    high_degree = exists_all(zs, conjunction(_distinct(zs) + [Rel('x', z) for z in zs]))
    ys = [f"y{i}" for i in range(1, 2 * n + 1)]
    path = [Rel('x', ys[0])] + [Rel(ys[i], ys[i + 1]) for i in range(len(ys) - 1)]
    long_path = exists_all(ys, conjunction(_distinct(ys) + [neq(y, 'x') for y in ys] + path))
    return Forall('x', Implies(high_degree, Not(long_path)))


def universality_sentence(A: FiniteGraph) -> Formula:
    """exists x (diag_A(x) & gamma*_|A|(x)): a closed copy of A exists."""
    if len(A) == 0:
        raise ValueError("universality_sentence needs a nonempty structure")
    names = diagram_names(A)
    return exists_all([names[v] for v in A.vertices],
                      conjunction([build_diagram(A, names=names), build_gamma_star(len(A))]))


def univ_axioms(alpha: Union[ClassIndex, str, int], size_bound: int, path_bound: int) -> List[Formula]:
    """
    Finite fragment of the axioms of the class: irreflexivity, symmetry, no
    cycles of length 3..path_bound, the K_alpha axiom, and one universality
    sentence per nonempty member of K_alpha with at most ``size_bound`` vertices.
    """
    alpha = ClassIndex.parse(alpha)
    require_capacity('ENUMERATION_MAX_SIZE', size_bound)
    require_capacity('PATH_BOUND_MAX', path_bound)

    axioms: List[Formula] = [
        Forall('x', Not(Rel('x', 'x'))),
        forall_all(['x', 'y'], Implies(Rel('x', 'y'), Rel('y', 'x'))),
    ]
    axioms.extend(no_cycle_sentence(length) for length in range(3, path_bound + 1))
    class_axiom = class_axiom_sentence(alpha)
    if class_axiom is not None:
        axioms.append(class_axiom)
    axioms.extend(universality_sentence(A) for A in enumerate_class(alpha, size_bound) if len(A))
    logger.debug(f"univ_axioms({alpha}, {size_bound}, {path_bound}): {len(axioms)} sentences")
    return axioms
