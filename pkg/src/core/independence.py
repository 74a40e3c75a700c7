"""
Components over a set, d-independence, free joins and the forking criterion.

Algebraic closure is never computed here: in a finite ambient every element
is algebraic, which is not the notion the forking criterion talks about. It
is supplied by the caller as an ``AclOracle``.
"""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable, FrozenSet, Iterable, Mapping, Optional, Tuple

from src.config.config import Config
from src.core.errors import PreconditionError
from src.core.graph import FiniteGraph, bfs_order
from src.core.strong_structure import (
    closure_star, is_weakly_closed, relative_dimension, unique_path_to, weak_closure,
)

logger = logging.getLogger(__name__)

AclFunction = Callable[[FrozenSet[str]], Iterable[str]]


class AclOracle:
    """
    Caller-supplied acl over a fixed ambient graph.

    Instances are immutable after registration and the wrapped function must
    be safe to call from several threads at once.
    """

    def __init__(self, graph: FiniteGraph, function: AclFunction, name: str = 'custom',
                 sample_size: Optional[int] = None, seed: Optional[int] = None):
        self.graph = graph
        self.name = name
        self._function = function
        self.verify(Config.ACL_SAMPLE_SIZE if sample_size is None else sample_size,
                    Config.ACL_SAMPLE_SEED if seed is None else seed)

    @classmethod
    def trivial(cls, graph: FiniteGraph) -> 'AclOracle':
        """acl(X) = X."""
        return cls(graph, lambda X: X, name='trivial')

    @classmethod
    def from_function(cls, graph: FiniteGraph, function: AclFunction, **kwargs) -> 'AclOracle':
        return cls(graph, function, **kwargs)

    @classmethod
    def from_table(cls, graph: FiniteGraph, table: Mapping[Iterable[str], Iterable[str]], **kwargs) -> 'AclOracle':
        """
        Least closure operator with ``table[K] <= acl(X)`` whenever ``K <= X``.

        Keys and values must be vertex sets of ``graph``.
        """
        rules = []
        for key, value in table.items():
            rules.append((graph.check_vertices(key, 'acl table key'),
                          graph.check_vertices(value, 'acl table value')))

        def closure(X: FrozenSet[str]) -> FrozenSet[str]:
            current = set(X)
            changed = True
            while changed:
                changed = False
                for key, value in rules:
                    if key <= current and not value <= current:
                        current |= value
                        changed = True
            return frozenset(current)

        kwargs.setdefault('name', 'table')
        return cls(graph, closure, **kwargs)

    def __call__(self, vertices: Iterable[str]) -> FrozenSet[str]:
        X = self.graph.check_vertices(vertices, f"acl oracle '{self.name}'")
        result = frozenset(self._function(X))
        self.graph.check_vertices(result, f"acl oracle '{self.name}' result")
        return result

    def is_algebraically_closed(self, vertices: Iterable[str]) -> bool:
        X = frozenset(vertices)
        return self(X) == X

    def verify(self, sample_size: int, seed: int) -> None:
        """Sampled extensivity, idempotence and monotonicity checks."""
        rng = random.Random(seed)
        vertices = self.graph.vertices
        samples = [frozenset()]
        for _ in range(sample_size):
            samples.append(frozenset(v for v in vertices if rng.random() < 0.5))

        for X in samples:
            image = self(X)
            if not X <= image:
                raise PreconditionError(f"acl oracle '{self.name}' is not extensive at {sorted(X)}")
            if self(image) != image:
                raise PreconditionError(f"acl oracle '{self.name}' is not idempotent at {sorted(X)}")
            extra = sorted(self.graph.vertex_set - X)
            if extra:
                bigger = X | {rng.choice(extra)}
                if not image <= self(bigger):
                    raise PreconditionError(
                        f"acl oracle '{self.name}' is not monotone at {sorted(X)} <= {sorted(bigger)}")
        logger.debug(f"acl oracle '{self.name}' passed {len(samples)} sampled checks")


def component_over(graph: FiniteGraph, a: str, A: Iterable[str]) -> FrozenSet[str]:
    """C(a/A): vertices reachable from ``a`` along paths avoiding A."""
    A = graph.check_vertices(A, 'component_over')
    graph.check_vertices([a], 'component_over')
    if a in A:
        raise PreconditionError(f"component_over: {a} lies in A")
    return frozenset(bfs_order(graph, [a], within=graph.vertex_set - A))


@dataclass(frozen=True)
class IndependenceReport:
    holds: bool
    failed_clauses: Tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {'holds': self.holds, 'failed_clauses': list(self.failed_clauses)}


def d_independent(graph: FiniteGraph, b: Iterable[str], C: Iterable[str], A: Iterable[str]) -> IndependenceReport:
    """
    Whether ``b`` is d-independent of A over C.

    Clause 'a': d(b/C) = d(b/AC). Clause 'b': cl(bC) & cl(AC) = cl(C).
    """
    b = graph.check_vertices(b, 'd_independent')
    C = graph.check_vertices(C, 'd_independent')
    A = graph.check_vertices(A, 'd_independent')

    failed = []
    if relative_dimension(graph, b, C) != relative_dimension(graph, b, A | C):
        failed.append('a')
    if weak_closure(graph, b | C) & weak_closure(graph, A | C) != weak_closure(graph, C):
        failed.append('b')
    return IndependenceReport(not failed, tuple(failed))


def is_free_join(graph: FiniteGraph, B1: Iterable[str], C: Iterable[str], B2: Iterable[str]) -> bool:
    """B1 u B2 is the free join of B1 and B2 over C and is weakly closed in ``graph``."""
    B1 = graph.check_vertices(B1, 'is_free_join')
    B2 = graph.check_vertices(B2, 'is_free_join')
    C = graph.check_vertices(C, 'is_free_join')
    if B1 & B2 != C:
        raise PreconditionError("is_free_join: B1 and B2 do not intersect exactly in C")

    right = B2 - C
    if any(graph.neighbors(v) & right for v in B1 - C):
        return False
    return is_weakly_closed(graph, B1 | B2)


def nonforking_over(graph: FiniteGraph, a: Iterable[str], A: Iterable[str], B: Iterable[str],
                    acl: AclOracle) -> bool:
    """tp(a/B) does not fork over A: C(x/A) misses B for each x in a outside A."""
    a = graph.check_vertices(a, 'nonforking_over')
    A = graph.check_vertices(A, 'nonforking_over')
    B = graph.check_vertices(B, 'nonforking_over')
    if not acl.is_algebraically_closed(A):
        raise PreconditionError("nonforking_over: A is not algebraically closed")
    if not A <= B:
        raise PreconditionError("nonforking_over: A is not a subset of B")
    return all(not component_over(graph, x, A) & B for x in sorted(a - A))


class ForkingCase(IntEnum):
    OUTSIDE_CLOSURE = 1     # a in cl*(B) \ cl*(A)
    IN_B = 2                # a in (cl*(A) \ acl(A)) & B
    THROUGH_B = 3           # path from a to A crosses B \ A outside acl(A)


def forking_case(graph: FiniteGraph, a: str, A: Iterable[str], B: Iterable[str],
                 acl: AclOracle) -> Optional[ForkingCase]:
    """Which case of the forking criterion applies to tp(a/B) over A, or None."""
    graph.check_vertices([a], 'forking_case')
    A = graph.check_vertices(A, 'forking_case')
    B = graph.check_vertices(B, 'forking_case')
    if not A <= B:
        raise PreconditionError("forking_case: A is not a subset of B")
    if not is_weakly_closed(graph, A, B):
        raise PreconditionError("forking_case: A is not weakly closed in B")
    if not is_weakly_closed(graph, B):
        raise PreconditionError("forking_case: B is not weakly closed in the ambient graph")

    closure_A = closure_star(graph, A).closure
    if a not in closure_A:
        return ForkingCase.OUTSIDE_CLOSURE if a in closure_star(graph, B).closure else None

    algebraic = acl(A)
    if a in B:
        return ForkingCase.IN_B if a not in algebraic else None
    if a in algebraic:
        return None

    path = unique_path_to(graph, A, a)
    crossing = [v for v in path if v in B and v not in A]
    if crossing and any(v not in algebraic for v in crossing):
        return ForkingCase.THROUGH_B
    return None
