"""
Finite stages of the generic structures: free joins, generic chains with
their obligation ledger, the pseudofinite chain, and closed-embedding search.

Every structure here is a forest, so a closed copy of A inside M is a set of
whole components of M matching the components of A one to one.
"""
from __future__ import annotations

import logging
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Deque, Dict, Iterable, List, Optional, Tuple, Union

from networkx.algorithms import isomorphism

from src.config.logging_config import log_inconsistency
from src.core.canonical import canonical_code
from src.core.errors import (
    EnumerationExhaustedError, InternalInconsistencyError, PreconditionError, require_capacity,
)
from src.core.graph import ClassIndex, FiniteGraph, class_membership, enumerate_class
from src.core.strong_structure import is_closed

logger = logging.getLogger(__name__)


# ==================== FREE JOIN ====================

def free_join(first: FiniteGraph, shared: Union[FiniteGraph, Iterable[str]], second: FiniteGraph) -> FiniteGraph:
    """Union of two graphs meeting exactly in ``shared``, with no new edges."""
    if isinstance(shared, FiniteGraph):
        base = shared.vertex_set
        for side in (first, second):
            if not base <= side.vertex_set or side.induced(base) != shared:
                raise PreconditionError("free_join: the shared part is not an induced subgraph of both sides")
    else:
        base = frozenset(shared)

    overlap = first.vertex_set & second.vertex_set
    if overlap != base:
        raise PreconditionError(
            f"free_join: sides overlap in {sorted(overlap)}, expected {sorted(base)}")
    if first.induced(base) != second.induced(base):
        raise PreconditionError("free_join: the sides disagree on edges inside the shared part")
    return FiniteGraph(first.vertex_set | second.vertex_set, first.edge_set | second.edge_set)


def disjoint_copies(parts: Iterable[Tuple[str, FiniteGraph]]) -> FiniteGraph:
    """Free join over the empty set of prefixed copies."""
    result = FiniteGraph()
    for prefix, part in parts:
        result = free_join(result, (), part.prefixed(prefix))
    return result


# ==================== CLOSED EMBEDDINGS ====================

def _component_codes(graph: FiniteGraph) -> List[Tuple[str, frozenset]]:
    return sorted((canonical_code(graph.induced(comp)), comp) for comp in graph.components())


def find_closed_embedding(ambient: FiniteGraph, A: FiniteGraph) -> Optional[Dict[str, str]]:
    """A closed embedding of A into ``ambient`` as a vertex map, or None."""
    ambient.require_forest('find_closed_embedding')
    A.require_forest('find_closed_embedding')
    wanted = _component_codes(A)
    available = Counter(code for code, _ in _component_codes(ambient))
    if any(available[code] < n for code, n in Counter(code for code, _ in wanted).items()):
        return None

    used = set()
    mapping: Dict[str, str] = {}
    pool = _component_codes(ambient)
    for code, comp in wanted:
        target = next(c for k, c in pool if k == code and c not in used)
        used.add(target)
        matcher = isomorphism.GraphMatcher(A.induced(comp).to_networkx(), ambient.induced(target).to_networkx())
        mapping.update(next(matcher.isomorphisms_iter()))
    return mapping


@dataclass
class UniversalityReport:
    holds: bool
    checked: int
    missing: List[FiniteGraph] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            'holds': self.holds,
            'checked': self.checked,
            'missing': [canonical_code(A) for A in self.missing],
        }


def universality_report(ambient: FiniteGraph, alpha: Union[ClassIndex, str, int], size_bound: int) -> UniversalityReport:
    """Which members of K_alpha up to ``size_bound`` lack a closed copy in ``ambient``."""
    members = enumerate_class(alpha, size_bound)
    missing = [A for A in members if find_closed_embedding(ambient, A) is None]
    return UniversalityReport(not missing, len(members), missing)


# ==================== GENERIC CHAINS ====================

@dataclass(frozen=True)
class Obligation:
    """
    (u): embed ``structure`` closedly. (h): ``structure`` is A + C and ``over``
    embeds A; extend it to a closed embedding of the whole.
    """
    kind: str
    structure: FiniteGraph
    over: Tuple[Tuple[str, str], ...] = ()

    def describe(self) -> dict:
        return {
            'kind': self.kind,
            'structure': canonical_code(self.structure),
            'over': dict(self.over),
        }


@dataclass(frozen=True)
class LedgerEntry:
    step: int
    obligation: Obligation
    embedding: Tuple[Tuple[str, str], ...]

    def to_dict(self) -> dict:
        data = self.obligation.describe()
        data.update({'step': self.step, 'embedding': dict(self.embedding)})
        return data


@dataclass
class GenericChain:
    alpha: ClassIndex
    size_bound: int
    stages: List[FiniteGraph]
    ledger: List[LedgerEntry]
    pending: int
    exhausted: bool

    @property
    def final(self) -> FiniteGraph:
        return self.stages[-1]

    def provenance(self) -> dict:
        return {
            'kind': 'generic_chain',
            'alpha': str(self.alpha),
            'size_bound': self.size_bound,
            'steps': len(self.stages) - 1,
            'pending': self.pending,
            'exhausted': self.exhausted,
            'ledger': [entry.to_dict() for entry in self.ledger],
        }

    def to_dict(self) -> dict:
        data = self.provenance()
        data['stages'] = [stage.to_dict() for stage in self.stages]
        return data


class ChainBuilder:
    """
    Stateful builder of A_0 <=* A_1 <=* ... with a FIFO queue of obligations.

    Discharging (u) for A queues one (h) obligation per nonempty C with
    A + C still inside the size bound; in a forest the closed extensions of
    A are exactly A plus new components.
    """

    def __init__(self, alpha: Union[ClassIndex, str, int], size_bound: int):
        self.alpha = ClassIndex.parse(alpha)
        self.size_bound = size_bound
        self.members = enumerate_class(self.alpha, size_bound)
        self.queue: Deque[Obligation] = deque(Obligation('u', A) for A in self.members if len(A))
        self.stages = [FiniteGraph()]
        self.ledger: List[LedgerEntry] = []

    @property
    def current(self) -> FiniteGraph:
        return self.stages[-1]

    def _copy_for(self, obligation: Obligation, step: int) -> Tuple[FiniteGraph, Dict[str, str]]:
        """The obligation's structure renamed into the chain, with its embedding."""
        prefix = f"s{step}."
        embedding = dict(obligation.over)
        embedding.update({v: f"{prefix}{v}" for v in obligation.structure.vertices if v not in embedding})
        return obligation.structure.relabel(embedding), embedding

    def _queue_extensions(self, structure: FiniteGraph, embedding: Dict[str, str]) -> None:
        room = self.size_bound - len(structure)
        if room < 1:
            return
        over = tuple(sorted(embedding.items()))
        for extra in self.members:
            if 0 < len(extra) <= room:
                # B = A + C; the ids of C get a prefix so they stay apart from A's
                self.queue.append(Obligation('h', free_join(structure, (), extra.prefixed('c')), over))

    def _check(self, previous: FiniteGraph, nxt: FiniteGraph, image: Iterable[str], step: int) -> None:
        problems = []
        if not is_closed(nxt, previous.vertex_set):
            problems.append('previous stage is not closed in the next')
        if not is_closed(nxt, image):
            problems.append('new copy is not closed')
        membership = class_membership(nxt, self.alpha)
        if not membership:
            problems.append(f"stage leaves K_{self.alpha}: {membership.violation.detail}")
        if problems:
            details = f"step {step}: {'; '.join(problems)}"
            log_inconsistency('generic_chain', details)
            raise InternalInconsistencyError(f"generic_chain {details}")

    def step(self) -> bool:
        """Discharge the next obligation; False when the queue is empty."""
        if not self.queue:
            return False
        index = len(self.stages)
        obligation = self.queue.popleft()
        copy, embedding = self._copy_for(obligation, index)
        previous = self.current
        shared = previous.vertex_set & copy.vertex_set
        nxt = free_join(previous, previous.induced(shared), copy)
        self._check(previous, nxt, embedding.values(), index)

        self.stages.append(nxt)
        self.ledger.append(LedgerEntry(index, obligation, tuple(sorted(embedding.items()))))
        if obligation.kind == 'u':
            self._queue_extensions(obligation.structure, embedding)
        logger.debug(f"generic_chain step {index}: {obligation.kind} |A|={len(nxt)}, {len(self.queue)} queued")
        return True

    def build(self, steps: int) -> GenericChain:
        require_capacity('CHAIN_MAX_STEPS', steps)
        for _ in range(steps):
            if not self.step():
                break
        return GenericChain(self.alpha, self.size_bound, list(self.stages), list(self.ledger),
                            len(self.queue), not self.queue)


def generic_chain(alpha: Union[ClassIndex, str, int], steps: int, size_bound: int) -> GenericChain:
    return ChainBuilder(alpha, size_bound).build(steps)


# ==================== PSEUDOFINITE CHAIN ====================

def pseudofinite_chain(alpha: Union[ClassIndex, str, int], i: int, size_bound: int) -> FiniteGraph:
    """B_i: the disjoint union of the first i + 1 members of K_alpha up to ``size_bound``."""
    if i < 0:
        raise PreconditionError("pseudofinite_chain needs i >= 0")
    members = enumerate_class(alpha, size_bound)
    if i >= len(members):
        raise EnumerationExhaustedError(
            f"pseudofinite_chain: only {len(members)} members of K_{ClassIndex.parse(alpha)} "
            f"with at most {size_bound} vertices, index {i} requested")
    return disjoint_copies((f"b{j}_", members[j]) for j in range(i + 1))
