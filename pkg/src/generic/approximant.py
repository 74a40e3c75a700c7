"""
Finite approximants of the generic structures and the decision procedure
for their theories.

An approximant for (n, k) holds, for every (r, k - 1)-value realised by a
vertex of a tree in K_n up to the size cap, ``copies`` disjoint copies of the
smallest tree realising it, with r = (3^k - 1) / 2. Sentences of quantifier
rank k are decided by evaluating them there.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Union

from src.config.config import Config
from src.config.logging_config import log_inconsistency
from src.core.canonical import canonical_code, orbit_representatives
from src.core.errors import InternalInconsistencyError, PreconditionError, require_capacity
from src.core.graph import ClassIndex, FiniteGraph, enumerate_trees
from src.games.rs_value import RSValue, rs_value_at
from src.generic.builder import disjoint_copies
from src.logic.evaluator import eval_formula
from src.logic.formula import Formula, free_variables, quantifier_rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Representative:
    value: RSValue
    tree: FiniteGraph
    root: str

    def to_dict(self) -> dict:
        return {
            'value': self.value.code,
            'tree': canonical_code(self.tree),
            'root': self.root,
            'size': len(self.tree),
        }


@dataclass
class Approximant:
    graph: FiniteGraph
    n: ClassIndex
    k: int
    size_cap: int
    copies: int
    prune_degree: bool
    representatives: List[Representative] = field(default_factory=list)

    @property
    def radius(self) -> int:
        return Config.approximant_radius(self.k)

    def provenance(self) -> dict:
        return {
            'kind': 'approximant',
            'n': str(self.n),
            'k': self.k,
            'r': self.radius,
            's': Config.approximant_value_cap(self.k),
            'size_cap': self.size_cap,
            'copies': self.copies,
            'prune_degree': self.prune_degree,
            'vertices': len(self.graph),
            'representatives': [rep.to_dict() for rep in self.representatives],
        }


def _finite_index(n: Union[ClassIndex, str, int]) -> ClassIndex:
    n = ClassIndex.parse(n)
    if n.is_omega or n.value < 1:
        raise PreconditionError(f"approximants are built for finite n >= 1, got {n}")
    return n


def realised_values(n: Union[ClassIndex, str, int], r: int, s: int, size_cap: int,
                    max_degree: Optional[int] = None) -> Dict[RSValue, Representative]:
    """First (smallest) rooted tree in enumeration order realising each value."""
    found: Dict[RSValue, Representative] = {}
    for tree in enumerate_trees(n, size_cap, max_degree):
        for _, v in orbit_representatives(tree):
            value = rs_value_at(tree, v, r, s)
            if value not in found:
                found[value] = Representative(value, tree, v)
    return found


def build_approximant(n: Union[ClassIndex, str, int], k: int, size_cap: Optional[int] = None,
                      copies: Optional[int] = None, prune_degree: bool = True) -> Approximant:
    """
    Free join over the empty set of ``copies`` copies of one minimal tree per
    realised (r, k - 1)-value.

    With ``prune_degree`` trees of degree above s + 2 are skipped: a vertex
    never needs more than s + 1 children for its capped counts.
    """
    n = _finite_index(n)
    if k < 1:
        raise PreconditionError("build_approximant needs k >= 1")
    require_capacity('DECIDE_OPT_IN_RANK', k)
    r = Config.approximant_radius(k)
    s = Config.approximant_value_cap(k)
    size_cap = Config.approximant_size_cap(k) if size_cap is None else size_cap
    copies = k if copies is None else copies
    if size_cap < 1 or copies < 1:
        raise PreconditionError("size_cap and copies must be positive")

    values = realised_values(n, r, s, size_cap, s + 2 if prune_degree else None)
    representatives = sorted(values.values(), key=lambda rep: (len(rep.tree), canonical_code(rep.tree), rep.value.code))

    # one tree may realise several values; copy each tree once
    trees: List[FiniteGraph] = []
    for rep in representatives:
        if rep.tree not in trees:
            trees.append(rep.tree)
    graph = disjoint_copies((f"t{i}c{c}_", tree) for i, tree in enumerate(trees) for c in range(copies))

    logger.debug(f"build_approximant(n={n}, k={k}): {len(values)} values, {len(trees)} trees, "
                 f"{len(graph)} vertices")
    return Approximant(graph, n, k, size_cap, copies, prune_degree, representatives)


@dataclass
class Decision:
    in_theory: bool
    n: ClassIndex
    rank: int
    cross_validated: bool
    approximant: Approximant
    check: Approximant

    def to_dict(self) -> dict:
        return {
            'in_theory': self.in_theory,
            'n': str(self.n),
            'rank': self.rank,
            'cross_validated': self.cross_validated,
            'approximant': self.approximant.provenance(),
            'check': self.check.provenance(),
        }


def decide(formula: Formula, n: Union[ClassIndex, str, int], allow_rank_3: bool = False) -> Decision:
    """
    Whether the sentence holds in every model of the theory for K_n.

    Two approximants with different size caps and copy counts must agree;
    a disagreement raises InternalInconsistencyError.
    """
    n = _finite_index(n)
    if free_variables(formula):
        raise PreconditionError(f"decide needs a sentence; free: {', '.join(sorted(free_variables(formula)))}")
    rank = quantifier_rank(formula)
    require_capacity('DECIDE_OPT_IN_RANK' if allow_rank_3 else 'DECIDE_MAX_RANK', rank)
    k = max(rank, 1)

    primary = build_approximant(n, k)
    check = build_approximant(n, k, size_cap=max(1, primary.size_cap - 1), copies=k + 1)
    verdict = eval_formula(primary.graph, formula)
    other = eval_formula(check.graph, formula)
    if verdict != other:
        details = f"{formula} on K_{n}: {verdict} at size cap {primary.size_cap}, {other} at {check.size_cap}"
        log_inconsistency('decide', details)
        raise InternalInconsistencyError(f"approximants disagree: {details}")
    return Decision(verdict, n, rank, True, primary, check)
