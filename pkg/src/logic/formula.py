"""
First-order formulas over one binary relation R and equality.

Nodes are frozen dataclasses, so formulas hash and compare structurally.
``format_formula`` prints the surface syntax read back by
``src.logic.parser.parse_formula``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import count
from typing import Dict, FrozenSet, Iterable, Tuple


@dataclass(frozen=True)
class Formula:
    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Rel(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Eq(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    parts: Tuple[Formula, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("And needs at least two parts; use conjunction()")


@dataclass(frozen=True)
class Or(Formula):
    parts: Tuple[Formula, ...]

    def __post_init__(self):
        if len(self.parts) < 2:
            raise ValueError("Or needs at least two parts; use disjunction()")


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


Quantifier = (Forall, Exists)


def neq(x: str, y: str) -> Formula:
    return Not(Eq(x, y))


def conjunction(parts: Iterable[Formula]) -> Formula:
    """Conjunction of ``parts`` without Top; Top when nothing is left."""
    kept = tuple(p for p in parts if not isinstance(p, Top))
    if not kept:
        return Top()
    return kept[0] if len(kept) == 1 else And(kept)


def disjunction(parts: Iterable[Formula]) -> Formula:
    kept = tuple(p for p in parts if not isinstance(p, Bottom))
    if not kept:
        return Bottom()
    return kept[0] if len(kept) == 1 else Or(kept)


def exists_all(variables: Iterable[str], body: Formula) -> Formula:
    for var in reversed(tuple(variables)):
        body = Exists(var, body)
    return body


def forall_all(variables: Iterable[str], body: Formula) -> Formula:
    for var in reversed(tuple(variables)):
        body = Forall(var, body)
    return body


# ==================== SYNTACTIC MEASURES ====================

@lru_cache(maxsize=65536)
def free_variables(formula: Formula) -> FrozenSet[str]:
    if isinstance(formula, (Rel, Eq)):
        return frozenset((formula.left, formula.right))
    if isinstance(formula, (Top, Bottom)):
        return frozenset()
    if isinstance(formula, Not):
        return free_variables(formula.body)
    if isinstance(formula, (And, Or)):
        return frozenset().union(*(free_variables(p) for p in formula.parts))
    if isinstance(formula, Implies):
        return free_variables(formula.left) | free_variables(formula.right)
    if isinstance(formula, Quantifier):
        return free_variables(formula.body) - {formula.var}
    raise TypeError(f"Not a formula: {formula!r}")


@lru_cache(maxsize=65536)
def quantifier_rank(formula: Formula) -> int:
    """Maximal nesting depth of quantifiers."""
    if isinstance(formula, (Rel, Eq, Top, Bottom)):
        return 0
    if isinstance(formula, Not):
        return quantifier_rank(formula.body)
    if isinstance(formula, (And, Or)):
        return max(quantifier_rank(p) for p in formula.parts)
    if isinstance(formula, Implies):
        return max(quantifier_rank(formula.left), quantifier_rank(formula.right))
    if isinstance(formula, Quantifier):
        return 1 + quantifier_rank(formula.body)
    raise TypeError(f"Not a formula: {formula!r}")


def is_sentence(formula: Formula) -> bool:
    return not free_variables(formula)


# ==================== RENAMING ====================

def _rename(formula: Formula, env: Dict[str, str], depth: int, fresh) -> Formula:
    if isinstance(formula, Rel):
        return Rel(env.get(formula.left, formula.left), env.get(formula.right, formula.right))
    if isinstance(formula, Eq):
        return Eq(env.get(formula.left, formula.left), env.get(formula.right, formula.right))
    if isinstance(formula, (Top, Bottom)):
        return formula
    if isinstance(formula, Not):
        return Not(_rename(formula.body, env, depth, fresh))
    if isinstance(formula, (And, Or)):
        return type(formula)(tuple(_rename(p, env, depth, fresh) for p in formula.parts))
    if isinstance(formula, Implies):
        return Implies(_rename(formula.left, env, depth, fresh), _rename(formula.right, env, depth, fresh))
    name = fresh(depth)
    return type(formula)(name, _rename(formula.body, {**env, formula.var: name}, depth + 1, fresh))


def alpha_normalize(formula: Formula) -> Formula:
    """
    Rename bound variables to x1, x2, ... by quantifier depth.

    Names free in ``formula`` are skipped, so no free occurrence is captured.
    """
    taken = free_variables(formula)
    candidates = (f"x{k}" for k in count(1))
    names = []

    def fresh(depth: int) -> str:
        while len(names) <= depth:
            name = next(candidates)
            if name not in taken:
                names.append(name)
        return names[depth]

    return _rename(formula, {}, 0, fresh)


def alpha_equivalent(first: Formula, second: Formula) -> bool:
    return alpha_normalize(first) == alpha_normalize(second)


# ==================== PRINTING ====================

_LEVEL = {Implies: 1, Or: 2, And: 3, Not: 4}


def _level(formula: Formula) -> int:
    if isinstance(formula, Quantifier):
        return 0
    return _LEVEL.get(type(formula), 5)


def _wrap(formula: Formula, needed: int) -> str:
    text = format_formula(formula)
    return f"({text})" if _level(formula) < needed else text


def format_formula(formula: Formula) -> str:
    """Surface syntax; parse_formula(format_formula(f)) == f."""
    if isinstance(formula, Rel):
        return f"R({formula.left},{formula.right})"
    if isinstance(formula, Eq):
        return f"{formula.left} = {formula.right}"
    if isinstance(formula, Top):
        return 'true'
    if isinstance(formula, Bottom):
        return 'false'
    if isinstance(formula, Not):
        if isinstance(formula.body, Eq):
            return f"{formula.body.left} != {formula.body.right}"
        return '~' + _wrap(formula.body, 4)
    if isinstance(formula, And):
        return ' & '.join(_wrap(p, 4) for p in formula.parts)
    if isinstance(formula, Or):
        return ' | '.join(_wrap(p, 3) for p in formula.parts)
    if isinstance(formula, Implies):
        return f"{_wrap(formula.left, 2)} -> {_wrap(formula.right, 1)}"
    if isinstance(formula, Forall):
        return f"forall {formula.var}. {format_formula(formula.body)}"
    if isinstance(formula, Exists):
        return f"exists {formula.var}. {format_formula(formula.body)}"
    raise TypeError(f"Not a formula: {formula!r}")
