"""
(r, s)-values of rooted trees.

At r = 1 a value is the number of children of the root, capped: counts
above s become infinity. At r + 1 it records, for every r-value sigma, how
many children carry sigma (capped the same way). Values are interned, so two
values are equal exactly when they are the same object.
"""
from __future__ import annotations

import logging
import math
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple, Union

from src.config.config import Config
from src.core.errors import GraphError
from src.core.graph import FiniteGraph, neighborhood

logger = logging.getLogger(__name__)

Count = Union[int, float]      # 0..s or math.inf


def cap(count: int, s: int) -> Count:
    return count if count <= s else math.inf


class RSValue:
    """Interned member of V(r, s); build through ``RSValue.make``."""

    __slots__ = ('r', 's', 'payload', 'code')

    _table: Dict[Tuple, 'RSValue'] = {}
    _lock = threading.Lock()

    def __init__(self, r: int, s: int, payload, code: str):
        self.r = r
        self.s = s
        self.payload = payload
        self.code = code

    @classmethod
    def make(cls, r: int, s: int, payload: Union[Count, FrozenSet[Tuple['RSValue', Count]]]) -> 'RSValue':
        key = (r, s, payload)
        with cls._lock:
            value = cls._table.get(key)
            if value is None:
                value = cls(r, s, payload, cls._encode(r, payload))
                cls._table[key] = value
            return value

    @staticmethod
    def _encode(r: int, payload) -> str:
        if r == 1:
            return Config.INFINITY_TOKEN if payload == math.inf else str(payload)
        entries = sorted(f"{child.code}:{_count_text(count)}" for child, count in payload)
        return '{' + ','.join(entries) + '}'

    def count_of(self, sigma: 'RSValue') -> Count:
        """Capped number of children with value ``sigma`` (r > 1 only)."""
        if self.r == 1:
            raise ValueError("count_of is defined for r > 1")
        return dict(self.payload).get(sigma, 0)

    def to_jsonable(self):
        if self.r == 1:
            return _count_text(self.payload) if self.payload == math.inf else self.payload
        return [[child.to_jsonable(), _count_text(count) if count == math.inf else count]
                for child, count in sorted(self.payload, key=lambda item: item[0].code)]

    def __repr__(self) -> str:
        return f"RSValue(r={self.r}, s={self.s}, {self.code})"

    def __reduce__(self):
        return (RSValue.make, (self.r, self.s, self.payload))


def _count_text(count: Count) -> str:
    return Config.INFINITY_TOKEN if count == math.inf else str(count)


@dataclass(frozen=True)
class RootedTree:
    graph: FiniteGraph
    root: str

    def __post_init__(self):
        if self.root not in self.graph:
            raise GraphError(f"Root {self.root} is not a vertex of the tree")
        if not self.graph.is_forest() or len(self.graph.components()) != 1:
            raise GraphError("A rooted tree must be connected and acyclic")

    def children(self) -> Dict[str, Tuple[str, ...]]:
        """Children of every vertex when the tree hangs from ``root``."""
        parent = {self.root: None}
        order = [self.root]
        for u in order:
            for w in sorted(self.graph.neighbors(u)):
                if w not in parent:
                    parent[w] = u
                    order.append(w)
        found = {v: [] for v in order}
        for v in order[1:]:
            found[parent[v]].append(v)
        return {v: tuple(cs) for v, cs in found.items()}


def rs_value(tree: RootedTree, r: int, s: int) -> RSValue:
    """val_(r,s) of ``tree`` at its root."""
    if r < 1 or s < 1:
        raise ValueError("rs_value needs r >= 1 and s >= 1")
    children = tree.children()

    values = {v: RSValue.make(1, s, cap(len(cs), s)) for v, cs in children.items()}
    for level in range(2, r + 1):
        values = {
            v: RSValue.make(level, s, frozenset(
                (sigma, cap(n, s)) for sigma, n in Counter(values[c] for c in cs).items()))
            for v, cs in children.items()
        }
    return values[tree.root]


def rs_value_at(graph: FiniteGraph, vertex: str, r: int, s: int) -> RSValue:
    """Value of the r-neighbourhood of ``vertex`` in a forest, rooted at ``vertex``."""
    graph.require_forest('rs_value_at')
    local = neighborhood(graph, vertex, r)
    return rs_value(RootedTree(local.graph, vertex), r, s)
