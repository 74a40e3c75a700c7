"""
Graph Validator Module

Checks decoded graph JSON documents before they become ``FiniteGraph``
objects, so that malformed input is rejected with the position of the
offending entry instead of surfacing later as a confusing error.

Accepted shape:
    {"vertices": ["a", "b", ...], "edges": [["a", "b"], ...]}

Key Features:
    - Shape checks for the document, the vertex list and every edge
    - String ids only; no duplicates
    - Edges must join two distinct declared vertices, each pair at most once
    - Optional vertex-count limit

Example Usage:
    >>> from src.data.graph_validator import validate_graph_document
    >>> result = validate_graph_document({"vertices": ["a"], "edges": [["a", "a"]]})
    >>> result.is_valid, result.position
    (False, 'edges[0]')
"""

from dataclasses import dataclass
from typing import Any, Optional


@dataclass
class ValidationResult:
    """
    Result of validating one graph document.

    Attributes:
        is_valid: Whether the document passed every check
        reason: Explanation if invalid (None if valid)
        severity: 'low' for a clean document, 'high' for a rejected one
        position: JSON path of the offending entry, e.g. 'edges[3]'
    """
    is_valid: bool
    reason: Optional[str] = None
    severity: str = 'low'
    position: Optional[str] = None


def _reject(reason: str, position: Optional[str] = None) -> ValidationResult:
    return ValidationResult(is_valid=False, reason=reason, severity='high', position=position)


class GraphValidator:
    """
    Validates graph JSON documents.

    Attributes:
        max_vertices: Largest vertex count accepted (None for no limit)

    Example:
        >>> validator = GraphValidator(max_vertices=3)
        >>> validator.validate({"vertices": ["a", "b", "c", "d"], "edges": []}).reason
        'Graph has 4 vertices, limit is 3'
    """

    def __init__(self, max_vertices: Optional[int] = None):
        """
        Args:
            max_vertices: Largest vertex count accepted, or None

        Raises:
            ValueError: If max_vertices is not positive
        """
        if max_vertices is not None and max_vertices <= 0:
            raise ValueError("max_vertices must be positive")
        self.max_vertices = max_vertices

    def validate(self, document: Any) -> ValidationResult:
        """
        Run every check in order and report the first failure.

        Args:
            document: Decoded JSON value

        Returns:
            ValidationResult with status and position of the first problem
        """
        if not isinstance(document, dict):
            return _reject("Graph document must be a JSON object")
        unknown = sorted(set(document) - {'vertices', 'edges'})
        if unknown:
            return _reject(f"Unknown key(s): {', '.join(unknown)}", unknown[0])

        vertices = document.get('vertices')
        if not isinstance(vertices, list):
            return _reject("'vertices' must be a list", 'vertices')
        edges = document.get('edges', [])
        if not isinstance(edges, list):
            return _reject("'edges' must be a list", 'edges')

        if self.max_vertices is not None and len(vertices) > self.max_vertices:
            return _reject(f"Graph has {len(vertices)} vertices, limit is {self.max_vertices}", 'vertices')

        declared = set()
        for i, vertex in enumerate(vertices):
            position = f"vertices[{i}]"
            if not isinstance(vertex, str) or not vertex:
                return _reject("Vertex ids must be nonempty strings", position)
            if vertex in declared:
                return _reject(f"Duplicate vertex {vertex!r}", position)
            declared.add(vertex)

        seen_edges = set()
        for i, edge in enumerate(edges):
            position = f"edges[{i}]"
            if not isinstance(edge, list) or len(edge) != 2:
                return _reject("Each edge must be a list of two vertex ids", position)
            u, v = edge
            if not isinstance(u, str) or not isinstance(v, str):
                return _reject("Edge endpoints must be strings", position)
            missing = [w for w in (u, v) if w not in declared]
            if missing:
                return _reject(f"Edge endpoint {missing[0]!r} is not a declared vertex", position)
            if u == v:
                return _reject(f"Self-loop at {u!r}", position)
            key = frozenset((u, v))
            if key in seen_edges:
                return _reject(f"Duplicate edge {u!r}-{v!r}", position)
            seen_edges.add(key)

        return ValidationResult(is_valid=True)

    def is_valid(self, document: Any) -> bool:
        return self.validate(document).is_valid


# Module-level functions for convenience
_default_validator = GraphValidator()


def validate_graph_document(document: Any, max_vertices: Optional[int] = None) -> ValidationResult:
    """
    Validate a graph document (module-level convenience function).

    Args:
        document: Decoded JSON value
        max_vertices: Optional vertex-count limit

    Returns:
        ValidationResult
    """
    if max_vertices is not None:
        return GraphValidator(max_vertices=max_vertices).validate(document)
    return _default_validator.validate(document)


def is_valid_graph_document(document: Any) -> bool:
    return _default_validator.is_valid(document)
