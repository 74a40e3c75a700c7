"""
Graph Loader Module
Reads and writes graph JSON, acl tables and provenance side-files
"""
import json
import logging
from pathlib import Path
from typing import Dict, FrozenSet, Union

from src.config.config import Config
from src.core.errors import FormulaError, GraphFormatError
from src.core.graph import FiniteGraph
from src.data.graph_validator import GraphValidator
from src.logic.closure_formula import CAnd, CDiagram, CExistsExt, CForallExt, CNot, COr, CTop
from src.utils.helpers import to_jsonable

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

PROVENANCE_SUFFIX = '.provenance.json'


def _decode(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"Invalid JSON in {source}: {e.msg}", f"line {e.lineno}, column {e.colno}") from e


def graph_from_document(document, validator: GraphValidator = None) -> FiniteGraph:
    """Validated ``FiniteGraph`` from a decoded graph document."""
    result = (validator or GraphValidator()).validate(document)
    if not result.is_valid:
        raise GraphFormatError(result.reason, result.position)
    return FiniteGraph(document['vertices'], document.get('edges', []))


def loads_graph(text: str, source: str = '<string>') -> FiniteGraph:
    return graph_from_document(_decode(text, source))


def load_graph(path: PathLike) -> FiniteGraph:
    """
    Load a graph JSON file

    Args:
        path: file path

    Returns:
        FiniteGraph

    Raises:
        GraphFormatError: on unreadable files, bad JSON or failed validation
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise GraphFormatError(f"Cannot read graph file {path}: {e.strerror}") from e
    graph = loads_graph(text, str(path))
    logger.debug(f"Loaded {path}: {len(graph)} vertices, {len(graph.edges)} edges")
    return graph


def dumps_graph(graph: FiniteGraph) -> str:
    return json.dumps(graph.to_dict(), indent=Config.JSON_INDENT, sort_keys=True)


def dump_graph(graph: FiniteGraph, path: PathLike, provenance: dict = None) -> Path:
    """
    Write a graph JSON file, plus ``<name>.provenance.json`` when given provenance

    Returns:
        Path: the graph file written
    """
    path = Path(path)
    path.write_text(dumps_graph(graph) + '\n', encoding='utf-8')
    if provenance is not None:
        side = provenance_path(path)
        side.write_text(json.dumps(to_jsonable(provenance), indent=Config.JSON_INDENT, sort_keys=True) + '\n',
                        encoding='utf-8')
        logger.debug(f"Wrote provenance side-file {side}")
    return path


def provenance_path(path: PathLike) -> Path:
    path = Path(path)
    return path.with_name(path.stem + PROVENANCE_SUFFIX)


def load_provenance(path: PathLike) -> dict:
    """Provenance recorded next to a graph file written by ``dump_graph``."""
    side = provenance_path(path)
    try:
        return json.loads(side.read_text(encoding='utf-8'))
    except OSError as e:
        raise GraphFormatError(f"Cannot read provenance file {side}: {e.strerror}") from e


def load_acl_table(path: PathLike, graph: FiniteGraph) -> Dict[FrozenSet[str], FrozenSet[str]]:
    """
    Read an acl table: a JSON list of {"set": [...], "acl": [...]}

    Every id must be a vertex of ``graph`` and each acl must contain its set.
    """
    path = Path(path)
    try:
        document = _decode(path.read_text(encoding='utf-8'), str(path))
    except OSError as e:
        raise GraphFormatError(f"Cannot read acl table {path}: {e.strerror}") from e
    if not isinstance(document, list):
        raise GraphFormatError("An acl table must be a JSON list")

    table: Dict[FrozenSet[str], FrozenSet[str]] = {}
    for i, entry in enumerate(document):
        position = f"[{i}]"
        if not isinstance(entry, dict) or set(entry) != {'set', 'acl'}:
            raise GraphFormatError("Entries need exactly the keys 'set' and 'acl'", position)
        if not all(isinstance(part, list) and all(isinstance(v, str) for v in part)
                   for part in (entry['set'], entry['acl'])):
            raise GraphFormatError("'set' and 'acl' must be lists of vertex ids", position)
        base, closure = frozenset(entry['set']), frozenset(entry['acl'])
        unknown = (base | closure) - graph.vertex_set
        if unknown:
            raise GraphFormatError(f"Unknown vertex id(s): {', '.join(sorted(unknown))}", position)
        if not base <= closure:
            raise GraphFormatError("acl must contain its set", position)
        if base in table:
            raise GraphFormatError("Duplicate set in acl table", position)
        table[base] = closure
    return table


# ==================== CLOSURE FORMULAS ====================

def closure_formula_from_document(document, position: str = '$'):
    """
    Decode a closure formula. Nodes are objects tagged by "op":

        {"op": "top", "arity": 2}
        {"op": "diagram", "graph": <graph>, "order": ["a", "b"]}
        {"op": "exists" | "forall", "base": [...], "ext": <graph>, "new": [...], "body": <node>}
        {"op": "not", "body": <node>}
        {"op": "and" | "or", "parts": [<node>, ...]}
    """
    if not isinstance(document, dict) or 'op' not in document:
        raise GraphFormatError("Closure formula nodes must be objects with an 'op' key", position)

    def field(name, kind):
        value = document.get(name)
        if not isinstance(value, kind):
            raise GraphFormatError(f"'{document['op']}' node needs '{name}' of type {kind.__name__}",
                                   f"{position}.{name}")
        return value

    op = document['op']
    try:
        if op == 'top':
            return CTop(field('arity', int))
        if op == 'diagram':
            return CDiagram(graph_from_document(field('graph', dict)), tuple(field('order', list)))
        if op in ('exists', 'forall'):
            node = CExistsExt if op == 'exists' else CForallExt
            body = closure_formula_from_document(field('body', dict), f"{position}.body")
            return node(tuple(field('base', list)), graph_from_document(field('ext', dict)),
                        tuple(field('new', list)), body)
        if op == 'not':
            return CNot(closure_formula_from_document(field('body', dict), f"{position}.body"))
        if op in ('and', 'or'):
            parts = tuple(closure_formula_from_document(part, f"{position}.parts[{i}]")
                          for i, part in enumerate(field('parts', list)))
            return (CAnd if op == 'and' else COr)(parts)
    except FormulaError as e:
        raise GraphFormatError(str(e), position) from e
    raise GraphFormatError(f"Unknown closure formula op {op!r}", f"{position}.op")


def load_closure_formula(path: PathLike):
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise GraphFormatError(f"Cannot read closure formula file {path}: {e.strerror}") from e
    return closure_formula_from_document(_decode(text, str(path)))
