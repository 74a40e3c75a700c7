"""
Utility Functions
Common helper functions used by the command line and the serialisers
"""
import math
from enum import Enum
from pathlib import Path

from src.config.config import Config


def parse_vertex_list(text):
    """
    Parse a comma-separated vertex list

    Args:
        text: str such as "a,b, c"; empty or None gives no vertices

    Returns:
        list: vertex ids in the given order, duplicates dropped
    """
    if not text:
        return []
    ids = []
    for item in text.split(','):
        item = item.strip()
        if item and item not in ids:
            ids.append(item)
    return ids


def parse_pair_list(text):
    """
    Parse "a:b,c:d" into [('a', 'b'), ('c', 'd')]

    Args:
        text: str, comma-separated pairs joined by ':'

    Returns:
        list: pairs of vertex ids

    Raises:
        ValueError: if an item is not of the form x:y
    """
    pairs = []
    for item in parse_vertex_list(text):
        left, sep, right = item.partition(':')
        if not sep or not left or not right:
            raise ValueError(f"Expected a pair 'x:y', got {item!r}")
        pairs.append((left, right))
    return pairs


def read_text_argument(value):
    """
    Inline text, or the contents of a file for values of the form @path

    Args:
        value: str

    Returns:
        str: the text
    """
    if value.startswith('@'):
        return Path(value[1:]).read_text(encoding='utf-8')
    return value


def format_distance(distance):
    """
    Distance for JSON output: an int, or the infinity token across components

    Args:
        distance: int or math.inf

    Returns:
        int or str
    """
    return Config.INFINITY_TOKEN if distance == math.inf else int(distance)


def to_jsonable(value):
    """
    Convert library results into plain JSON values

    Sets become sorted lists, objects with ``to_dict`` are expanded, enums
    become their values and infinite counts become the infinity token.

    Args:
        value: any library result

    Returns:
        A value json.dumps accepts
    """
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return sorted(to_jsonable(v) for v in value)
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, float) and math.isinf(value):
        return Config.INFINITY_TOKEN
    return value

