"""
Helper functions for the lexhit package.
"""

import re
from pathlib import Path
from typing import Iterable, List, Union

from ..exceptions import LexHitUsageError
from ..models.hypergraph import OrderedHypergraph
from ..models.sets import VertexSet

_SEPARATORS = re.compile(r"[,\s]+")


def validate_file_path(file_path: Union[str, Path]) -> Path:
    """
    Validate and normalize a file path.

    Args:
        file_path: File path to validate

    Returns:
        Normalized Path object

    Raises:
        LexHitUsageError: If the path does not exist or is not a file
    """
    path = Path(file_path)

    if not path.exists():
        raise LexHitUsageError(f"File not found: {path}", {"path": str(path)})

    if not path.is_file():
        raise LexHitUsageError(f"Path is not a file: {path}", {"path": str(path)})

    return path


def parse_name_list(names_str: str) -> List[str]:
    """
    Parse a comma- or whitespace-separated list of vertex names.

    Args:
        names_str: Names such as ``"a,b"`` or ``"a b"``

    Returns:
        Names in the order given; an empty or blank string gives an empty list
    """
    if not names_str.strip():
        return []
    return [name for name in _SEPARATORS.split(names_str.strip()) if name]


def resolve_names(h: OrderedHypergraph, names: Iterable[str]) -> VertexSet:
    """
    Turn vertex names into a set over the universe of ``h``.

    Raises:
        LexHitUsageError: If a name is not a vertex of ``h``
    """
    return h.vertex_set(h.index_of(name) for name in names)
