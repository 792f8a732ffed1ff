"""
Reader and writer for the hypergraph text format.

    # comment
    vertices: a b c
    edge: a b
    edge: b c
    edge:          # the empty edge

The ``vertices:`` line must come first and fixes the precedence order left to right.
"""

from pathlib import Path
from typing import Iterator, List, Tuple, Union

from ..exceptions import LexHitParseError, LexHitUsageError
from ..models.hypergraph import OrderedHypergraph
from ..utils.helpers import validate_file_path


def significant_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield (1-based line number, content) with comments and blank lines removed."""
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def split_directive(line: str, number: int) -> Tuple[str, List[str]]:
    """Split ``key: a b c`` into the lowercased key and its whitespace-separated names."""
    key, colon, rest = line.partition(":")
    if not colon:
        raise LexHitParseError(f"expected '<keyword>: ...', got {line!r}", number)
    return key.strip().lower(), rest.split()


def parse_hypergraph(text: str) -> OrderedHypergraph:
    """
    Parse hypergraph text.

    Raises:
        LexHitParseError: On a missing or repeated header, an unknown keyword, a
            duplicate vertex or an unknown vertex name, with the offending line
    """
    names: List[str] = []
    index = {}
    edges: List[List[int]] = []
    header_seen = False

    for number, line in significant_lines(text):
        key, items = split_directive(line, number)
        if not header_seen:
            if key != "vertices":
                raise LexHitParseError("first line must be 'vertices: ...'", number)
            for name in items:
                if name in index:
                    raise LexHitParseError(f"duplicate vertex {name!r}", number)
                index[name] = len(names)
                names.append(name)
            header_seen = True
        elif key == "edge":
            try:
                edges.append([index[name] for name in items])
            except KeyError as e:
                raise LexHitParseError(f"unknown vertex {e.args[0]!r}", number) from None
        elif key == "vertices":
            raise LexHitParseError("'vertices:' may only appear once", number)
        else:
            raise LexHitParseError(f"unknown keyword {key!r}", number)

    if not header_seen:
        raise LexHitParseError("missing 'vertices:' line")
    try:
        return OrderedHypergraph.from_edges(names, edges)
    except LexHitUsageError as e:
        raise LexHitParseError(e.message) from e


def load_hypergraph(path: Union[str, Path]) -> OrderedHypergraph:
    """
    Read and parse a UTF-8 hypergraph file.

    Raises:
        LexHitUsageError: If the path is missing or not a file
        LexHitParseError: If the bytes are not UTF-8 or the text is malformed
    """
    raw = validate_file_path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as e:
        line = raw[: e.start].count(b"\n") + 1
        raise LexHitParseError(f"invalid UTF-8 at byte {e.start}", line) from None
    return parse_hypergraph(text)


def dump_hypergraph(h: OrderedHypergraph) -> str:
    """Render ``h`` in the text format; parsing the result gives back ``h``."""
    lines = ["vertices: " + " ".join(h.names)]
    for edge in h.edges:
        members = " ".join(h.names[v] for v in edge)
        lines.append(f"edge: {members}" if members else "edge:")
    return "\n".join(lines) + "\n"
