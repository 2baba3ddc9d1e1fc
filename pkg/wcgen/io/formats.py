"""Byte-stable text formats: edge list, DOT and JSON.

Edges are always written normalized (u < v) and sorted, so equal graphs give equal files.
"""

from __future__ import annotations

import json
import re
from enum import StrEnum
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, ValidationError

from wcgen.core.graph import Graph


class GraphFormat(StrEnum):
    edgelist = "edgelist"
    dot = "dot"
    json = "json"


class FormatErrorKind(StrEnum):
    malformed_header = "malformed_header"
    malformed_line = "malformed_line"
    out_of_range = "out_of_range"
    duplicate_edge = "duplicate_edge"
    self_loop = "self_loop"
    count_mismatch = "count_mismatch"
    malformed_document = "malformed_document"


class GraphFormatError(ValueError):
    def __init__(self, kind: FormatErrorKind, message: str, *, line: int | None = None):
        self.kind = kind
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message} ({kind.value})")


class GraphDocument(BaseModel):
    n: int = Field(..., ge=0)
    edges: list[tuple[int, int]] = Field(default_factory=list)
    metadata: dict[str, Any] | None = None

    @classmethod
    def from_graph(cls, g: Graph, metadata: dict[str, Any] | None = None) -> GraphDocument:
        return cls(n=g.vertex_count, edges=list(g.edges()), metadata=metadata)


class _EdgeCollector:
    """Accumulates edges with the checks every format shares."""

    def __init__(self, n: int):
        self.g = Graph(n)

    def add(self, u: int, v: int, line: int | None) -> None:
        n = self.g.vertex_count
        for x in (u, v):
            if not 0 <= x < n:
                raise GraphFormatError(
                    FormatErrorKind.out_of_range, f"vertex {x} out of range [0, {n})", line=line
                )
        if u == v:
            raise GraphFormatError(FormatErrorKind.self_loop, f"self-loop on {u}", line=line)
        if self.g.has_edge(u, v):
            raise GraphFormatError(
                FormatErrorKind.duplicate_edge, f"duplicate edge ({min(u, v)},{max(u, v)})", line=line
            )
        self.g.add_edge(u, v)


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


_INT_PAIR = re.compile(r"^\s*(-?\d+)\s+(-?\d+)\s*$")


def parse_edgelist(text: str) -> Graph:
    numbered = [(i, ln) for i, ln in enumerate(text.split("\n"), start=1) if ln.strip()]
    if not numbered:
        raise GraphFormatError(FormatErrorKind.malformed_header, "missing 'n m' header", line=1)
    header_line, header = numbered[0]
    hm = _INT_PAIR.match(header)
    if hm is None:
        raise GraphFormatError(FormatErrorKind.malformed_header, f"expected 'n m', got {header!r}", line=header_line)
    n, m = int(hm.group(1)), int(hm.group(2))
    if n < 0 or m < 0:
        raise GraphFormatError(FormatErrorKind.malformed_header, "n and m must be non-negative", line=header_line)

    edges = _EdgeCollector(n)
    for line_no, raw in numbered[1:]:
        em = _INT_PAIR.match(raw)
        if em is None:
            raise GraphFormatError(FormatErrorKind.malformed_line, f"expected 'u v', got {raw!r}", line=line_no)
        edges.add(int(em.group(1)), int(em.group(2)), line_no)
    if edges.g.edge_count != m:
        raise GraphFormatError(
            FormatErrorKind.count_mismatch,
            f"header declares {m} edges, found {edges.g.edge_count}",
            line=header_line,
        )
    return edges.g


def to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    lines.extend(f"  {v};" for v in g.vertices())
    lines.extend(f"  {u} -- {v};" for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_HEADER = re.compile(r"^\s*(strict\s+)?graph(\s+\w+)?\s*\{\s*$")
_DOT_NODE = re.compile(r"^\s*(\d+)\s*;?\s*$")
_DOT_EDGE = re.compile(r"^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$")


def parse_dot(text: str) -> Graph:
    """Reads the DOT subset `to_dot` writes: bare integer nodes and `u -- v` edges."""

    numbered = [(i, ln) for i, ln in enumerate(text.split("\n"), start=1) if ln.strip()]
    if not numbered or _DOT_HEADER.match(numbered[0][1]) is None:
        raise GraphFormatError(
            FormatErrorKind.malformed_header,
            "expected 'graph <name> {'",
            line=numbered[0][0] if numbered else 1,
        )
    if numbered[-1][1].strip() != "}" or len(numbered) < 2:
        raise GraphFormatError(FormatErrorKind.malformed_document, "missing closing '}'", line=numbered[-1][0])

    nodes: list[int] = []
    raw_edges: list[tuple[int, int, int]] = []
    for line_no, raw in numbered[1:-1]:
        if (em := _DOT_EDGE.match(raw)) is not None:
            raw_edges.append((int(em.group(1)), int(em.group(2)), line_no))
        elif (nm := _DOT_NODE.match(raw)) is not None:
            nodes.append(int(nm.group(1)))
        else:
            raise GraphFormatError(FormatErrorKind.malformed_line, f"unsupported statement {raw.strip()!r}", line=line_no)

    n = len(nodes)
    if sorted(nodes) != list(range(n)):
        raise GraphFormatError(FormatErrorKind.out_of_range, f"node ids must be exactly 0..{n - 1}")
    edges = _EdgeCollector(n)
    for u, v, line_no in raw_edges:
        edges.add(u, v, line_no)
    return edges.g


def to_json(g: Graph, metadata: dict[str, Any] | None = None) -> str:
    return GraphDocument.from_graph(g, metadata).model_dump_json(indent=2, exclude_none=True) + "\n"


def parse_json_document(text: str) -> GraphDocument:
    try:
        return GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise GraphFormatError(FormatErrorKind.malformed_document, str(e.errors()[0]["msg"])) from e


def parse_json(text: str) -> Graph:
    doc = parse_json_document(text)
    edges = _EdgeCollector(doc.n)
    for u, v in doc.edges:
        edges.add(u, v, None)
    return edges.g


def serialize(g: Graph, fmt: GraphFormat, metadata: dict[str, Any] | None = None) -> str:
    match fmt:
        case GraphFormat.edgelist:
            return to_edgelist(g)
        case GraphFormat.dot:
            return to_dot(g)
        case GraphFormat.json:
            return to_json(g, metadata)


def parse(text: str, fmt: GraphFormat) -> Graph:
    match fmt:
        case GraphFormat.edgelist:
            return parse_edgelist(text)
        case GraphFormat.dot:
            return parse_dot(text)
        case GraphFormat.json:
            return parse_json(text)


_SUFFIXES = {
    ".txt": GraphFormat.edgelist,
    ".edgelist": GraphFormat.edgelist,
    ".el": GraphFormat.edgelist,
    ".dot": GraphFormat.dot,
    ".gv": GraphFormat.dot,
    ".json": GraphFormat.json,
}


def format_for_path(path: Path) -> GraphFormat:
    return _SUFFIXES.get(path.suffix.lower(), GraphFormat.edgelist)


def write_graph(
    path: Path,
    g: Graph,
    fmt: GraphFormat | None = None,
    metadata: dict[str, Any] | None = None,
) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    text = serialize(g, fmt or format_for_path(path), metadata)
    path.write_text(text, encoding="utf-8", newline="\n")


def read_graph(path: Path, fmt: GraphFormat | None = None) -> Graph:
    return parse(path.read_text(encoding="utf-8"), fmt or format_for_path(path))


def dumps_canonical(payload: dict[str, Any]) -> str:
    """Stable JSON for traces and counterexamples."""

    return json.dumps(payload, indent=2, sort_keys=True) + "\n"
