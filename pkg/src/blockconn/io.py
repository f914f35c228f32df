"""Graph file formats and the JSON report document.

Every format uses 1-based vertex labels. Emitters write LF line endings;
parsers also accept CRLF.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .errors import (
    GraphError,
    LabelOutOfRange,
    NonBinaryEntry,
    NotSquare,
    ParseError,
    RaggedRows,
    SelfLoop,
    UnsupportedHeader,
)
from .graph import AdjacencyMatrix, ConnectivityReport, TraceStep, validate_adjacency

FORMATS = ("edges", "mtx", "dense")
_EXTENSIONS = {
    ".mtx": "mtx",
    ".edges": "edges",
    ".edgelist": "edges",
    ".el": "edges",
    ".dense": "dense",
    ".adj": "dense",
    ".mat": "dense",
}


def _lines(text: str):
    return text.replace("\r\n", "\n").replace("\r", "\n").split("\n")


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"expected an integer, got {tok!r}") from None


# edge list


def parse_edge_list(text: str, *, symmetrize: bool = False) -> AdjacencyMatrix:
    """Parse ``u v`` lines after an optional ``n <count>`` header.

    ``#`` starts a comment; blank lines are skipped. Without a header the
    order is the largest label seen. ``symmetrize`` is accepted for
    interface parity; edge lists are symmetric by construction.
    """
    n = None
    edges = []
    seen_edge = False
    max_label = 0
    for lineno, raw in enumerate(_lines(text), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "n":
            if n is not None or seen_edge or len(toks) != 2:
                raise ParseError(lineno, "header 'n <count>' must appear once, before any edge")
            n = _int(toks[1], lineno)
            if n < 0:
                raise ParseError(lineno, f"vertex count must be non-negative, got {n}")
            continue
        if len(toks) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        for label in (u, v):
            if label < 1 or (n is not None and label > n):
                raise LabelOutOfRange(lineno, label, n if n is not None else "inf")
        if u == v:
            raise SelfLoop(u, line=lineno)
        seen_edge = True
        max_label = max(max_label, u, v)
        edges.append((u, v))
    if n is None:
        n = max_label
    return AdjacencyMatrix.from_edges(n, edges)


def emit_edge_list(m: AdjacencyMatrix) -> str:
    lines = [f"n {m.n}"] + [f"{u} {v}" for u, v in m.edges()]
    return "\n".join(lines) + "\n"


# MatrixMarket

_MM_HEADER = re.compile(r"^%%matrixmarket\s+(\S+)\s+(\S+)\s+(\S+)\s+(\S+)\s*$", re.IGNORECASE)


def parse_matrix_market(text: str, *, symmetrize: bool = False) -> AdjacencyMatrix:
    """Parse a ``coordinate pattern symmetric`` MatrixMarket file.

    Either triangle may be stored; each entry is mirrored. Diagonal entries
    are rejected as self loops.
    """
    lines = _lines(text)
    header = lines[0].strip() if lines else ""
    match = _MM_HEADER.match(header)
    if not match or [g.lower() for g in match.groups()] != ["matrix", "coordinate", "pattern", "symmetric"]:
        raise UnsupportedHeader(header)
    size = None
    expected = 0
    edges = []
    for lineno, raw in enumerate(lines[1:], 2):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        toks = line.split()
        if size is None:
            if len(toks) != 3:
                raise ParseError(lineno, "expected size line 'rows cols entries'")
            rows, cols, expected = (_int(t, lineno) for t in toks)
            if rows != cols:
                raise NotSquare((rows, cols))
            if rows < 0 or expected < 0:
                raise ParseError(lineno, "negative size")
            size = rows
            continue
        if len(toks) != 2:
            raise ParseError(lineno, f"expected 'row col', got {line!r}")
        i, j = _int(toks[0], lineno), _int(toks[1], lineno)
        for label in (i, j):
            if not 1 <= label <= size:
                raise LabelOutOfRange(lineno, label, size)
        if i == j:
            raise SelfLoop(i, line=lineno)
        edges.append((i, j))
    if size is None:
        raise ParseError(len(lines), "missing size line")
    if len(edges) != expected:
        raise ParseError(len(lines), f"header declares {expected} entries, found {len(edges)}")
    return AdjacencyMatrix.from_edges(size, edges)


def emit_matrix_market(m: AdjacencyMatrix) -> str:
    edges = m.edges()
    lines = ["%%MatrixMarket matrix coordinate pattern symmetric", f"{m.n} {m.n} {len(edges)}"]
    lines += [f"{v} {u}" for u, v in edges]
    return "\n".join(lines) + "\n"


# dense


def parse_dense(text: str, *, symmetrize: bool = False) -> AdjacencyMatrix:
    """Parse whitespace-separated 0/1 rows, one row per line."""
    rows = []
    width = None
    for lineno, raw in enumerate(_lines(text), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        toks = line.split()
        if width is None:
            width = len(toks)
        elif len(toks) != width:
            raise RaggedRows(lineno, width, len(toks))
        row = []
        for col, tok in enumerate(toks, 1):
            if tok not in ("0", "1"):
                raise NonBinaryEntry(len(rows) + 1, col, tok)
            row.append(tok == "1")
        rows.append(row)
    if not rows:
        return AdjacencyMatrix.empty(0)
    if len(rows) != width:
        raise NotSquare((len(rows), width))
    return validate_adjacency(np.array(rows, dtype=np.uint8), symmetrize=symmetrize)


def emit_dense(m: AdjacencyMatrix) -> str:
    """Rows of space-separated digits joined by LF, without a trailing newline."""
    return "\n".join(" ".join("1" if x else "0" for x in row) for row in m.entries.tolist())


# dispatch

PARSERS = {"edges": parse_edge_list, "mtx": parse_matrix_market, "dense": parse_dense}
EMITTERS = {"edges": emit_edge_list, "mtx": emit_matrix_market, "dense": lambda m: emit_dense(m) + "\n"}


def sniff_format(text: str, name: str | None = None) -> str:
    """Pick a format from the file extension, falling back to the content."""
    if name:
        fmt = _EXTENSIONS.get(Path(name).suffix.lower())
        if fmt:
            return fmt
    body = [ln.strip() for ln in _lines(text)]
    if body and body[0].lower().startswith("%%matrixmarket"):
        return "mtx"
    body = [ln for ln in body if ln and not ln.startswith("#")]
    if not body:
        return "edges"
    if body[0].split()[0] == "n":
        return "edges"
    tokens = [ln.split() for ln in body]
    if all(len(t) == len(body) for t in tokens) and all(x in ("0", "1") for t in tokens for x in t):
        return "dense"
    return "edges"


def parse_graph(text: str, fmt: str = "auto", *, name: str | None = None, symmetrize: bool = False) -> AdjacencyMatrix:
    if fmt == "auto":
        fmt = sniff_format(text, name)
    try:
        parser = PARSERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}") from None
    m = parser(text, symmetrize=symmetrize)
    return validate_adjacency(m)


# report document


@dataclass(frozen=True)
class ReportDocument:
    """Serializable mirror of a :class:`ConnectivityReport` plus run metadata."""

    n: int
    is_connected: bool
    num_components: int
    isolated_count: int
    cut_count: int
    boundaries: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    label_at: tuple[int, ...]
    permuted_matrix: tuple[str, ...]
    input: str | None = None
    edge_count: int = 0
    tool_version: str = __version__
    trace: tuple[TraceStep, ...] | None = None

    @classmethod
    def from_report(cls, report: ConnectivityReport, *, input: str | None = None) -> "ReportDocument":
        rows = tuple(
            "".join("1" if x else "0" for x in row) for row in report.permuted_matrix.entries.tolist()
        )
        return cls(
            n=report.n,
            is_connected=report.is_connected,
            num_components=report.num_components,
            isolated_count=report.isolated_count,
            cut_count=report.cut_count,
            boundaries=tuple(report.boundaries),
            components=tuple(tuple(c) for c in report.components),
            label_at=tuple(report.permutation.labels()),
            permuted_matrix=rows,
            input=input,
            edge_count=report.permuted_matrix.edge_count(),
            trace=report.trace,
        )

    def matrix(self) -> AdjacencyMatrix:
        if not self.permuted_matrix:
            return AdjacencyMatrix.empty(0)
        return AdjacencyMatrix(np.array([[c == "1" for c in row] for row in self.permuted_matrix], dtype=np.uint8))


def emit_report_json(doc: ReportDocument | ConnectivityReport) -> str:
    """Serialize with a fixed key order, one top-level key per line."""
    if isinstance(doc, ConnectivityReport):
        doc = ReportDocument.from_report(doc)
    fields = {
        "n": doc.n,
        "is_connected": doc.is_connected,
        "num_components": doc.num_components,
        "isolated_count": doc.isolated_count,
        "cut_count": doc.cut_count,
        "boundaries": list(doc.boundaries),
        "components": [list(c) for c in doc.components],
        "permutation": {"label_at": list(doc.label_at)},
        "permuted_matrix": list(doc.permuted_matrix),
        "metadata": {"input": doc.input, "edge_count": doc.edge_count, "tool_version": doc.tool_version},
    }
    if doc.trace is not None:
        fields["trace"] = [t.as_dict() for t in doc.trace]
    body = ",\n".join(
        f"  {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))}" for k, v in fields.items()
    )
    return "{\n" + body + "\n}\n"


def parse_report_json(text: str) -> ReportDocument:
    try:
        d = json.loads(text)
        meta = d.get("metadata", {})
        trace = d.get("trace")
        return ReportDocument(
            n=d["n"],
            is_connected=d["is_connected"],
            num_components=d["num_components"],
            isolated_count=d["isolated_count"],
            cut_count=d["cut_count"],
            boundaries=tuple(d["boundaries"]),
            components=tuple(tuple(c) for c in d["components"]),
            label_at=tuple(d["permutation"]["label_at"]),
            permuted_matrix=tuple(d.get("permuted_matrix", ())),
            input=meta.get("input"),
            edge_count=meta.get("edge_count", 0),
            tool_version=meta.get("tool_version", __version__),
            trace=tuple(TraceStep.from_dict(t) for t in trace) if trace is not None else None,
        )
    except (json.JSONDecodeError, KeyError, TypeError, AttributeError) as exc:
        raise GraphError(f"not a report document: {exc}") from None
