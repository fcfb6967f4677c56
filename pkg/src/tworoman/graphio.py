"""Graph file format, structured output, and DOT export.

Record grammar, one vertex per line::

    <vertex id>;<label>;<neighbor,neighbor,...>

Labels are -1 (unlabeled), 0, 1 or 2; a file must be uniformly labeled or
uniformly unlabeled.  The adjacency field may be empty.  Blank lines and
lines starting with ``#`` are ignored.  One-sided adjacency mentions are
symmetrized with a warning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (DuplicateVertexError, MixedLabelsError, ParseError,
                     UnknownNeighborError)
from .graph import Graph, build_graph
from .labeling import Labeling, epn_set, partition, public_set

_VALID_LABELS = (-1, 0, 1, 2)


@dataclass(frozen=True)
class ParseResult:
    graph: Graph
    labeling: Labeling | None
    warnings: tuple[str, ...]


def _parse_int(token: str, line_no: int, what: str) -> int:
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        raise ParseError(line_no, f"bad {what}: {token!r}") from None


def parse_graph_file(text: str) -> ParseResult:
    records = []  # (ext_id, label, [neighbor ids]) in file order
    seen = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split(";")
        if len(fields) != 3:
            raise ParseError(line_no, f"expected 'id;label;adjacencies', got {line!r}")
        ext = _parse_int(fields[0], line_no, "vertex id")
        if ext < 0:
            raise ParseError(line_no, f"vertex id must be >= 0: {ext}")
        label = _parse_int(fields[1], line_no, "label")
        if label not in _VALID_LABELS:
            raise ParseError(line_no, f"label out of range: {label}")
        adj_field = fields[2].strip()
        neighbors = []
        if adj_field:
            for token in adj_field.split(","):
                nb = _parse_int(token, line_no, "neighbor id")
                if nb < 0:
                    raise ParseError(line_no, f"neighbor id must be >= 0: {nb}")
                neighbors.append(nb)
        if ext in seen:
            raise DuplicateVertexError(ext)
        seen.add(ext)
        records.append((ext, label, neighbors, line_no))

    ids = [ext for ext, _, _, _ in records]
    index = {ext: i for i, ext in enumerate(ids)}
    listed = [set() for _ in records]
    for ext, _, neighbors, line_no in records:
        for nb in neighbors:
            if nb == ext:
                raise ParseError(line_no, f"vertex {ext} lists itself as a neighbor")
            if nb not in index:
                raise UnknownNeighborError(nb)
            listed[index[ext]].add(index[nb])

    warnings = []
    edges = []
    for u in range(len(records)):
        for v in sorted(listed[u]):
            if u not in listed[v]:
                warnings.append(
                    f"vertex {ids[u]} lists {ids[v]} but not vice versa; edge kept")
            if u < v or u not in listed[v]:
                edges.append((u, v))

    graph = build_graph(len(records), edges, external_ids=ids)
    labels = [label for _, label, _, _ in records]
    labeling = None
    if labels and all(lab == -1 for lab in labels):
        labeling = None
    elif any(lab == -1 for lab in labels):
        raise MixedLabelsError("file mixes -1 with concrete labels")
    elif labels:
        labeling = Labeling(graph, tuple(labels))
    return ParseResult(graph, labeling, tuple(warnings))


def write_graph_file(graph: Graph, labeling: Labeling | None = None) -> str:
    """Canonical text form: records sorted by external id, sorted adjacency."""
    order = sorted(range(graph.order), key=graph.external_id)
    lines = []
    for v in order:
        lab = labeling.labels[v] if labeling is not None else -1
        nbs = ",".join(str(graph.external_id(u)) for u in
                       sorted(graph.neighbors(v), key=graph.external_id))
        lines.append(f"{graph.external_id(v)};{lab};{nbs}")
    return "\n".join(lines) + ("\n" if lines else "")


def structured_document(graph: Graph, labeling: Labeling | None,
                        extra: dict | None = None) -> dict:
    """Machine-readable summary of a (possibly labeled) graph."""
    doc = {
        "order": graph.order,
        "edge_count": graph.edge_count(),
    }
    if labeling is not None:
        v0, v1, v2 = partition(labeling)
        doc.update({
            "weight": labeling.weight,
            "labels": {str(graph.external_id(v)): labeling.labels[v]
                       for v in range(graph.order)},
            "partition_sizes": {"v0": len(v0), "v1": len(v1), "v2": len(v2)},
            "epn_count": len(epn_set(labeling)),
            "public_count": len(public_set(labeling)),
        })
    if extra:
        doc.update(extra)
    return doc


_FILL = {0: "#ffffff", 1: "#bdbdbd", 2: "#4a4a4a", None: "#e8e8e8"}


def to_dot(graph: Graph, labeling: Labeling | None = None) -> str:
    lines = ["graph G {", "  node [style=filled];"]
    for v in sorted(range(graph.order), key=graph.external_id):
        ext = graph.external_id(v)
        lab = labeling.labels[v] if labeling is not None else None
        text = f"{ext}" if lab is None else f"{ext}:{lab}"
        font = ' fontcolor="#ffffff"' if lab == 2 else ""
        lines.append(f'  "{ext}" [label="{text}" fillcolor="{_FILL[lab]}"{font}];')
    for u, v in graph.edges():
        a, b = sorted((graph.external_id(u), graph.external_id(v)))
        lines.append(f'  "{a}" -- "{b}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_labeling(graph: Graph, labeling: Labeling | None, fmt: str = "text") -> str:
    """Render a labeling as canonical text, a JSON document, or DOT."""
    if labeling is not None and labeling.graph != graph:
        raise ValueError("labeling does not belong to this graph")
    if fmt == "text":
        return write_graph_file(graph, labeling)
    if fmt == "structured":
        return json.dumps(structured_document(graph, labeling),
                          indent=2, sort_keys=True) + "\n"
    if fmt == "dot":
        return to_dot(graph, labeling)
    raise ValueError(f"unknown format: {fmt!r}")
