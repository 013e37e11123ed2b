"""DOT, GraphML and CSV serializers."""

from __future__ import annotations

import csv
import io
import re
from xml.sax.saxutils import escape, quoteattr

from .document import ExtractionDocument
from .graph import OperationGraph

ELEMENT_HEADER = ("Element", "Label")
RELATION_HEADER = ("Element (From)", "Element (To)", "Relation")


def _dot_string(value: str) -> str:
    return '"' + value.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n") + '"'


def dot_identifiers(graph: OperationGraph) -> dict[str, str]:
    """Map node surfaces to unique DOT identifiers (non-alphanumerics -> ``_``)."""
    ids: dict[str, str] = {}
    used: set[str] = set()
    for node in graph.nodes:
        base = re.sub(r"[^A-Za-z0-9]", "_", node.surface) or "_"
        ident, n = base, 1
        while ident in used:
            n += 1
            ident = f"{base}_{n}"
        used.add(ident)
        ids[node.surface] = ident
    return ids


def export_dot(graph: OperationGraph, name: str = "operation") -> str:
    ids = dot_identifiers(graph)
    lines = [f"digraph {_dot_string(name)} {{"]
    for node in graph.nodes:
        lines.append(f"  {_dot_string(ids[node.surface])} [label={_dot_string(node.surface)}, "
                     f"style=filled, fillcolor={node.color}];")
    for edge in graph.edges:
        lines.append(f"  {_dot_string(ids[edge.source])} -> {_dot_string(ids[edge.target])} "
                     f"[label={_dot_string(edge.phrase)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_graphml(graph: OperationGraph) -> str:
    ids = {node.surface: f"n{i}" for i, node in enumerate(graph.nodes)}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<graphml xmlns="http://graphml.graphdrawing.org/xmlns"'
        ' xmlns:xsi="http://www.w3.org/2001/XMLSchema-instance"'
        ' xsi:schemaLocation="http://graphml.graphdrawing.org/xmlns'
        ' http://graphml.graphdrawing.org/xmlns/1.0/graphml.xsd">',
        '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
        '  <key id="category" for="node" attr.name="category" attr.type="string"/>',
        '  <key id="color" for="node" attr.name="color" attr.type="string"/>',
        '  <key id="phrase" for="edge" attr.name="phrase" attr.type="string"/>',
        '  <graph id="operation" edgedefault="directed">',
    ]
    for node in graph.nodes:
        out += [
            f"    <node id={quoteattr(ids[node.surface])}>",
            f'      <data key="label">{escape(node.surface)}</data>',
            f'      <data key="category">{node.label.value}</data>',
            f'      <data key="color">{node.color}</data>',
            "    </node>",
        ]
    for i, edge in enumerate(graph.edges):
        out += [
            f'    <edge id="e{i}" source={quoteattr(ids[edge.source])}'
            f" target={quoteattr(ids[edge.target])}>",
            f'      <data key="phrase">{escape(edge.phrase)}</data>',
            "    </edge>",
        ]
    out += ["  </graph>", "</graphml>"]
    return "\n".join(out) + "\n"


def _csv_text(header: tuple[str, ...], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def export_csv(doc: ExtractionDocument) -> tuple[str, str]:
    """Return (elements.csv, relations.csv) text in graph order."""
    return (_csv_text(ELEMENT_HEADER, doc.elements),
            _csv_text(RELATION_HEADER, doc.relations))
