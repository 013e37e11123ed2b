"""Merge per-sentence extractions into one colored, directed operation graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable

from .extractor import ElementLabel, SentenceExtraction

CATEGORY_COLORS = {
    ElementLabel.ACTIVITY: "red",
    ElementLabel.DURATION: "blue",
    ElementLabel.RESOURCE: "yellow",
    ElementLabel.OTHER: "grey",
}


class Severity(str, Enum):
    WARNING = "Warning"
    INFO = "Info"


@dataclass(frozen=True)
class Diagnostic:
    severity: Severity
    code: str
    message: str
    subject: str

    def to_dict(self) -> dict:
        return {"severity": self.severity.value, "code": self.code,
                "message": self.message, "subject": self.subject}


@dataclass(frozen=True)
class Node:
    surface: str
    label: ElementLabel
    first_sentence_index: int

    @property
    def color(self) -> str:
        return CATEGORY_COLORS[self.label]


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    phrase: str
    sentence_indices: tuple[int, ...]

    @property
    def key(self) -> tuple[str, str, str]:
        return (self.source, self.target, self.phrase)


@dataclass(frozen=True)
class OperationGraph:
    nodes: tuple[Node, ...] = ()
    edges: tuple[Edge, ...] = ()
    # LabelConflict and similar build-time notes; not part of graph identity
    build_diagnostics: tuple[Diagnostic, ...] = field(default=(), compare=False)

    def node(self, surface: str) -> Node:
        for node in self.nodes:
            if node.surface == surface:
                return node
        raise KeyError(surface)

    def node_set(self) -> set[tuple[str, str, str]]:
        return {(n.surface, n.label.value, n.color) for n in self.nodes}

    def edge_set(self) -> set[tuple[str, str, str]]:
        return {e.key for e in self.edges}


def build_graph(extractions: Iterable[SentenceExtraction],
                normalize_case: bool = False) -> OperationGraph:
    """Fold extractions into a graph, deduplicating nodes and edges.

    Node identity is the exact surface, or its casefolded form when
    ``normalize_case`` is set; the first-seen spelling and label win.
    Repeated (source, target, phrase) triples merge, keeping every
    sentence index they came from.
    """
    def key(surface: str) -> str:
        return surface.casefold() if normalize_case else surface

    nodes: dict[str, Node] = {}
    edges: dict[tuple[str, str, str], list[int]] = {}
    diagnostics: list[Diagnostic] = []

    for extraction in extractions:
        for element in extraction.elements:
            existing = nodes.get(key(element.surface))
            if existing is None:
                nodes[key(element.surface)] = Node(element.surface, element.label,
                                                   extraction.sentence_index)
            elif existing.label is not element.label:
                diagnostics.append(Diagnostic(
                    Severity.WARNING, "LabelConflict",
                    f"{element.surface!r} labeled {element.label.value} in sentence "
                    f"{extraction.sentence_index}, keeping {existing.label.value}",
                    f"node:{existing.surface}",
                ))
        for rel in extraction.relations:
            triple = (nodes[key(rel.source)].surface, nodes[key(rel.target)].surface, rel.phrase)
            indices = edges.setdefault(triple, [])
            if rel.sentence_index not in indices:
                indices.append(rel.sentence_index)

    return OperationGraph(
        nodes=tuple(nodes.values()),
        edges=tuple(Edge(s, t, p, tuple(ix)) for (s, t, p), ix in edges.items()),
        build_diagnostics=tuple(diagnostics),
    )


def validate(graph: OperationGraph) -> list[Diagnostic]:
    touched = set()
    for edge in graph.edges:
        touched.add(edge.source)
        touched.add(edge.target)
    labels = {n.surface: n.label for n in graph.nodes}

    out: list[Diagnostic] = []
    for node in graph.nodes:
        if node.surface not in touched:
            out.append(Diagnostic(Severity.WARNING, "IsolatedNode",
                                  f"{node.surface!r} takes part in no relation",
                                  f"node:{node.surface}"))
    for node in graph.nodes:
        if node.label is not ElementLabel.ACTIVITY:
            continue
        has_duration = any(
            e.source == node.surface and e.phrase.split()[0].lower() == "takes"
            and labels[e.target] is ElementLabel.DURATION
            for e in graph.edges
        )
        if not has_duration:
            out.append(Diagnostic(Severity.INFO, "MissingDuration",
                                  f"activity {node.surface!r} has no 'takes' edge to a duration",
                                  f"node:{node.surface}"))
        has_resource = any(
            e.target == node.surface and labels[e.source] is ElementLabel.RESOURCE
            for e in graph.edges
        )
        if not has_resource:
            out.append(Diagnostic(Severity.INFO, "MissingResource",
                                  f"activity {node.surface!r} has no incoming edge from a resource",
                                  f"node:{node.surface}"))
    return out
