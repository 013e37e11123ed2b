"""End-to-end compilation of a text into an :class:`ExtractionDocument`.

JSON layout (keys always in this order)::

    {
      "version": "1",
      "sentences":   [{"index", "text", "parse_ok"}],
      "elements":    [{"surface", "label"}],
      "relations":   [{"from", "to", "phrase", "sentence_index"}],
      "graph": {
        "nodes": [{"surface", "label", "color", "first_sentence_index"}],
        "edges": [{"from", "to", "phrase", "sentence_indices"}]
      },
      "diagnostics": [{"severity", "code", "message", "subject"}]
    }

``elements`` and ``relations`` are the deduplicated tables; ``relations``
cites the first sentence each triple came from.  Full provenance lives
under ``graph``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .extractor import ElementLabel, SentenceExtraction, extract_sentence
from .graph import Diagnostic, Edge, Node, OperationGraph, Severity, build_graph, validate
from .lexicon import Lexicon, default_lexicon
from .text_pipeline import ParseError, parse_sentence, segment_sentences

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class SentenceRecord:
    index: int
    text: str
    parse_ok: bool


@dataclass(frozen=True)
class ExtractionDocument:
    sentences: tuple[SentenceRecord, ...]
    graph: OperationGraph
    diagnostics: tuple[Diagnostic, ...] = ()
    version: str = SCHEMA_VERSION

    @property
    def elements(self) -> list[tuple[str, str]]:
        return [(n.surface, n.label.value) for n in self.graph.nodes]

    @property
    def relations(self) -> list[tuple[str, str, str]]:
        return [e.key for e in self.graph.edges]

    def to_dict(self) -> dict:
        g = self.graph
        return {
            "version": self.version,
            "sentences": [{"index": s.index, "text": s.text, "parse_ok": s.parse_ok}
                          for s in self.sentences],
            "elements": [{"surface": n.surface, "label": n.label.value} for n in g.nodes],
            "relations": [{"from": e.source, "to": e.target, "phrase": e.phrase,
                           "sentence_index": e.sentence_indices[0]} for e in g.edges],
            "graph": {
                "nodes": [{"surface": n.surface, "label": n.label.value, "color": n.color,
                           "first_sentence_index": n.first_sentence_index} for n in g.nodes],
                "edges": [{"from": e.source, "to": e.target, "phrase": e.phrase,
                           "sentence_indices": list(e.sentence_indices)} for e in g.edges],
            },
            "diagnostics": [d.to_dict() for d in self.diagnostics],
        }

    @classmethod
    def from_dict(cls, data: dict) -> ExtractionDocument:
        graph = OperationGraph(
            nodes=tuple(Node(n["surface"], ElementLabel(n["label"]), n["first_sentence_index"])
                        for n in data["graph"]["nodes"]),
            edges=tuple(Edge(e["from"], e["to"], e["phrase"], tuple(e["sentence_indices"]))
                        for e in data["graph"]["edges"]),
        )
        return cls(
            sentences=tuple(SentenceRecord(s["index"], s["text"], s["parse_ok"])
                            for s in data["sentences"]),
            graph=graph,
            diagnostics=tuple(Diagnostic(Severity(d["severity"]), d["code"], d["message"],
                                         d["subject"]) for d in data["diagnostics"]),
            version=data["version"],
        )


def extract_text(text: str, lexicon: Lexicon | None = None, strict: bool = False,
                 ) -> tuple[list[SentenceRecord], list[SentenceExtraction], list[Diagnostic]]:
    """Segment, parse and extract every sentence of ``text``.

    In strict mode the first :class:`ParseError` propagates.  Otherwise each
    failing sentence is skipped and reported as a ``ParseError`` warning.
    """
    lexicon = lexicon or default_lexicon()
    records, extractions, diagnostics = [], [], []
    for index, sentence in enumerate(segment_sentences(text)):
        try:
            parse = parse_sentence(sentence, index, lexicon)
        except ParseError as err:
            if strict:
                raise
            records.append(SentenceRecord(index, sentence, False))
            diagnostics.append(Diagnostic(
                Severity.WARNING, "ParseError",
                f"{err.reason} (chars {err.char_span[0]}-{err.char_span[1]})",
                f"sentence:{index}",
            ))
            continue
        records.append(SentenceRecord(index, sentence, True))
        extractions.append(extract_sentence(parse, lexicon))
    return records, extractions, diagnostics


def compile_text(text: str, lexicon: Lexicon | None = None, strict: bool = False,
                 normalize_case: bool = False) -> ExtractionDocument:
    records, extractions, diagnostics = extract_text(text, lexicon, strict)
    graph = build_graph(extractions, normalize_case=normalize_case)
    diagnostics += graph.build_diagnostics
    diagnostics += validate(graph)
    return ExtractionDocument(tuple(records), graph, tuple(diagnostics))


def export_json(doc: ExtractionDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2, ensure_ascii=False) + "\n"


def load_json(text: str) -> ExtractionDocument:
    return ExtractionDocument.from_dict(json.loads(text))
