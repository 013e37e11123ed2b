"""Element and relation extraction over clause parses.

Three rules drive extraction:

* every subject/object chunk becomes an element, modifiers kept and the
  leading article dropped;
* elements are labeled by the words they contain (``activity`` before
  ``min`` before a cardinal number, otherwise ``Other``);
* each verb group links the element before it to the object after it, with
  a trailing preposition folded into the relation phrase.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .lexicon import Lexicon, default_lexicon
from .text_pipeline import ClauseParse, NpChunk, PosCategory, VerbGroup

_NUMERAL = re.compile(r"[0-9]+(?:\.[0-9]+)?")


class EmptyChunk(ValueError):
    pass


class EmptySurface(ValueError):
    pass


class ElementLabel(str, Enum):
    ACTIVITY = "Activity"
    DURATION = "Duration"
    RESOURCE = "Resource"
    OTHER = "Other"


@dataclass(frozen=True)
class Element:
    surface: str
    label: ElementLabel


@dataclass(frozen=True)
class SentenceRelation:
    source: str
    target: str
    phrase: str
    sentence_index: int


@dataclass(frozen=True)
class SentenceExtraction:
    sentence_index: int
    elements: tuple[Element, ...]
    relations: tuple[SentenceRelation, ...]


def element_surface(chunk: NpChunk) -> str:
    tokens = list(chunk.tokens)
    if tokens and tokens[0].pos is PosCategory.DETERMINER:
        tokens = tokens[1:]
    if not tokens:
        raise EmptyChunk(f"chunk {chunk.text!r} has nothing left after its determiner")
    return " ".join(t.surface for t in tokens)


def classify(surface: str, lexicon: Lexicon | None = None) -> ElementLabel:
    words = [w.lower() for w in surface.split()]
    if not words:
        raise EmptySurface("cannot classify an empty surface")
    cardinals = (lexicon or default_lexicon()).cardinals
    if any(w in ("activity", "activities") for w in words):
        return ElementLabel.ACTIVITY
    if "min" in words:
        return ElementLabel.DURATION
    if any(w in cardinals or _NUMERAL.fullmatch(w) for w in words):
        return ElementLabel.RESOURCE
    return ElementLabel.OTHER


def relation_phrase(vg: VerbGroup) -> str:
    if vg.prep is None:
        return vg.main.surface
    return f"{vg.main.surface} {vg.prep.surface}"


def extract_sentence(parse: ClauseParse, lexicon: Lexicon | None = None) -> SentenceExtraction:
    elements = tuple(
        Element(surface, classify(surface, lexicon))
        for surface in map(element_surface, parse.nps)
    )
    relations = []
    # vgs[k-1] sits between element k-1 and element k
    for k, vg in enumerate(parse.vgs, start=1):
        if k >= len(elements):
            break
        relations.append(SentenceRelation(
            source=elements[k - 1].surface,
            target=elements[k].surface,
            phrase=relation_phrase(vg),
            sentence_index=parse.sentence_index,
        ))
    return SentenceExtraction(parse.sentence_index, elements, tuple(relations))
