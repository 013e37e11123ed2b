"""Sentence segmentation, tokenization, tagging and clause chunking.

The accepted sentence shape is::

    S  -> NP VG NP (TO VG NP?)* '.'
    NP -> Determiner? (Cardinal | Noun | UnitNumber)* (Noun | UnitNumber)
    VG -> Aux? Verb Preposition?

Tagging is lexicon driven.  Words that are verb forms are resolved by
position: inside a noun phrase they are nouns ("the dumped dirt",
"assist with dumping"), otherwise they are verbs.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from enum import Enum

from .lexicon import Lexicon, default_lexicon

_TERMINATORS = ".!?"
_CLOSERS = "\"')]}”’"
_HYPHENS = "-‐‑–"
_NUMERAL = re.compile(r"[0-9]+(?:\.[0-9]+)?")


class ParseError(Exception):
    """A sentence that does not fit the clause grammar."""

    def __init__(self, sentence_index: int, reason: str, char_span: tuple[int, int]):
        self.sentence_index = sentence_index
        self.reason = reason
        self.char_span = char_span
        super().__init__(f"sentence {sentence_index}: {reason} at chars {char_span[0]}-{char_span[1]}")


class PosCategory(str, Enum):
    DETERMINER = "Determiner"
    CARDINAL = "Cardinal"
    NOUN = "Noun"
    VERB = "Verb"
    AUX = "Aux"
    PREPOSITION = "Preposition"
    INFINITIVE_MARKER = "InfinitiveMarker"
    UNIT_NUMBER = "UnitNumber"
    PUNCT = "Punct"


@dataclass(frozen=True)
class Token:
    surface: str
    start: int
    end: int


@dataclass(frozen=True)
class TaggedToken:
    token: Token
    pos: PosCategory

    @property
    def surface(self) -> str:
        return self.token.surface


@dataclass(frozen=True)
class NpChunk:
    tokens: tuple[TaggedToken, ...]
    # 0 for the subject, k >= 1 for the k-th object
    object_index: int = 0

    @property
    def role(self) -> str:
        return "Subject" if self.object_index == 0 else f"Object({self.object_index})"

    @property
    def start(self) -> int:
        return self.tokens[0].token.start

    @property
    def text(self) -> str:
        return " ".join(t.surface for t in self.tokens)


@dataclass(frozen=True)
class VerbGroup:
    main: Token
    aux: Token | None = None
    prep: Token | None = None

    @property
    def start(self) -> int:
        return (self.aux or self.main).start


@dataclass(frozen=True)
class ClauseParse:
    sentence_index: int
    nps: tuple[NpChunk, ...]
    vgs: tuple[VerbGroup, ...]

    def to_dict(self) -> dict:
        def tok(t: Token | None):
            return None if t is None else [t.surface, t.start, t.end]

        return {
            "sentence_index": self.sentence_index,
            "nps": [
                {"role": np.role, "tokens": [[t.surface, t.token.start, t.token.end, t.pos.value]
                                             for t in np.tokens]}
                for np in self.nps
            ],
            "vgs": [{"aux": tok(vg.aux), "main": tok(vg.main), "prep": tok(vg.prep)}
                    for vg in self.vgs],
        }


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch).startswith("P")


def _is_ascii_digit(ch: str) -> bool:
    return "0" <= ch <= "9"


def _is_boundary(text: str, i: int) -> tuple[bool, int]:
    """Decide whether the terminator at ``i`` ends a sentence.

    Returns (is_boundary, end) where ``end`` is one past the last character
    belonging to the sentence (closing quotes/brackets are absorbed).
    """
    n = len(text)
    if text[i] == "." and 0 < i < n - 1 and _is_ascii_digit(text[i - 1]) and _is_ascii_digit(text[i + 1]):
        return False, i
    j = i + 1
    while j < n and (text[j] in _TERMINATORS or text[j] in _CLOSERS):
        j += 1
    end = j
    while j < n and text[j].isspace():
        j += 1
    if j == n:
        return True, end
    if j > end and text[j].isupper():
        return True, end
    return False, end


def segment_sentences(text: str) -> list[str]:
    sentences = []
    start = 0
    i = 0
    while i < len(text):
        if text[i] in _TERMINATORS:
            boundary, end = _is_boundary(text, i)
            if boundary:
                chunk = text[start:end].strip()
                if chunk:
                    sentences.append(chunk)
                start = i = end
                continue
            i = max(end, i + 1)
            continue
        i += 1
    rest = text[start:].strip()
    if rest:
        sentences.append(rest)
    return sentences


def _split_core(core: str, offset: int) -> list[Token]:
    tokens = []
    part_start = 0
    for k, ch in enumerate(core + "-"):
        if k == len(core) or ch in _HYPHENS:
            if k > part_start:
                tokens.append(Token(core[part_start:k], offset + part_start, offset + k))
            part_start = k + 1
    return tokens


def tokenize(sentence: str) -> list[Token]:
    tokens: list[Token] = []
    for match in re.finditer(r"\S+", sentence):
        word, base = match.group(), match.start()
        lo, hi = 0, len(word)
        while lo < hi and _is_punct(word[lo]):
            lo += 1
        while hi > lo and _is_punct(word[hi - 1]):
            hi -= 1
        tokens.extend(Token(word[k], base + k, base + k + 1) for k in range(lo))
        if hi > lo:
            core_tokens = _split_core(word[lo:hi], base + lo)
            if not core_tokens:
                # a core made only of hyphens
                core_tokens = [Token(word[k], base + k, base + k + 1) for k in range(lo, hi)]
            tokens.extend(core_tokens)
        tokens.extend(Token(word[k], base + k, base + k + 1) for k in range(hi, len(word)))
    return tokens


def _lexical_category(surface: str, lexicon: Lexicon) -> PosCategory | None:
    """Context-free category, or None for verb-lexicon forms."""
    word = surface.lower()
    if all(_is_punct(ch) for ch in surface):
        return PosCategory.PUNCT
    if word in lexicon.determiners:
        return PosCategory.DETERMINER
    if word in lexicon.aux:
        return PosCategory.AUX
    if word in lexicon.cardinals or _NUMERAL.fullmatch(surface):
        return PosCategory.CARDINAL
    if "0" <= surface[0] <= "9":
        return PosCategory.UNIT_NUMBER
    if word in lexicon.prepositions:
        return PosCategory.PREPOSITION
    if lexicon.is_verb_form(word):
        return None
    return PosCategory.NOUN


_NOMINAL_CONTEXT = {
    None,
    PosCategory.DETERMINER,
    PosCategory.CARDINAL,
    PosCategory.PREPOSITION,
    PosCategory.VERB,
    PosCategory.PUNCT,
}


def tag(tokens: list[Token], lexicon: Lexicon | None = None) -> list[TaggedToken]:
    lexicon = lexicon or default_lexicon()
    lexical = [_lexical_category(t.surface, lexicon) for t in tokens]
    tagged: list[TaggedToken] = []
    prev: PosCategory | None = None
    for i, (token, pos) in enumerate(zip(tokens, lexical)):
        if pos is PosCategory.PREPOSITION and token.surface.lower() == "to":
            if (i + 1 < len(tokens) and lexical[i + 1] is None
                    and lexicon.is_base_form(tokens[i + 1].surface)):
                pos = PosCategory.INFINITIVE_MARKER
        elif pos is None:
            pos = PosCategory.NOUN if prev in _NOMINAL_CONTEXT else PosCategory.VERB
        tagged.append(TaggedToken(token, pos))
        prev = pos
    return tagged


_NP_BODY = {PosCategory.CARDINAL, PosCategory.NOUN, PosCategory.UNIT_NUMBER}
_NP_HEAD = {PosCategory.NOUN, PosCategory.UNIT_NUMBER}


class _ClauseParser:
    def __init__(self, tagged: list[TaggedToken], sentence_index: int):
        self.tagged = tagged
        self.index = sentence_index
        self.pos = 0

    def peek(self) -> TaggedToken | None:
        return self.tagged[self.pos] if self.pos < len(self.tagged) else None

    def fail(self, reason: str) -> ParseError:
        tok = self.peek()
        if tok is not None:
            span = (tok.token.start, tok.token.end)
        elif self.tagged:
            span = (self.tagged[0].token.start, self.tagged[-1].token.end)
        else:
            span = (0, 0)
        return ParseError(self.index, reason, span)

    def at(self, *cats: PosCategory) -> bool:
        tok = self.peek()
        return tok is not None and tok.pos in cats

    def noun_phrase(self, object_index: int) -> NpChunk:
        start = self.pos
        if self.at(PosCategory.DETERMINER):
            self.pos += 1
        while self.at(*_NP_BODY):
            self.pos += 1
        chunk = self.tagged[start:self.pos]
        if not chunk or chunk[-1].pos not in _NP_HEAD:
            raise self.fail("expected a noun phrase with a noun head")
        return NpChunk(tuple(chunk), object_index)

    def verb_group(self) -> VerbGroup:
        aux = None
        if self.at(PosCategory.AUX):
            aux = self.peek().token
            self.pos += 1
        if not self.at(PosCategory.VERB):
            raise self.fail("expected a verb")
        main = self.peek().token
        self.pos += 1
        prep = None
        if self.at(PosCategory.PREPOSITION):
            prep = self.peek().token
            self.pos += 1
        return VerbGroup(main=main, aux=aux, prep=prep)

    def clause(self) -> ClauseParse:
        if not self.tagged:
            raise self.fail("empty sentence")
        nps = [self.noun_phrase(0)]
        vgs: list[VerbGroup] = []
        if not self.at(PosCategory.AUX, PosCategory.VERB):
            raise self.fail("no verb group after the subject")
        vgs.append(self.verb_group())
        nps.append(self.noun_phrase(1))
        while self.at(PosCategory.INFINITIVE_MARKER):
            self.pos += 1
            vg = self.verb_group()
            if self.at(PosCategory.PUNCT) or self.peek() is None:
                break  # objectless infinitive contributes nothing
            vgs.append(vg)
            nps.append(self.noun_phrase(len(nps)))
        if self.at(PosCategory.PUNCT) and self.peek().surface in _TERMINATORS:
            self.pos += 1
        if self.peek() is not None:
            raise self.fail(f"unexpected {self.peek().pos.value} {self.peek().surface!r}")
        return ClauseParse(self.index, tuple(nps), tuple(vgs))


def parse_clause(tagged: list[TaggedToken], sentence_index: int = 0) -> ClauseParse:
    return _ClauseParser(tagged, sentence_index).clause()


def parse_sentence(sentence: str, sentence_index: int = 0,
                   lexicon: Lexicon | None = None) -> ClauseParse:
    """Tokenize, tag and chunk one sentence."""
    return parse_clause(tag(tokenize(sentence), lexicon), sentence_index)
