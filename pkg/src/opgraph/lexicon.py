"""Plain-text lexicon for the controlled operation-description language.

A lexicon file is UTF-8 text split into ``[section]`` blocks, one entry per
line, ``#`` starting a comment::

    [verbs]
    take took taken
    load

    [prepositions]
    in

Verb lines list the lemma first; any further words on the line are
irregular forms.  Regular ``-s``/``-ed``/``-ing`` inflections are generated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

SECTIONS = ("verbs", "prepositions", "determiners", "aux", "cardinals")

_VOWELS = set("aeiou")


class LexiconError(ValueError):
    pass


def inflect(lemma: str) -> set[str]:
    """Return the regular inflected forms of ``lemma`` (lemma included).

    Consonant doubling is applied speculatively, so both ``travelled`` and
    ``traveled`` are produced.  Over-generation is harmless here since forms
    are only ever matched against input text.
    """
    forms = {lemma}
    if lemma.endswith(("s", "x", "z", "ch", "sh")):
        forms.add(lemma + "es")
    elif len(lemma) > 1 and lemma.endswith("y") and lemma[-2] not in _VOWELS:
        forms.add(lemma[:-1] + "ies")
    else:
        forms.add(lemma + "s")

    if lemma.endswith("e"):
        forms.add(lemma + "d")
        stem = lemma if lemma.endswith("ee") else lemma[:-1]
        forms.add(stem + "ing")
    elif len(lemma) > 1 and lemma.endswith("y") and lemma[-2] not in _VOWELS:
        forms.add(lemma[:-1] + "ied")
        forms.add(lemma + "ing")
    else:
        forms.add(lemma + "ed")
        forms.add(lemma + "ing")
        if (
            len(lemma) >= 3
            and lemma[-1] not in _VOWELS | {"w", "x", "y"}
            and lemma[-2] in _VOWELS
            and lemma[-3] not in _VOWELS
        ):
            forms.add(lemma + lemma[-1] + "ed")
            forms.add(lemma + lemma[-1] + "ing")
    return forms


@dataclass(frozen=True)
class Lexicon:
    # verbs maps lemma -> irregular forms
    verbs: dict[str, frozenset[str]] = field(default_factory=dict)
    prepositions: frozenset[str] = frozenset()
    determiners: frozenset[str] = frozenset()
    aux: frozenset[str] = frozenset()
    cardinals: frozenset[str] = frozenset()

    def __hash__(self) -> int:
        return hash((frozenset(self.verbs.items()), self.prepositions,
                     self.determiners, self.aux, self.cardinals))

    @classmethod
    def parse(cls, text: str, source: str = "<lexicon>") -> Lexicon:
        entries: dict[str, list[str]] = {name: [] for name in SECTIONS}
        verbs: dict[str, set[str]] = {}
        section = None
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if line.startswith("[") and line.endswith("]"):
                section = line[1:-1].strip().lower()
                if section not in entries:
                    raise LexiconError(f"{source}:{lineno}: unknown section [{section}]")
                continue
            if section is None:
                raise LexiconError(f"{source}:{lineno}: entry outside of a section")
            words = line.lower().split()
            if section == "verbs":
                verbs.setdefault(words[0], set()).update(words[1:])
            else:
                entries[section].extend(words)
        return cls(
            verbs={lemma: frozenset(extra) for lemma, extra in verbs.items()},
            prepositions=frozenset(entries["prepositions"]),
            determiners=frozenset(entries["determiners"]),
            aux=frozenset(entries["aux"]),
            cardinals=frozenset(entries["cardinals"]),
        )

    def union(self, other: Lexicon) -> Lexicon:
        verbs = {lemma: set(extra) for lemma, extra in self.verbs.items()}
        for lemma, extra in other.verbs.items():
            verbs.setdefault(lemma, set()).update(extra)
        return Lexicon(
            verbs={lemma: frozenset(extra) for lemma, extra in verbs.items()},
            prepositions=self.prepositions | other.prepositions,
            determiners=self.determiners | other.determiners,
            aux=self.aux | other.aux,
            cardinals=self.cardinals | other.cardinals,
        )

    @property
    def verb_forms(self) -> dict[str, str]:
        """Map every known verb form (lowercase) to its lemma."""
        return _verb_forms(self)

    def is_verb_form(self, word: str) -> bool:
        return word.lower() in self.verb_forms

    def is_base_form(self, word: str) -> bool:
        return word.lower() in self.verbs


@lru_cache(maxsize=32)
def _verb_forms(lexicon: Lexicon) -> dict[str, str]:
    forms: dict[str, str] = {}
    for lemma in sorted(lexicon.verbs):
        for form in inflect(lemma) | lexicon.verbs[lemma]:
            forms.setdefault(form, lemma)
    return forms


@lru_cache(maxsize=1)
def default_lexicon() -> Lexicon:
    text = resources.files("opgraph").joinpath("data/default.lex").read_text("utf-8")
    return Lexicon.parse(text, source="default.lex")


def load_lexicon(path: str | Path, extend_default: bool = True) -> Lexicon:
    """Read a lexicon file; by default the result is unioned with the built-in one."""
    path = Path(path)
    lexicon = Lexicon.parse(path.read_text(encoding="utf-8"), source=str(path))
    return default_lexicon().union(lexicon) if extend_default else lexicon
