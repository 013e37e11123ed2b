import json
import unicodedata

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grammar import grammar_sentences
from opgraph.text_pipeline import (
    ParseError,
    PosCategory,
    parse_clause,
    parse_sentence,
    segment_sentences,
    tag,
    tokenize,
)


def surfaces(tokens):
    return [t.surface for t in tokens]


def tags_of(sentence):
    return {t.surface: t.pos for t in tag(tokenize(sentence))}


class TestSegmentation:
    def test_empty(self):
        assert segment_sentences("") == []
        assert segment_sentences("   \n ") == []

    def test_decimal_point_is_not_a_boundary(self):
        text = ("The excavation activity takes 1.2 min to excavate one truckload. "
                "The excavation activity starts before the loading activity.")
        out = segment_sentences(text)
        assert len(out) == 2
        assert "1.2 min" in out[0]

    def test_single_sentence_with_unit(self):
        assert segment_sentences("One truck has 8.9m³ capacity.") == ["One truck has 8.9m³ capacity."]

    def test_lowercase_continuation_is_not_a_boundary(self):
        assert len(segment_sentences("Use approx. three trucks. Then stop.")) == 2

    def test_trailing_fragment_without_terminator(self):
        assert segment_sentences("One truck. Two trucks") == ["One truck.", "Two trucks"]

    def test_corpus_has_17_sentences(self, corpus_text):
        assert len(segment_sentences(corpus_text)) == 17

    def test_question_and_exclamation(self):
        assert segment_sentences("Is it done? Yes! Good.") == ["Is it done?", "Yes!", "Good."]


class TestTokenize:
    def test_decimal_stays_whole(self):
        assert surfaces(tokenize("The loading activity takes 2.8 min to load one truck.")) == [
            "The", "loading", "activity", "takes", "2.8", "min", "to", "load", "one", "truck", "."]

    def test_hyphen_splits_compound(self):
        toks = surfaces(tokenize("One front-end loader is used in the loading activity."))
        assert toks[:4] == ["One", "front", "end", "loader"]
        assert "-" not in toks

    def test_unit_number_stays_whole(self):
        assert surfaces(tokenize("One truck has 8.9m³ capacity.")) == [
            "One", "truck", "has", "8.9m³", "capacity", "."]

    def test_leading_and_trailing_punctuation(self):
        assert surfaces(tokenize('"(loader),"')) == ['"', "(", "loader", ")", ",", '"']

    @given(st.text(alphabet=st.characters(codec="utf-8", exclude_categories=("Cs",)), max_size=60))
    def test_offsets_reproduce_surfaces(self, sentence):
        prev_end = 0
        for tok in tokenize(sentence):
            assert tok.surface
            assert not any(ch.isspace() for ch in tok.surface)
            assert prev_end <= tok.start < tok.end
            assert sentence[tok.start:tok.end] == tok.surface
            prev_end = tok.end


class TestTag:
    def test_precedes_before(self):
        t = tags_of("The hauling activity precedes before the dumping activity.")
        assert t["precedes"] is PosCategory.VERB
        assert t["before"] is PosCategory.PREPOSITION
        assert t["hauling"] is PosCategory.NOUN

    def test_gerund_object_is_noun(self):
        tagged = tag(tokenize("One spotter is used in the dumping activity to assist with dumping."))
        assert tagged[-2].surface == "dumping"
        assert tagged[-2].pos is PosCategory.NOUN
        assert [t.pos for t in tagged if t.surface == "to"] == [PosCategory.INFINITIVE_MARKER]

    def test_cardinals_and_units(self):
        t = tags_of("one 2.8 8900m³ 4m3 two")
        assert t["one"] is t["two"] is t["2.8"] is PosCategory.CARDINAL
        assert t["8900m³"] is t["4m3"] is PosCategory.UNIT_NUMBER

    def test_has_is_main_verb(self):
        assert tags_of("One truck has 8.9m³ capacity.")["has"] is PosCategory.VERB

    def test_to_before_determiner_is_preposition(self):
        t = tags_of("The returning activity returns to the loading activity.")
        assert t["to"] is PosCategory.PREPOSITION
        assert t["returns"] is PosCategory.VERB

    def test_participle_modifier_is_noun(self):
        assert tags_of("to spread the dumped dirt.")["dumped"] is PosCategory.NOUN

    @given(st.text(max_size=80))
    def test_tagging_is_total_and_punct_exact(self, sentence):
        tokens = tokenize(sentence)
        tagged = tag(tokens)
        assert [t.token for t in tagged] == tokens
        for t in tagged:
            all_punct = all(unicodedata.category(c).startswith("P") for c in t.surface)
            assert (t.pos is PosCategory.PUNCT) == all_punct


class TestParseClause:
    def test_passive_with_preposition(self):
        p = parse_sentence("The loading activity is followed by the hauling activity.")
        assert [(np.role, np.text) for np in p.nps] == [
            ("Subject", "The loading activity"), ("Object(1)", "the hauling activity")]
        (vg,) = p.vgs
        assert (vg.aux.surface, vg.main.surface, vg.prep.surface) == ("is", "followed", "by")

    def test_trailing_infinitive_is_dropped(self):
        p = parse_sentence("The hauling activity takes 19.1 min to travel.")
        assert [np.text for np in p.nps] == ["The hauling activity", "19.1 min"]
        assert [vg.main.surface for vg in p.vgs] == ["takes"]
        assert p.vgs[0].prep is None and p.vgs[0].aux is None

    def test_infinitive_with_object(self):
        p = parse_sentence("One backhoe is used in the excavation activity to excavate 8900m³ dirt.")
        assert [np.text for np in p.nps] == ["One backhoe", "the excavation activity", "8900m³ dirt"]
        assert [np.role for np in p.nps] == ["Subject", "Object(1)", "Object(2)"]
        assert [(vg.main.surface, vg.prep and vg.prep.surface) for vg in p.vgs] == [
            ("used", "in"), ("excavate", None)]

    def test_all_corpus_sentences_parse(self, corpus_text):
        for i, s in enumerate(segment_sentences(corpus_text)):
            p = parse_sentence(s, i)
            assert p.sentence_index == i
            assert len(p.vgs) == len(p.nps) - 1

    @pytest.mark.parametrize("sentence, reason", [
        ("Colorless green ideas sleep furiously near.", "no verb group"),
        ("The truck the loader takes one min.", "no verb group"),
        ("The truck takes.", "noun phrase"),
        ("The truck takes one.", "noun phrase"),
        ("", "empty"),
        ("The truck takes one min, then stops.", "unexpected"),
    ])
    def test_errors(self, sentence, reason):
        with pytest.raises(ParseError) as info:
            parse_sentence(sentence, 4)
        assert info.value.sentence_index == 4
        assert reason in info.value.reason
        start, end = info.value.char_span
        assert 0 <= start <= end <= len(sentence)

    def test_error_span_points_at_offender(self):
        s = "Colorless green ideas sleep furiously near."
        with pytest.raises(ParseError) as info:
            parse_sentence(s)
        start, end = info.value.char_span
        assert s[start:end] == "."

    def test_deterministic_serialization(self, corpus_text):
        def run():
            return json.dumps([parse_sentence(s, i).to_dict()
                               for i, s in enumerate(segment_sentences(corpus_text))])
        assert run() == run()

    @settings(max_examples=300)
    @given(grammar_sentences())
    def test_grammar_templates_parse(self, gen):
        p = parse_clause(tag(tokenize(gen.text)), 0)
        assert len(p.vgs) == len(p.nps) - 1 == len(gen.phrases)
        for k, vg in enumerate(p.vgs, start=1):
            assert p.nps[k - 1].start < vg.start < p.nps[k].start
        assert p.nps[0].role == "Subject"
        assert [np.object_index for np in p.nps[1:]] == list(range(1, len(p.nps)))
