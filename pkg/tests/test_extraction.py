import pytest

from reviewforge.extraction import (
    extract_document, extract_triplets, noun_phrase_head, resolve_anaphora,
)
from reviewforge.textcore import Token, build_document


def doc_of(body):
    return build_document({"id": "d1", "body": body})


def triplets(body, window=2):
    return extract_document(doc_of(body), window=window, subjective_only=False)


def as_tuples(components):
    return [(c.feature, c.modifier, c.opinion) for c in components]


def tok(surface, pos):
    return Token(surface, surface.lower(), (0, len(surface)), pos)


class TestRules:
    def test_r1_copula(self):
        comps = triplets("The camera is great.")
        assert as_tuples(comps) == [("camera", None, "great")]
        assert comps[0].rule_id == "R1"

    def test_r1_with_modifier(self):
        comps = triplets("Speaker quality is very bad.")
        assert as_tuples(comps) == [("speaker quality", "very", "bad")]

    def test_r1_other_copulas(self):
        assert as_tuples(triplets("The photo looks sharp.")) == [("photo", None, "sharp")]
        assert as_tuples(triplets("The case feels solid.")) == [("case", None, "solid")]

    def test_no_adjective_no_match(self):
        assert triplets("I bought it yesterday.") == []

    def test_r2_attributive(self):
        comps = triplets("What a great lens!")
        assert as_tuples(comps) == [("lens", None, "great")]
        assert comps[0].rule_id == "R2"

    def test_r2_with_modifier(self):
        assert as_tuples(triplets("It has a very nice lens.")) == \
            [("lens", "very", "nice")]

    def test_r3_possessive_verb(self):
        comps = triplets("The phone has a wonderful screen.")
        assert as_tuples(comps) == [("screen", None, "wonderful")]

    def test_r3_comes_with(self):
        comps = triplets("The camera comes with a nice strap.")
        assert as_tuples(comps) == [("strap", None, "nice")]

    def test_conjunction_distributes(self):
        comps = triplets("The screen and keyboard are great.")
        assert as_tuples(comps) == [("screen", None, "great"), ("keyboard", None, "great")]

    def test_conjunction_with_determiners(self):
        comps = triplets("The screen and the keyboard are great.")
        assert as_tuples(comps) == [("screen", None, "great"), ("keyboard", None, "great")]

    def test_overlapping_matches_deduplicated(self):
        # R2 and R3 both cover (screen, wonderful); one component comes out
        comps = triplets("The phone has a wonderful screen.")
        assert len(comps) == 1

    def test_spans_point_into_sentence(self):
        body = "The camera is great."
        comps = triplets(body)
        c = comps[0]
        assert body[c.feature_span[0]:c.feature_span[1]] == "camera"
        assert body[c.opinion_span[0]:c.opinion_span[1]] == "great"

    def test_modifier_span(self):
        body = "Speaker quality is very bad."
        c = triplets(body)[0]
        assert body[c.modifier_span[0]:c.modifier_span[1]] == "very"

    def test_output_order_stable(self):
        comps = triplets("The screen and keyboard are great. The lens is nice.")
        keys = [(c.sentence_index, c.feature_span[0]) for c in comps]
        assert keys == sorted(keys)

    def test_deterministic(self):
        body = "The camera is great. It is very cheap."
        assert triplets(body) == triplets(body)


class TestAnaphora:
    def test_backtrack_binding(self):
        comps = triplets("The camera is great. It is very cheap.")
        assert as_tuples(comps) == [("camera", None, "great"), ("camera", "very", "cheap")]
        bound = comps[1]
        assert bound.anaphora_resolved
        assert bound.antecedent_sentence_index == 0
        assert bound.sentence_index == 1

    def test_first_sentence_pronoun_dropped(self):
        assert triplets("It is great.") == []

    def test_number_agreement_skips_singular(self):
        comps = triplets("The buttons are stiff. The case is nice. They are also tiny.")
        assert ("buttons", "also", "tiny") in as_tuples(comps)
        bound = next(c for c in comps if c.opinion == "tiny")
        assert bound.antecedent_sentence_index == 0

    def test_singular_pronoun_skips_plural(self):
        comps = triplets("The buttons are stiff. The case is nice. It is also tiny.")
        bound = next(c for c in comps if c.opinion == "tiny")
        assert bound.feature == "case"
        assert bound.antecedent_sentence_index == 1

    def test_window_limit_drops_distant_antecedent(self):
        body = "The camera is great. It broke. It died. It is very cheap."
        comps = triplets(body, window=2)
        assert as_tuples(comps) == [("camera", None, "great")]

    def test_wider_window_binds(self):
        body = "The camera is great. It broke. It died. It is very cheap."
        comps = triplets(body, window=3)
        assert ("camera", "very", "cheap") in as_tuples(comps)

    def test_fallback_to_raw_noun_phrase(self):
        comps = triplets("I love this camera. It is great.")
        assert as_tuples(comps) == [("camera", None, "great")]
        assert comps[0].anaphora_resolved
        assert comps[0].antecedent_sentence_index == 0

    def test_fallback_respects_number(self):
        comps = triplets("I love these speakers. They are great.")
        assert as_tuples(comps) == [("speakers", None, "great")]

    def test_no_pronoun_features_in_output(self):
        body = ("The camera is great. It is cheap. They are great. "
                "It is nice. This is fine.")
        for c in triplets(body):
            assert c.feature not in ("it", "they", "this", "these", "those")

    def test_binding_always_backward_within_window(self):
        body = "The camera is great. It is cheap. The lens is nice. It is sharp."
        for c in triplets(body, window=2):
            if c.anaphora_resolved:
                distance = c.sentence_index - c.antecedent_sentence_index
                assert 1 <= distance <= 2

    def test_resolved_feature_span_points_at_antecedent(self):
        body = "The camera is great. It is very cheap."
        bound = triplets(body)[1]
        assert body[bound.feature_span[0]:bound.feature_span[1]] == "camera"

    def test_resolve_is_separately_callable(self):
        doc = doc_of("The camera is great. It is cheap.")
        raw = []
        for s in doc.sentences:
            raw.extend(extract_triplets(s, doc.id))
        placeholders = [c for c in raw if c.rule_id == "R4"]
        assert placeholders and placeholders[0].feature == "it"
        resolved = resolve_anaphora(doc, raw)
        assert all(c.feature != "it" for c in resolved)


class TestNounPhraseHead:
    def test_multiword_proper(self):
        assert noun_phrase_head([tok("Ipod", "NNP"), tok("Apps", "NNS")]) == "ipod apps"

    def test_single_noun(self):
        assert noun_phrase_head([tok("camera", "NN")]) == "camera"

    def test_compound(self):
        assert noun_phrase_head([tok("battery", "NN"), tok("life", "NN")]) == "battery life"

    def test_surrounding_non_nouns_ignored(self):
        run = [tok("the", "DT"), tok("battery", "NN"), tok("life", "NN"), tok("is", "VB")]
        assert noun_phrase_head(run) == "battery life"

    def test_no_noun_raises(self):
        with pytest.raises(ValueError, match="no noun"):
            noun_phrase_head([tok("great", "JJ")])


class TestFixtureCorpus:
    def test_annotated_set_reproduced(self, fixture_paths):
        import json
        from reviewforge.textcore import ingest_reviews

        docs = ingest_reviews(fixture_paths["reviews"])
        assert sum(len(d.sentences) for d in docs) == 20
        got = []
        for doc in docs:
            for c in extract_document(doc, subjective_only=False):
                got.append({
                    "document_id": c.document_id,
                    "sentence_index": c.sentence_index,
                    "feature": c.feature, "modifier": c.modifier,
                    "opinion": c.opinion, "rule_id": c.rule_id,
                    "anaphora_resolved": c.anaphora_resolved,
                    "antecedent_sentence_index": c.antecedent_sentence_index,
                })
        expected = json.loads(fixture_paths["expected"].read_text())
        assert got == expected
