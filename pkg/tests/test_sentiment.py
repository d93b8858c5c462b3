import math
import random

import numpy as np
import pytest

from conftest import synthetic_word_fixture
from reviewforge.sentiment import (
    ContingencyTable, DecisionTree, SentimentVector, _Leaf, _majority,
    build_sentiment_vectors, chi_square_score, classify_polarity,
    contingency_counts, ensemble_votes, flip_orientation, llr_score, mi_score,
    occurrence_negated, pmi_score, train_sentiment,
)
from reviewforge.textcore import build_document

FIXTURE = ContingencyTable(8, 2, 42, 48)


def random_table(rng, allow_zero_row=True):
    while True:
        n11 = rng.randint(0, 40)
        n12 = rng.randint(0, 40)
        if not allow_zero_row and n11 == 0 and n12 == 0:
            continue
        return ContingencyTable(n11, n12, rng.randint(1, 60), rng.randint(1, 60))


class TestContingency:
    def contexts(self):
        # 10 positive contexts of 5 tokens (8 hits), 10 negative (2 hits)
        pos, neg = [], []
        hits = 8
        for i in range(10):
            row = ["w"] * min(hits, 5)
            hits -= len(row)
            row += ["x%d" % i] * (5 - len(row))
            pos.append((row, "positive"))
        hits = 2
        for i in range(10):
            row = ["w"] * min(hits, 5)
            hits -= len(row)
            row += ["y%d" % i] * (5 - len(row))
            neg.append((row, "negative"))
        return pos + neg

    def test_brute_force_fixture(self):
        table = contingency_counts("w", self.contexts())
        assert (table.n11, table.n12, table.n21, table.n22) == (8, 2, 42, 48)

    def test_absent_word(self):
        table = contingency_counts("zzz", self.contexts())
        assert table.n11 == 0 and table.n12 == 0
        assert table.n21 == 50 and table.n22 == 50

    def test_word_in_every_context(self):
        contexts = [(["w"], "positive"), (["w"], "negative")]
        table = contingency_counts("w", contexts)
        assert table.n21 == 0 and table.n22 == 0

    def test_negative_cells_rejected(self):
        with pytest.raises(ValueError):
            ContingencyTable(-1, 0, 0, 0)


class TestMeasures:
    def test_pmi_hand_value(self):
        assert pmi_score(FIXTURE) == 2.0

    def test_pmi_zero_rows(self):
        # Table 2 zero rows: no co-occurrence in either class
        assert pmi_score(ContingencyTable(0, 0, 50, 50)) == 0.0

    def test_pmi_proportional_is_zero(self):
        assert pmi_score(ContingencyTable(5, 5, 45, 45)) == 0.0

    def test_pmi_smoothed_single_zero_finite(self):
        value = pmi_score(ContingencyTable(0, 4, 46, 50))
        assert math.isfinite(value) and value < 0

    def test_mi_hand_value(self):
        assert mi_score(FIXTURE) == pytest.approx(3.068, abs=0.01)

    def test_mi_independent(self):
        assert mi_score(ContingencyTable(5, 5, 45, 45)) == 0.0

    def test_mi_absent_word(self):
        assert mi_score(ContingencyTable(0, 0, 50, 50)) == 0.0

    def test_chi_hand_value(self):
        assert chi_square_score(FIXTURE) == 4.0

    def test_chi_mirrored(self):
        assert chi_square_score(ContingencyTable(2, 8, 48, 42)) == -4.0

    def test_chi_independent(self):
        assert chi_square_score(ContingencyTable(5, 5, 45, 45)) == 0.0

    def test_chi_matches_closed_form_oracle(self):
        rng = random.Random(23)
        for _ in range(100):
            t = random_table(rng, allow_zero_row=False)
            n = t.total
            row1, row2 = t.n11 + t.n12, t.n21 + t.n22
            col1, col2 = t.n11 + t.n21, t.n12 + t.n22
            if 0 in (row1, row2, col1, col2):
                continue
            oracle = n * (t.n11 * t.n22 - t.n12 * t.n21) ** 2 / (row1 * row2 * col1 * col2)
            assert abs(chi_square_score(t)) == pytest.approx(oracle, rel=1e-9)

    def test_llr_hand_value(self):
        assert llr_score(FIXTURE) == pytest.approx(4.255, abs=0.01)

    def test_llr_independent_and_absent(self):
        assert llr_score(ContingencyTable(5, 5, 45, 45)) == 0.0
        assert llr_score(ContingencyTable(0, 0, 9, 9)) == 0.0

    def test_llr_is_scaled_mi(self):
        rng = random.Random(31)
        for _ in range(50):
            t = random_table(rng)
            assert llr_score(t) == pytest.approx(2 * math.log(2) * mi_score(t), abs=1e-9)

    def test_class_swap_antisymmetry_exact(self):
        rng = random.Random(41)
        for _ in range(100):
            t = random_table(rng)
            s = t.swapped()
            assert pmi_score(s) == -pmi_score(t)
            assert mi_score(s) == -mi_score(t)
            assert chi_square_score(s) == -chi_square_score(t)
            assert llr_score(s) == -llr_score(t)

    def test_sign_coherence(self):
        rng = random.Random(47)
        for _ in range(100):
            t = random_table(rng)
            cross = t.n11 * (t.n12 + t.n22) - t.n12 * (t.n11 + t.n21)
            if cross == 0:
                continue
            expected = 1 if cross > 0 else -1
            for score in (pmi_score(t), mi_score(t), chi_square_score(t), llr_score(t)):
                assert (score > 0) - (score < 0) == expected

    def test_zero_law_exact(self):
        for n21, n22 in ((50, 50), (1, 99), (3, 3)):
            t = ContingencyTable(0, 0, n21, n22)
            assert pmi_score(t) == 0.0
            assert mi_score(t) == 0.0
            assert chi_square_score(t) == 0.0
            assert llr_score(t) == 0.0


class TestVectors:
    def corpus(self, bodies):
        return [build_document({"id": "d%d" % i, "body": b})
                for i, b in enumerate(bodies)]

    def test_word_in_all_documents_zero_idf(self):
        corpus = self.corpus(["The camera is great.", "A great lens."])
        vecs = build_sentiment_vectors(["great"], [(["great"], "positive")], corpus)
        assert vecs["great"].tfidf == 0.0

    def test_tfidf_hand_value(self):
        bodies = ["Sharp photo. Sharp lens. Sharp shots."] + ["Nothing here."] * 9
        corpus = self.corpus(bodies)
        vecs = build_sentiment_vectors(["sharp"], [(["sharp"], "positive")], corpus)
        assert vecs["sharp"].tfidf == pytest.approx(3 * math.log(10))

    def test_negation_window(self):
        assert occurrence_negated(["not", "great"], 1)
        assert occurrence_negated(["not", "a", "very", "great"], 3)
        assert not occurrence_negated(["not", "a", "very", "very", "great"], 4)
        assert not occurrence_negated(["great"], 0)

    def test_negation_flag_from_corpus(self):
        corpus = self.corpus(["The lens is not great.", "A great deal."])
        vecs = build_sentiment_vectors(["great"], [(["great"], "positive")], corpus)
        assert vecs["great"].negation is True

    def test_has_modifier_passthrough(self):
        corpus = self.corpus(["The lens is great."])
        vecs = build_sentiment_vectors(["great"], [(["great"], "positive")],
                                       corpus, modified_words={"great"})
        assert vecs["great"].has_modifier is True

    def test_absent_word_zero_tfidf(self):
        corpus = self.corpus(["Nothing at all."])
        vecs = build_sentiment_vectors(["great"], [(["x"], "positive")], corpus)
        assert vecs["great"].tfidf == 0.0


class TestClassifier:
    def test_separable_training_accuracy(self):
        samples = synthetic_word_fixture(per_class=20, seed=7)
        model = train_sentiment(samples, bags=10, seed=42)
        correct = sum(classify_polarity(model, v) == label for v, label in samples)
        assert correct / len(samples) >= 0.9

    def test_single_bag_equals_its_tree(self):
        samples = synthetic_word_fixture(per_class=10, seed=3, noise=0.2)
        model = train_sentiment(samples, bags=1, seed=11)
        assert len(model.trees) == 1
        for v, _ in samples:
            assert classify_polarity(model, v) == model.trees[0].predict(v.as_array())

    def test_plain_tree_perfect_on_separable(self):
        samples = synthetic_word_fixture(per_class=10, seed=5)
        x = np.stack([v.as_array() for v, _ in samples])
        y = [label for _, label in samples]
        tree = DecisionTree().fit(x, y)
        assert all(tree.predict(row) == label for row, label in zip(x, y))

    def test_tie_vote_resolves_neutral(self):
        assert _majority({"positive": 2, "negative": 2}) == "neutral"
        assert _majority({"positive": 3, "negative": 3, "neutral": 1}) == "neutral"
        assert _majority({"positive": 3, "negative": 1}) == "positive"
        # model-level: two stub trees that always disagree
        model = train_sentiment(synthetic_word_fixture(per_class=5, seed=1),
                                bags=2, seed=0)
        model.trees = [DecisionTree(), DecisionTree()]
        model.trees[0].root = _Leaf({"positive": 1})
        model.trees[1].root = _Leaf({"negative": 1})
        vec = SentimentVector(1.0, 1.0, 1.0, 1.0, False, 0.0, False)
        assert ensemble_votes(model, vec) == {"positive": 1, "negative": 1}
        assert classify_polarity(model, vec) == "neutral"

    def test_missing_class_rejected(self):
        samples = [(SentimentVector(1, 1, 1, 1, False, 0, False), "positive"),
                   (SentimentVector(-1, -1, -1, -1, False, 0, False), "negative")]
        with pytest.raises(ValueError, match="missing class"):
            train_sentiment(samples, bags=2, seed=0)

    def test_deterministic_given_seed(self):
        samples = synthetic_word_fixture(per_class=10, seed=9, noise=0.1)
        m1 = train_sentiment(samples, bags=5, seed=123)
        m2 = train_sentiment(samples, bags=5, seed=123)
        grid = synthetic_word_fixture(per_class=5, seed=77)
        for v, _ in grid:
            assert classify_polarity(m1, v) == classify_polarity(m2, v)

    def test_all_zero_vector_neutral(self):
        samples = synthetic_word_fixture(per_class=20, seed=7)
        model = train_sentiment(samples, bags=10, seed=42)
        zero = SentimentVector(0.0, 0.0, 0.0, 0.0, False, 1.0, False)
        assert classify_polarity(model, zero) == "neutral"

    def test_table2_sign_patterns(self):
        samples = synthetic_word_fixture(per_class=20, seed=7)
        model = train_sentiment(samples, bags=10, seed=42)
        amazing = SentimentVector(2.3403, 172.7484, 1177.2141, 300.0, False, 1.0, False)
        bad = SentimentVector(-0.7344, -109.3725, -850.0066, -200.0, False, 1.0, False)
        assert classify_polarity(model, amazing) == "positive"
        assert classify_polarity(model, bad) == "negative"

    def test_ensemble_less_seed_sensitive_than_single_tree(self):
        samples = synthetic_word_fixture(per_class=12, seed=2, noise=0.25)
        probe = [v for v, _ in synthetic_word_fixture(per_class=8, seed=91, noise=0.3)]

        def instability(bags):
            votes = []
            for seed in range(20):
                model = train_sentiment(samples, bags=bags, seed=seed)
                votes.append([classify_polarity(model, v) for v in probe])
            total = 0.0
            for i in range(len(probe)):
                column = [row[i] for row in votes]
                top = max(column.count(c) for c in set(column))
                total += 1.0 - top / len(column)
            return total / len(probe)

        assert instability(10) <= instability(1) + 1e-9

    def test_flip_orientation(self):
        assert flip_orientation("positive") == "negative"
        assert flip_orientation("negative") == "positive"
        assert flip_orientation("neutral") == "neutral"
