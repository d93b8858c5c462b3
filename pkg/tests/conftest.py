import random

import pytest

from pathlib import Path

from reviewforge.pipeline import PipelineConfig, run_pipeline
from reviewforge.sentiment import SentimentVector

REPO = Path(__file__).resolve().parents[1]
FIXTURES = REPO / "data" / "fixtures"


@pytest.fixture(scope="session")
def fixture_paths():
    return {
        "reviews": FIXTURES / "reviews.jsonl",
        "expected": FIXTURES / "extraction_expected.json",
        "subjectivity": FIXTURES / "subjectivity_train.tsv",
        "labels": FIXTURES / "sentiment_labels.tsv",
    }


def fixture_config(store_path, **overrides) -> PipelineConfig:
    base = dict(
        input_path=str(FIXTURES / "reviews.jsonl"),
        subjectivity_training=str(FIXTURES / "subjectivity_train.tsv"),
        store_path=str(store_path),
        seed=42,
    )
    base.update(overrides)
    return PipelineConfig(**base)


@pytest.fixture(scope="session")
def fixture_store(tmp_path_factory):
    """One full pipeline run over the shipped 6-review corpus."""
    store_dir = tmp_path_factory.mktemp("store")
    return run_pipeline(fixture_config(store_dir))


def synthetic_word_fixture(per_class=20, seed=7, noise=0.0):
    """Labeled sentiment vectors with sign-separable association scores.

    Positive words carry positive scores, negative words the mirror image,
    neutral words all-zero scores; ``noise`` flips that fraction of labels.
    """
    rng = random.Random(seed)
    samples = []
    for _ in range(per_class):
        pmi = rng.uniform(0.3, 3.0)
        mi = rng.uniform(20.0, 200.0)
        chi = rng.uniform(50.0, 1200.0)
        llr = rng.uniform(10.0, 300.0)
        tfidf = rng.uniform(0.0, 5.0)
        samples.append((SentimentVector(pmi, mi, chi, llr, False, tfidf,
                                        rng.random() < 0.5), "positive"))
        pmi = rng.uniform(0.3, 3.0)
        mi = rng.uniform(20.0, 200.0)
        chi = rng.uniform(50.0, 1200.0)
        llr = rng.uniform(10.0, 300.0)
        samples.append((SentimentVector(-pmi, -mi, -chi, -llr,
                                        rng.random() < 0.5,
                                        rng.uniform(0.0, 5.0),
                                        rng.random() < 0.5), "negative"))
        samples.append((SentimentVector(0.0, 0.0, 0.0, 0.0, False,
                                        rng.uniform(0.0, 5.0),
                                        rng.random() < 0.5), "neutral"))
    if noise:
        labels = ["positive", "negative", "neutral"]
        for i in range(len(samples)):
            if rng.random() < noise:
                vec, _ = samples[i]
                samples[i] = (vec, rng.choice(labels))
    return samples
