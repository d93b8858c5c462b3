"""reviewforge: feature-level review mining.

Subjectivity filtering, rule-based (feature, modifier, opinion) extraction
with pronoun resolution, HITS-based pair reliability, statistical word
polarity, and per-review / per-feature opinion summaries behind a read-only
API and a fixed-schema export.
"""

from .extraction import InformationComponent, extract_document, extract_triplets, \
    noun_phrase_head, resolve_anaphora
from .pipeline import PipelineConfig, run_pipeline
from .reliability import BipartiteGraph, ScoredPair, build_bipartite_graph, \
    prune_noisy_pairs, reliability_scores, run_hits
from .sentiment import ContingencyTable, OpinionScoreSet, SentimentModel, \
    SentimentVector, build_sentiment_vectors, chi_square_score, classify_polarity, \
    contingency_counts, llr_score, mi_score, pmi_score, train_sentiment
from .subjectivity import LabeledSentence, SubjectivityModel, classify_sentence, \
    cross_validate, filter_subjective, train_subjectivity
from .summary import FeatureSummary, ResultsStore, ReviewSummary, \
    aggregate_feature_summary, aggregate_review_summary, export_components, \
    export_text, load_store, persist_store, snippet_highlights
from .textcore import ReviewDocument, Sentence, Token, ingest_reviews, pos_tag, \
    split_sentences, tokenize

__version__ = "0.1.0"
