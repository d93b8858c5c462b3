"""Sentence-level subjective/objective classification.

A Laplace-smoothed unigram Bayes model: class priors from sentence label
frequencies, per-class word likelihoods with one shared unseen-word cell,
and a product-of-likelihoods sentence rule. Objective sentences are flagged
so downstream extraction never sees them.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, replace
from pathlib import Path

from .textcore import OBJECTIVE, SUBJECTIVE, ReviewDocument, Sentence

CLASSES = (SUBJECTIVE, OBJECTIVE)


@dataclass
class LabeledSentence:
    tokens: list[str]
    label: str

    def __post_init__(self):
        if self.label not in CLASSES:
            raise ValueError(f"label must be one of {CLASSES}, got {self.label!r}")


@dataclass
class SubjectivityModel:
    vocabulary: set[str]
    class_priors: dict[str, float]
    word_likelihoods: dict[str, dict[str, float]]  # class -> word -> P(w|c)
    unseen_likelihood: dict[str, float]            # class -> shared unseen cell
    smoothing_alpha: float

    def __post_init__(self):
        if self.smoothing_alpha <= 0:
            raise ValueError("smoothing_alpha must be > 0")
        if abs(sum(self.class_priors.values()) - 1.0) > 1e-9:
            raise ValueError("class priors must sum to 1")

    def likelihood(self, word: str, cls: str) -> float:
        return self.word_likelihoods[cls].get(word, self.unseen_likelihood[cls])


def train_subjectivity(training: list[LabeledSentence],
                       alpha: float = 1.0) -> SubjectivityModel:
    """Fit priors and smoothed unigram likelihoods from labeled sentences.

    Likelihood(w|c) = (count(w,c) + alpha) / (count(c) + alpha * (|V| + 1));
    the extra cell is the shared unseen-word mass.
    """
    if alpha <= 0:
        raise ValueError("alpha must be > 0")
    labels = {s.label for s in training}
    if labels != set(CLASSES):
        raise ValueError(f"training data must contain both classes, got {sorted(labels)}")

    vocab: set[str] = set()
    word_counts = {c: {} for c in CLASSES}
    token_totals = {c: 0 for c in CLASSES}
    sentence_totals = {c: 0 for c in CLASSES}
    for sent in training:
        sentence_totals[sent.label] += 1
        for w in sent.tokens:
            vocab.add(w)
            counts = word_counts[sent.label]
            counts[w] = counts.get(w, 0) + 1
            token_totals[sent.label] += 1

    n = len(training)
    priors = {c: sentence_totals[c] / n for c in CLASSES}
    likelihoods = {}
    unseen = {}
    for c in CLASSES:
        denom = token_totals[c] + alpha * (len(vocab) + 1)
        likelihoods[c] = {w: (word_counts[c].get(w, 0) + alpha) / denom for w in vocab}
        unseen[c] = alpha / denom
    return SubjectivityModel(vocab, priors, likelihoods, unseen, alpha)


def sentence_posteriors(model: SubjectivityModel,
                        tokens: list[str]) -> dict[str, float]:
    """Both class posteriors from the log-sum of prior and likelihoods."""
    log_scores = {}
    for c in CLASSES:
        score = math.log(model.class_priors[c]) if model.class_priors[c] > 0 else -math.inf
        for w in tokens:
            score += math.log(model.likelihood(w, c))
        log_scores[c] = score
    return _normalize_log(log_scores)


def classify_sentence(model: SubjectivityModel,
                      tokens: list[str]) -> tuple[str, float]:
    """Return (label, posterior of that label); ties go subjective."""
    posteriors = sentence_posteriors(model, tokens)
    if posteriors[SUBJECTIVE] >= posteriors[OBJECTIVE]:
        return SUBJECTIVE, posteriors[SUBJECTIVE]
    return OBJECTIVE, posteriors[OBJECTIVE]


def _normalize_log(log_scores: dict[str, float]) -> dict[str, float]:
    m = max(log_scores.values())
    if m == -math.inf:
        return {c: 1.0 / len(log_scores) for c in log_scores}
    exps = {c: math.exp(v - m) for c, v in log_scores.items()}
    total = sum(exps.values())
    return {c: v / total for c, v in exps.items()}


# ---------------------------------------------------------------------------
# evaluation

@dataclass
class ClassMetrics:
    precision: float
    recall: float
    f1: float


@dataclass
class CVMetrics:
    accuracy: float
    per_class: dict[str, ClassMetrics]


def stratified_folds(labels: list[str], k: int, seed: int = 0) -> list[list[int]]:
    """Deterministic stratified k-fold index partition."""
    if k < 2:
        raise ValueError("k must be >= 2")
    by_class: dict[str, list[int]] = {}
    for i, lab in enumerate(labels):
        by_class.setdefault(lab, []).append(i)
    smallest = min(len(v) for v in by_class.values())
    if k > smallest:
        raise ValueError(f"k={k} exceeds the smallest class size {smallest}")
    rng = random.Random(seed)
    folds: list[list[int]] = [[] for _ in range(k)]
    for lab in sorted(by_class):
        idx = by_class[lab][:]
        rng.shuffle(idx)
        for j, i in enumerate(idx):
            folds[j % k].append(i)
    return [sorted(f) for f in folds]


def cross_validate(training: list[LabeledSentence], k: int = 10,
                   alpha: float = 1.0, seed: int = 0) -> CVMetrics:
    """Stratified k-fold cross-validation, metrics averaged over folds."""
    labels = [s.label for s in training]
    folds = stratified_folds(labels, k, seed)
    accs = []
    prec = {c: [] for c in CLASSES}
    rec = {c: [] for c in CLASSES}
    for fold in folds:
        held = set(fold)
        train = [s for i, s in enumerate(training) if i not in held]
        model = train_subjectivity(train, alpha=alpha)
        tp = {c: 0 for c in CLASSES}
        fp = {c: 0 for c in CLASSES}
        fn = {c: 0 for c in CLASSES}
        correct = 0
        for i in fold:
            predicted, _ = classify_sentence(model, training[i].tokens)
            actual = training[i].label
            if predicted == actual:
                correct += 1
                tp[actual] += 1
            else:
                fp[predicted] += 1
                fn[actual] += 1
        accs.append(correct / len(fold))
        for c in CLASSES:
            prec[c].append(tp[c] / (tp[c] + fp[c]) if tp[c] + fp[c] else 0.0)
            rec[c].append(tp[c] / (tp[c] + fn[c]) if tp[c] + fn[c] else 0.0)
    per_class = {}
    for c in CLASSES:
        p = sum(prec[c]) / k
        r = sum(rec[c]) / k
        f1 = 2 * p * r / (p + r) if p + r else 0.0
        per_class[c] = ClassMetrics(p, r, f1)
    return CVMetrics(sum(accs) / k, per_class)


# ---------------------------------------------------------------------------
# corpus filtering

def filter_subjective(corpus: list[ReviewDocument], model: SubjectivityModel,
                      threshold: float = 0.5) -> list[ReviewDocument]:
    """Label every sentence; returns new documents, inputs untouched.

    A sentence is subjective when its subjective posterior is >= threshold.
    Extraction downstream consumes only subjective-labeled sentences.
    """
    out = []
    for doc in corpus:
        labeled = []
        for sent in doc.sentences:
            posts = sentence_posteriors(model, [t.normalized for t in sent.tokens])
            if posts[SUBJECTIVE] >= threshold:
                label, score = SUBJECTIVE, posts[SUBJECTIVE]
            else:
                label, score = OBJECTIVE, posts[OBJECTIVE]
            labeled.append(replace(sent, subjectivity=label, subjectivity_score=score))
        new_doc = replace(doc, sentences=labeled)
        out.append(new_doc)
    return out


def subjective_sentences(doc: ReviewDocument) -> list[Sentence]:
    return [s for s in doc.sentences if s.subjectivity == SUBJECTIVE]


# ---------------------------------------------------------------------------
# persistence

def parse_training_file(path: str | Path) -> list[LabeledSentence]:
    """Read ``label<TAB>sentence`` lines into labeled token lists."""
    out = []
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            label, sep, text = line.rstrip("\n").partition("\t")
            if not sep:
                raise ValueError(f"line {line_no}: expected 'label<TAB>sentence'")
            label = label.strip().lower()
            tokens = [w.lower() for w in text.split()]
            out.append(LabeledSentence(tokens, label))
    return out


def save_model(model: SubjectivityModel, path: str | Path) -> None:
    payload = {
        "alpha": model.smoothing_alpha,
        "priors": model.class_priors,
        "likelihoods": {c: dict(sorted(model.word_likelihoods[c].items()))
                        for c in CLASSES},
        "unseen": model.unseen_likelihood,
        "vocabulary": sorted(model.vocabulary),
    }
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True), encoding="utf-8")


def load_model(path: str | Path) -> SubjectivityModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    return SubjectivityModel(
        vocabulary=set(payload["vocabulary"]),
        class_priors=payload["priors"],
        word_likelihoods=payload["likelihoods"],
        unseen_likelihood=payload["unseen"],
        smoothing_alpha=payload["alpha"],
    )
