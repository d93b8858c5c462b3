"""Word-level polarity: four association measures over word/class
contingency tables, linguistic feature vectors, and a bagged decision-tree
classifier over {positive, negative, neutral}.

Sign convention shared by all four measures: the sign of
``n11*col2 - n12*col1`` (equivalently n11 - E11), computed in exact integer
arithmetic so class-swapped tables negate every score exactly. A word with
zero co-occurrence in both classes scores exactly 0 everywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .textcore import ReviewDocument

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"
ORIENTATIONS = (POSITIVE, NEGATIVE, NEUTRAL)

NEGATORS = {"not", "never", "no", "n't", "hardly"}
NEGATION_WINDOW = 3


@dataclass
class ContingencyTable:
    n11: float  # word occurrences in positive contexts
    n12: float  # word occurrences in negative contexts
    n21: float  # other-word occurrences in positive contexts
    n22: float  # other-word occurrences in negative contexts

    def __post_init__(self):
        if min(self.n11, self.n12, self.n21, self.n22) < 0:
            raise ValueError("contingency cells must be nonnegative")

    @property
    def total(self) -> float:
        return self.n11 + self.n12 + self.n21 + self.n22

    def swapped(self) -> "ContingencyTable":
        return ContingencyTable(self.n12, self.n11, self.n22, self.n21)


@dataclass
class OpinionScoreSet:
    pmi: float
    mi: float
    chi: float
    llr: float


def contingency_counts(word: str, labeled_contexts) -> ContingencyTable:
    """Count token occurrences of ``word`` against the class columns.

    ``labeled_contexts`` is an iterable of (tokens, label) with labels
    positive/negative; counts are token-level within each class column.
    """
    n11 = n12 = n21 = n22 = 0
    for tokens, label in labeled_contexts:
        hits = sum(1 for t in tokens if t == word)
        rest = len(tokens) - hits
        if label == POSITIVE:
            n11 += hits
            n21 += rest
        elif label == NEGATIVE:
            n12 += hits
            n22 += rest
        else:
            raise ValueError(f"context label must be positive/negative, got {label!r}")
    return ContingencyTable(n11, n12, n21, n22)


def _sign(table: ContingencyTable) -> int:
    # sign(n11 - E11) without division: n11*col2 - n12*col1
    cross = table.n11 * (table.n12 + table.n22) - table.n12 * (table.n11 + table.n21)
    return (cross > 0) - (cross < 0)


def pmi_score(table: ContingencyTable) -> float:
    """Orientation PMI: log2 of (P(w|pos)/P(w|neg)) scaled by class mass.

    When exactly one of n11/n12 is zero the cells get add-0.5 smoothing to
    stay finite; the sign always follows the raw counts.
    """
    sign = _sign(table)
    if sign == 0:
        return 0.0
    n11, n12 = table.n11, table.n12
    col1 = n11 + table.n21
    col2 = n12 + table.n22
    if n11 == 0 or n12 == 0:
        n11 += 0.5
        n12 += 0.5
        col1 += 0.5
        col2 += 0.5
    num = n11 * col2
    den = n12 * col1
    hi, lo = (num, den) if num >= den else (den, num)
    return sign * math.log2(hi / lo)


def _expected(table: ContingencyTable):
    n = table.total
    row1 = table.n11 + table.n12
    row2 = table.n21 + table.n22
    col1 = table.n11 + table.n21
    col2 = table.n12 + table.n22
    return (row1 * col1 / n, row1 * col2 / n, row2 * col1 / n, row2 * col2 / n)


def _cells(table: ContingencyTable):
    return (table.n11, table.n12, table.n21, table.n22)


def mi_score(table: ContingencyTable) -> float:
    """Count-weighted mutual information: sum of O*log2(O/E) over cells."""
    sign = _sign(table)
    if sign == 0:
        return 0.0
    expected = _expected(table)
    terms = [o * math.log2(o / e) if o > 0 else 0.0
             for o, e in zip(_cells(table), expected)]
    return sign * abs((terms[0] + terms[1]) + (terms[2] + terms[3]))


def chi_square_score(table: ContingencyTable) -> float:
    """Signed Pearson chi-square statistic."""
    sign = _sign(table)
    if sign == 0:
        return 0.0
    expected = _expected(table)
    terms = [(o - e) ** 2 / e if e > 0 else 0.0
             for o, e in zip(_cells(table), expected)]
    return sign * ((terms[0] + terms[1]) + (terms[2] + terms[3]))


def llr_score(table: ContingencyTable) -> float:
    """Signed Dunning log-likelihood ratio G2 = 2*sum O*ln(O/E)."""
    sign = _sign(table)
    if sign == 0:
        return 0.0
    expected = _expected(table)
    terms = [o * math.log(o / e) if o > 0 else 0.0
             for o, e in zip(_cells(table), expected)]
    return sign * abs(2.0 * ((terms[0] + terms[1]) + (terms[2] + terms[3])))


def score_word(word: str, labeled_contexts) -> OpinionScoreSet:
    table = contingency_counts(word, labeled_contexts)
    return OpinionScoreSet(pmi_score(table), mi_score(table),
                           chi_square_score(table), llr_score(table))


# ---------------------------------------------------------------------------
# feature vectors

@dataclass
class SentimentVector:
    pmi: float
    mi: float
    chi: float
    llr: float
    negation: bool
    tfidf: float
    has_modifier: bool

    def __post_init__(self):
        if self.tfidf < 0:
            raise ValueError("tfidf must be >= 0")

    def as_array(self) -> np.ndarray:
        return np.array([self.pmi, self.mi, self.chi, self.llr,
                         float(self.negation), self.tfidf,
                         float(self.has_modifier)])


def occurrence_negated(tokens: list[str], index: int) -> bool:
    """True when a negator sits within the window before tokens[index]."""
    lo = max(0, index - NEGATION_WINDOW)
    return any(t in NEGATORS for t in tokens[lo:index])


def build_sentiment_vectors(words: list[str], labeled_contexts,
                            corpus: list[ReviewDocument],
                            modified_words: frozenset[str] | set[str] = frozenset(),
                            ) -> dict[str, SentimentVector]:
    """One vector per distinct opinion word.

    tf-idf uses total term frequency times ln(D / document frequency);
    the negation flag is word-level (any occurrence in the corpus has a
    negator within the preceding window).
    """
    doc_count = len(corpus)
    vectors: dict[str, SentimentVector] = {}
    for word in dict.fromkeys(words):  # preserve order, dedupe
        scores = score_word(word, labeled_contexts)
        tf = 0
        df = 0
        negated = False
        for doc in corpus:
            in_doc = False
            for sent in doc.sentences:
                norm = [t.normalized for t in sent.tokens]
                for i, t in enumerate(norm):
                    if t != word:
                        continue
                    tf += 1
                    in_doc = True
                    if occurrence_negated(norm, i):
                        negated = True
            if in_doc:
                df += 1
        tfidf = tf * math.log(doc_count / df) if df else 0.0
        vectors[word] = SentimentVector(
            scores.pmi, scores.mi, scores.chi, scores.llr,
            negated, tfidf, word in modified_words,
        )
    return vectors


# ---------------------------------------------------------------------------
# decision tree + bagging

class _Leaf:
    __slots__ = ("counts",)

    def __init__(self, counts: dict[str, int]):
        self.counts = counts

    def predict(self, x) -> str:
        return _majority(self.counts)


class _Split:
    __slots__ = ("feature", "threshold", "left", "right")

    def __init__(self, feature: int, threshold: float, left, right):
        self.feature = feature
        self.threshold = threshold
        self.left = left
        self.right = right

    def predict(self, x) -> str:
        node = self.left if x[self.feature] <= self.threshold else self.right
        return node.predict(x)


def _majority(counts: dict[str, int]) -> str:
    best = max(counts.values())
    winners = [c for c in ORIENTATIONS if counts.get(c, 0) == best]
    return winners[0] if len(winners) == 1 else NEUTRAL


def _entropy(counts: dict[str, int]) -> float:
    total = sum(counts.values())
    h = 0.0
    for v in counts.values():
        if v:
            p = v / total
            h -= p * math.log2(p)
    return h


def _count(labels) -> dict[str, int]:
    counts: dict[str, int] = {}
    for lab in labels:
        counts[lab] = counts.get(lab, 0) + 1
    return counts


class DecisionTree:
    """Axis-aligned tree with information-gain splits and min leaf size 2."""

    def __init__(self, min_leaf: int = 2):
        self.min_leaf = min_leaf
        self.root = None

    def fit(self, x: np.ndarray, y: list[str]) -> "DecisionTree":
        self.root = self._build(np.asarray(x, dtype=float), list(y))
        return self

    def _build(self, x, y):
        counts = _count(y)
        if len(counts) == 1 or len(y) < 2 * self.min_leaf:
            return _Leaf(counts)
        best = None  # (gain, feature, threshold)
        parent_h = _entropy(counts)
        n = len(y)
        for f in range(x.shape[1]):
            values = np.unique(x[:, f])
            for a, b in zip(values, values[1:]):
                thr = (a + b) / 2.0
                mask = x[:, f] <= thr
                n_left = int(mask.sum())
                if n_left < self.min_leaf or n - n_left < self.min_leaf:
                    continue
                left = _count(lab for lab, m in zip(y, mask) if m)
                right = _count(lab for lab, m in zip(y, mask) if not m)
                gain = parent_h - (n_left / n) * _entropy(left) \
                    - ((n - n_left) / n) * _entropy(right)
                if best is None or gain > best[0] + 1e-12:
                    best = (gain, f, thr)
        if best is None or best[0] <= 1e-12:
            return _Leaf(counts)
        _, f, thr = best
        mask = x[:, f] <= thr
        left = self._build(x[mask], [lab for lab, m in zip(y, mask) if m])
        right = self._build(x[~mask], [lab for lab, m in zip(y, mask) if not m])
        return _Split(f, thr, left, right)

    def predict(self, x) -> str:
        return self.root.predict(np.asarray(x, dtype=float))


@dataclass
class SentimentModel:
    trees: list[DecisionTree]
    bag_count: int
    sample_seed: int

    def __post_init__(self):
        if not self.trees:
            raise ValueError("ensemble must contain at least one tree")


def train_sentiment(samples: list[tuple[SentimentVector, str]],
                    bags: int = 10, seed: int = 0) -> SentimentModel:
    """Bagging over bootstrap resamples of the labeled vectors."""
    labels = {label for _, label in samples}
    if labels != set(ORIENTATIONS):
        missing = sorted(set(ORIENTATIONS) - labels)
        raise ValueError(f"training data missing class(es): {missing}")
    if bags < 1:
        raise ValueError("bags must be >= 1")
    x = np.stack([v.as_array() for v, _ in samples])
    y = [label for _, label in samples]
    rng = np.random.default_rng(seed)
    n = len(samples)
    trees = []
    for _ in range(bags):
        idx = rng.integers(0, n, size=n)
        trees.append(DecisionTree().fit(x[idx], [y[i] for i in idx]))
    return SentimentModel(trees, bags, seed)


def ensemble_votes(model: SentimentModel, vector: SentimentVector) -> dict[str, int]:
    x = vector.as_array()
    return _count(tree.predict(x) for tree in model.trees)


def classify_polarity(model: SentimentModel, vector: SentimentVector) -> str:
    """Majority vote over the ensemble; any tie resolves to neutral."""
    return _majority(ensemble_votes(model, vector))


def flip_orientation(orientation: str) -> str:
    """Negation flip applied per component occurrence downstream."""
    if orientation == POSITIVE:
        return NEGATIVE
    if orientation == NEGATIVE:
        return POSITIVE
    return orientation
