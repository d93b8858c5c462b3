"""Pipeline orchestration: configuration and the staged commands
ingest -> train-subjectivity -> extract -> score -> summarize -> export.

Every stage reads its predecessor's artifacts from the store directory and
is deterministic for a fixed config and seed, so two identical runs produce
byte-identical stores.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from . import extraction, reliability, sentiment, subjectivity, summary, textcore

STAGE_FILES = {
    "ingest": "documents.json",
    "train-subjectivity": "subjectivity_model.json",
    "extract": "components_raw.json",
    "score": "scored.json",
    "summarize": "manifest.json",
}


class PipelineError(RuntimeError):
    pass


@dataclass
class PipelineConfig:
    input_path: str | None = None
    input_format: str = "jsonl"
    tagger: str = "builtin"              # builtin | pretagged
    subjectivity_training: str | None = None
    subjectivity_alpha: float = 1.0
    subjectivity_threshold: float = 0.5
    anaphora_window: int = 2
    hits_epsilon: float = 1e-6
    hits_max_iter: int = 100
    prune_threshold: float = 0.1
    bags: int = 10
    seed: int = 42
    sentiment_labels: str | None = None  # word<TAB>label file; None = auto by chi sign
    include_llr: bool = False
    store_path: str = "store"
    export_path: str | None = None       # default: <store>/export.json
    listen: str = "127.0.0.1:8647"

    def validate(self) -> None:
        problems = []
        if self.input_format not in ("jsonl", "csv"):
            problems.append(f"input_format: expected jsonl or csv, got {self.input_format!r}")
        if self.tagger not in ("builtin", "pretagged"):
            problems.append(f"tagger: expected builtin or pretagged, got {self.tagger!r}")
        if self.subjectivity_alpha <= 0:
            problems.append(f"subjectivity_alpha: must be > 0, got {self.subjectivity_alpha}")
        if not 0.0 <= self.subjectivity_threshold <= 1.0:
            problems.append(f"subjectivity_threshold: must be in [0,1], got {self.subjectivity_threshold}")
        if self.anaphora_window < 0:
            problems.append(f"anaphora_window: must be >= 0, got {self.anaphora_window}")
        if self.hits_epsilon <= 0:
            problems.append(f"hits_epsilon: must be > 0, got {self.hits_epsilon}")
        if self.hits_max_iter < 1:
            problems.append(f"hits_max_iter: must be >= 1, got {self.hits_max_iter}")
        if not 0.0 <= self.prune_threshold <= 1.0:
            problems.append(f"prune_threshold: must be in [0,1], got {self.prune_threshold}")
        if self.bags < 1:
            problems.append(f"bags: must be >= 1, got {self.bags}")
        if problems:
            raise PipelineError("invalid config:\n  " + "\n  ".join(problems))

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "PipelineConfig":
        data = json.loads(text)
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(data) - known)
        if unknown:
            raise PipelineError(f"unknown config field(s): {', '.join(unknown)}")
        cfg = cls(**data)
        cfg.validate()
        return cfg

    @classmethod
    def load(cls, path: str | Path) -> "PipelineConfig":
        return cls.from_json(Path(path).read_text(encoding="utf-8"))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")

    # numeric/semantic parameters persisted into snapshots; paths stay out
    # so identical runs in different directories stay byte-identical
    def snapshot_params(self) -> dict:
        skip = {"input_path", "store_path", "export_path", "listen",
                "subjectivity_training", "sentiment_labels"}
        return {k: v for k, v in asdict(self).items() if k not in skip}


def _store_dir(config: PipelineConfig) -> Path:
    path = Path(config.store_path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _require(config: PipelineConfig, stage: str) -> Path:
    path = Path(config.store_path) / STAGE_FILES[stage]
    if not path.exists():
        noun = {"ingest": "ingest results", "train-subjectivity": "subjectivity model",
                "extract": "extraction results", "score": "scoring results",
                "summarize": "summary results"}[stage]
        raise PipelineError(
            f"{noun} missing: run `reviewforge {stage}` first ({path} not found)")
    return path


def _dump(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")


# ---------------------------------------------------------------------------
# stages

def cmd_ingest(config: PipelineConfig) -> int:
    config.validate()
    if not config.input_path:
        raise PipelineError("invalid config:\n  input_path: required for ingest")
    docs = textcore.ingest_reviews(config.input_path, config.input_format,
                                   pretagged=(config.tagger == "pretagged"))
    store = _store_dir(config)
    _dump(store / "documents.json", [summary.doc_to_dict(d) for d in docs])
    return len(docs)


def cmd_train_subjectivity(config: PipelineConfig) -> subjectivity.SubjectivityModel:
    config.validate()
    if not config.subjectivity_training:
        raise PipelineError("invalid config:\n  subjectivity_training: required")
    training = subjectivity.parse_training_file(config.subjectivity_training)
    model = subjectivity.train_subjectivity(training, alpha=config.subjectivity_alpha)
    store = _store_dir(config)
    subjectivity.save_model(model, store / "subjectivity_model.json")
    return model


def _load_documents(config: PipelineConfig) -> list[textcore.ReviewDocument]:
    path = _require(config, "ingest")
    return [summary.doc_from_dict(d)
            for d in json.loads(path.read_text(encoding="utf-8"))]


def cmd_extract(config: PipelineConfig) -> list[extraction.InformationComponent]:
    config.validate()
    docs = _load_documents(config)
    model = subjectivity.load_model(_require(config, "train-subjectivity"))
    labeled = subjectivity.filter_subjective(docs, model,
                                             threshold=config.subjectivity_threshold)
    components = []
    for doc in labeled:
        components.extend(extraction.extract_document(
            doc, window=config.anaphora_window))
    store = _store_dir(config)
    _dump(store / "components_raw.json",
          [summary.comp_to_dict(c) for c in components])
    _dump(store / "documents.json", [summary.doc_to_dict(d) for d in labeled])
    return components


def _load_components(config: PipelineConfig) -> list[extraction.InformationComponent]:
    path = _require(config, "extract")
    return [summary.comp_from_dict(d)
            for d in json.loads(path.read_text(encoding="utf-8"))]


def _auto_labels(vectors: dict[str, sentiment.SentimentVector]) -> dict[str, str]:
    """Fallback word labels from the chi-square sign when no file is given."""
    out = {}
    for word, vec in vectors.items():
        if vec.chi > 0:
            out[word] = sentiment.POSITIVE
        elif vec.chi < 0:
            out[word] = sentiment.NEGATIVE
        else:
            out[word] = sentiment.NEUTRAL
    return out


def parse_word_labels(path: str | Path) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            word, sep, label = line.rstrip("\n").partition("\t")
            label = label.strip().lower()
            if not sep or label not in sentiment.ORIENTATIONS:
                raise PipelineError(f"{path}: line {line_no}: expected 'word<TAB>orientation'")
            out[word.strip().lower()] = label
    return out


def cmd_score(config: PipelineConfig) -> dict:
    config.validate()
    _require(config, "extract")
    docs = _load_documents(config)
    components = _load_components(config)

    doc_by_id = {d.id: d for d in docs}

    # per-domain bipartite graphs -> HITS -> reliability -> prune
    by_domain: dict[str, list] = {}
    for comp in components:
        doc = doc_by_id[comp.document_id]
        by_domain.setdefault(doc.product_domain or "", []).append(comp)
    scored: list[reliability.ScoredPair] = []
    hits_info: dict[str, dict] = {}
    for domain in sorted(by_domain):
        graph = reliability.build_bipartite_graph(by_domain[domain])
        result = reliability.run_hits(graph, epsilon=config.hits_epsilon,
                                      max_iter=config.hits_max_iter)
        hits_info[domain] = {"iterations": result.iterations,
                             "converged": result.converged}
        scored.extend(reliability.reliability_scores(graph.pairs, result.hub, domain))
    retained_pairs = reliability.prune_noisy_pairs(scored, config.prune_threshold)
    retained_keys = {(p.feature, p.opinion) for p in retained_pairs}
    retained_idx = [i for i, c in enumerate(components) if c.pair in retained_keys]

    # word-level association scores and vectors over star-labeled contexts
    contexts = star_labeled_contexts(docs)
    words = [components[i].opinion for i in retained_idx]
    modified = {components[i].opinion for i in retained_idx
                if components[i].modifier is not None}
    vectors = sentiment.build_sentiment_vectors(words, contexts, docs, modified)

    if config.sentiment_labels:
        labels = parse_word_labels(config.sentiment_labels)
        missing = sorted(set(vectors) - set(labels))
        if missing:
            raise PipelineError(f"sentiment_labels missing word(s): {', '.join(missing)}")
    else:
        labels = _auto_labels(vectors)
    present = {labels[w] for w in vectors}
    if present == set(sentiment.ORIENTATIONS):
        samples = [(vectors[w], labels[w]) for w in sorted(vectors)]
        model = sentiment.train_sentiment(samples, bags=config.bags, seed=config.seed)
        word_orientation = {w: sentiment.classify_polarity(model, vectors[w])
                            for w in vectors}
        classifier_mode = "bagging"
    else:
        # corpus too small to train a three-class ensemble
        word_orientation = {w: labels[w] for w in vectors}
        classifier_mode = "label-passthrough"

    # occurrence-level orientation with negation flip
    orientations = []
    for i in retained_idx:
        comp = components[i]
        sent = doc_by_id[comp.document_id].sentences[comp.sentence_index]
        norm = [t.normalized for t in sent.tokens]
        pos = next(k for k, t in enumerate(sent.tokens) if t.span == comp.opinion_span)
        orientation = word_orientation[comp.opinion]
        if sentiment.occurrence_negated(norm, pos):
            orientation = sentiment.flip_orientation(orientation)
        orientations.append(orientation)

    payload = {
        "pairs": [summary.pair_to_dict(p) for p in retained_pairs],
        "hits": hits_info,
        "classifier_mode": classifier_mode,
        "retained_indices": retained_idx,
        "orientations": orientations,
        "word_scores": {w: summary.word_to_dict(summary.WordSentiment(
            w, sentiment.OpinionScoreSet(v.pmi, v.mi, v.chi, v.llr),
            word_orientation[w], v.negation, v.tfidf, v.has_modifier))
            for w, v in sorted(vectors.items())},
    }
    _dump(_store_dir(config) / "scored.json", payload)
    return payload


def star_labeled_contexts(docs: list[textcore.ReviewDocument]):
    """Sentence contexts labeled by star rating: 4-5 positive, 1-2 negative,
    3 or unrated discarded."""
    contexts = []
    for doc in docs:
        if doc.star_rating in (4, 5):
            label = sentiment.POSITIVE
        elif doc.star_rating in (1, 2):
            label = sentiment.NEGATIVE
        else:
            continue
        for sent in doc.sentences:
            contexts.append(([t.normalized for t in sent.tokens], label))
    return contexts


def cmd_summarize(config: PipelineConfig) -> summary.ResultsStore:
    config.validate()
    docs = _load_documents(config)
    components = _load_components(config)
    scored = json.loads(_require(config, "score").read_text(encoding="utf-8"))
    store = summary.ResultsStore(
        documents=docs,
        components=[components[i] for i in scored["retained_indices"]],
        orientations=scored["orientations"],
        pairs=[summary.pair_from_dict(p) for p in scored["pairs"]],
        word_sentiments={w: summary.word_from_dict(d)
                         for w, d in scored["word_scores"].items()},
        hits_info=scored["hits"],
        params=config.snapshot_params(),
    )
    summary.persist_store(store, config.store_path)
    return store


def cmd_export(config: PipelineConfig) -> Path:
    config.validate()
    _require(config, "summarize")
    store = summary.load_store(config.store_path)
    out = Path(config.export_path) if config.export_path \
        else Path(config.store_path) / "export.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(summary.export_text(store, include_llr=config.include_llr),
                   encoding="utf-8")
    return out


def run_pipeline(config: PipelineConfig) -> summary.ResultsStore:
    """All mining stages in order; serving stays separate."""
    cmd_ingest(config)
    cmd_train_subjectivity(config)
    cmd_extract(config)
    cmd_score(config)
    store = cmd_summarize(config)
    cmd_export(config)
    return store
