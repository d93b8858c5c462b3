"""Results store: aggregation of per-review and per-feature opinion
statistics, highlight spans, the fixed-field component export, and
checksummed directory persistence.
"""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .extraction import InformationComponent
from .reliability import ScoredPair
from .sentiment import NEUTRAL, OpinionScoreSet
from .textcore import ReviewDocument, Sentence, Token

EXPORT_SCORE_TYPES = ("pmi", "mi", "chi")


class UnknownId(KeyError):
    pass


class StoreCorruptionError(RuntimeError):
    pass


@dataclass
class WordSentiment:
    word: str
    scores: OpinionScoreSet
    orientation: str
    negation: bool
    tfidf: float
    has_modifier: bool


@dataclass
class ReviewSummary:
    document_id: str
    positive_count: int
    negative_count: int
    neutral_count: int


@dataclass
class FeatureSummary:
    feature: str
    positive_count: int
    negative_count: int
    neutral_count: int
    percentages: tuple[float, float, float]
    score_slices: list[tuple[str, float, str]]  # (opinion, |chi|, orientation)
    snippets: list[tuple[str, int, tuple, tuple]]


@dataclass
class ResultsStore:
    documents: list[ReviewDocument]
    components: list[InformationComponent]
    orientations: list[str]
    pairs: list[ScoredPair]
    word_sentiments: dict[str, WordSentiment]
    hits_info: dict[str, dict] = field(default_factory=dict)
    params: dict = field(default_factory=dict)
    snapshot_id: str | None = None

    def __post_init__(self):
        if len(self.components) != len(self.orientations):
            raise ValueError("components and orientations must align")
        self._doc_pos = {d.id: i for i, d in enumerate(self.documents)}
        self._pair_map = {(p.feature, p.opinion): p for p in self.pairs}

    def document(self, document_id: str) -> ReviewDocument:
        if document_id not in self._doc_pos:
            raise UnknownId(f"unknown document id {document_id!r}")
        return self.documents[self._doc_pos[document_id]]

    def document_position(self, document_id: str) -> int:
        return self._doc_pos[document_id]

    def components_of(self, document_id: str):
        """(global index, component, orientation) rows for one document."""
        self.document(document_id)
        return [(i, c, o) for i, (c, o)
                in enumerate(zip(self.components, self.orientations))
                if c.document_id == document_id]

    def pair_reliability(self, feature: str, opinion: str) -> float:
        return self._pair_map[(feature, opinion)].reliability

    def features(self) -> list[tuple[str, int]]:
        """Distinct features with retained mention counts, by first mention."""
        counts: dict[str, int] = {}
        for c in self.components:
            counts[c.feature] = counts.get(c.feature, 0) + 1
        return list(counts.items())


# ---------------------------------------------------------------------------
# aggregation

def aggregate_review_summary(store: ResultsStore, document_id: str) -> ReviewSummary:
    """Orientation counts over retained components of one review."""
    rows = store.components_of(document_id)
    counts = {"positive": 0, "negative": 0, "neutral": 0}
    for _, _, orientation in rows:
        counts[orientation] += 1
    return ReviewSummary(document_id, counts["positive"], counts["negative"],
                         counts["neutral"])


def aggregate_feature_summary(store: ResultsStore, feature: str) -> FeatureSummary:
    """Corpus-wide counts, percentages and chi-square score slices."""
    rows = [(i, c, o) for i, (c, o)
            in enumerate(zip(store.components, store.orientations))
            if c.feature == feature]
    if not rows:
        raise UnknownId(f"unknown feature {feature!r}")
    counts = {"positive": 0, "negative": 0, "neutral": 0}
    for _, _, orientation in rows:
        counts[orientation] += 1
    total = len(rows)
    percentages = (100.0 * counts["positive"] / total,
                   100.0 * counts["negative"] / total,
                   100.0 * counts["neutral"] / total)
    slices = []
    for word in dict.fromkeys(c.opinion for _, c, _ in rows):
        ws = store.word_sentiments[word]
        magnitude = 0.0 if ws.orientation == NEUTRAL else abs(ws.scores.chi)
        slices.append((word, magnitude, ws.orientation))
    slices.sort(key=lambda s: (-s[1], s[0]))
    snippets = sorted(
        ((c.document_id, c.sentence_index, c.feature_span, c.opinion_span)
         for _, c, _ in rows),
        key=lambda s: (store.document_position(s[0]), s[1], s[2]))
    return FeatureSummary(feature, counts["positive"], counts["negative"],
                          counts["neutral"], percentages, slices, snippets)


def snippet_highlights(store: ResultsStore, document_id: str) -> list[dict]:
    """Feature/opinion spans for UI highlighting, exactly as stored.

    component_index counts within this document, aligning with the order of
    the document's component rows.
    """
    out = []
    for local, (_, comp, _) in enumerate(store.components_of(document_id)):
        feature_sentence = (comp.antecedent_sentence_index
                            if comp.anaphora_resolved else comp.sentence_index)
        out.append({"component_index": local, "role": "feature",
                    "sentence_index": feature_sentence,
                    "start": comp.feature_span[0], "end": comp.feature_span[1]})
        out.append({"component_index": local, "role": "opinion",
                    "sentence_index": comp.sentence_index,
                    "start": comp.opinion_span[0], "end": comp.opinion_span[1]})
    return out


# ---------------------------------------------------------------------------
# component export

def _fmt_num(x: float) -> str:
    s = f"{x:.4f}"
    return "0.0000" if s == "-0.0000" else s


def export_components(store: ResultsStore, include_llr: bool = False) -> list[dict]:
    """Export objects with the fixed field set, strongest pairs first.

    Strict mode carries exactly the score types pmi/mi/chi (llr is served by
    the API instead); include_llr appends a fourth entry.
    """
    order = sorted(
        range(len(store.components)),
        key=lambda i: (-store.pair_reliability(store.components[i].feature,
                                               store.components[i].opinion),
                       store.components[i].feature,
                       store.components[i].opinion,
                       store.document_position(store.components[i].document_id),
                       store.components[i].sentence_index,
                       store.components[i].opinion_span[0]))
    objs = []
    for i in order:
        comp = store.components[i]
        ws = store.word_sentiments[comp.opinion]
        scores = [("pmi", ws.scores.pmi), ("mi", ws.scores.mi), ("chi", ws.scores.chi)]
        if include_llr:
            scores.append(("llr", ws.scores.llr))
        objs.append({
            "feature": comp.feature,
            "modifier": comp.modifier or "",
            "opinion": comp.opinion,
            "scoreReliabilityPair": float(_fmt_num(
                store.pair_reliability(comp.feature, comp.opinion))),
            "scoreOpinion": [{"type": t, "number": float(_fmt_num(v))}
                             for t, v in scores],
            "orientation": store.orientations[i],
        })
    return objs


def export_text(store: ResultsStore, include_llr: bool = False) -> str:
    """Serialize export objects with all numbers at 4 decimal places."""
    objs = export_components(store, include_llr)
    chunks = []
    for comp in objs:
        score_items = []
        for entry in comp["scoreOpinion"]:
            score_items.append(
                "    {\n"
                f"      \"type\": {json.dumps(entry['type'])},\n"
                f"      \"number\": {_fmt_num(entry['number'])}\n"
                "    }"
            )
        chunks.append(
            "  {\n"
            f"    \"feature\": {json.dumps(comp['feature'])},\n"
            f"    \"modifier\": {json.dumps(comp['modifier'])},\n"
            f"    \"opinion\": {json.dumps(comp['opinion'])},\n"
            f"    \"scoreReliabilityPair\": {_fmt_num(comp['scoreReliabilityPair'])},\n"
            "    \"scoreOpinion\": [\n" + ",\n".join(score_items) + "\n    ],\n"
            f"    \"orientation\": {json.dumps(comp['orientation'])}\n"
            "  }"
        )
    if not chunks:
        return "[]\n"
    return "[\n" + ",\n".join(chunks) + "\n]\n"


# ---------------------------------------------------------------------------
# serialization

def _token_to_dict(t: Token) -> dict:
    return {"surface": t.surface, "normalized": t.normalized,
            "pos": t.pos, "start": t.span[0], "end": t.span[1]}


def _token_from_dict(d: dict) -> Token:
    return Token(d["surface"], d["normalized"], (d["start"], d["end"]), d["pos"])


def doc_to_dict(doc: ReviewDocument) -> dict:
    return {
        "id": doc.id, "source": doc.source, "domain": doc.product_domain,
        "author": doc.author, "date": doc.posted_on, "stars": doc.star_rating,
        "title": doc.title, "body": doc.body,
        "sentences": [{
            "index": s.index, "start": s.span[0], "end": s.span[1],
            "subjectivity": s.subjectivity,
            "subjectivity_score": s.subjectivity_score,
            "tokens": [_token_to_dict(t) for t in s.tokens],
        } for s in doc.sentences],
    }


def doc_from_dict(d: dict) -> ReviewDocument:
    doc = ReviewDocument(
        id=d["id"], body=d["body"], source=d["source"],
        product_domain=d["domain"], author=d["author"], posted_on=d["date"],
        star_rating=d["stars"], title=d["title"],
    )
    doc.sentences = [Sentence(
        index=s["index"], span=(s["start"], s["end"]),
        tokens=[_token_from_dict(t) for t in s["tokens"]],
        subjectivity=s["subjectivity"], subjectivity_score=s["subjectivity_score"],
    ) for s in d["sentences"]]
    return doc


def comp_to_dict(c: InformationComponent) -> dict:
    d = asdict(c)
    d["feature_span"] = list(c.feature_span)
    d["modifier_span"] = list(c.modifier_span) if c.modifier_span else None
    d["opinion_span"] = list(c.opinion_span)
    return d


def comp_from_dict(d: dict) -> InformationComponent:
    return InformationComponent(
        feature=d["feature"], modifier=d["modifier"], opinion=d["opinion"],
        document_id=d["document_id"], sentence_index=d["sentence_index"],
        feature_span=tuple(d["feature_span"]),
        modifier_span=tuple(d["modifier_span"]) if d["modifier_span"] else None,
        opinion_span=tuple(d["opinion_span"]), rule_id=d["rule_id"],
        anaphora_resolved=d["anaphora_resolved"],
        antecedent_sentence_index=d["antecedent_sentence_index"],
    )


def pair_to_dict(p: ScoredPair) -> dict:
    return {"feature": p.feature, "opinion": p.opinion, "hub_score": p.hub_score,
            "reliability": p.reliability, "domain": p.product_domain}


def pair_from_dict(d: dict) -> ScoredPair:
    return ScoredPair(d["feature"], d["opinion"], d["hub_score"],
                      d["reliability"], d["domain"])


def word_to_dict(w: WordSentiment) -> dict:
    return {"word": w.word, "pmi": w.scores.pmi, "mi": w.scores.mi,
            "chi": w.scores.chi, "llr": w.scores.llr,
            "orientation": w.orientation, "negation": w.negation,
            "tfidf": w.tfidf, "has_modifier": w.has_modifier}


def word_from_dict(d: dict) -> WordSentiment:
    return WordSentiment(d["word"],
                         OpinionScoreSet(d["pmi"], d["mi"], d["chi"], d["llr"]),
                         d["orientation"], d["negation"], d["tfidf"],
                         d["has_modifier"])


# ---------------------------------------------------------------------------
# persistence

STORE_FILES = ("documents.json", "components.json", "pairs.json", "word_scores.json")


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _write_atomic(path: Path, text: str) -> None:
    tmp = path.with_suffix(path.suffix + ".tmp")
    tmp.write_text(text, encoding="utf-8")
    os.replace(tmp, path)


def _sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def persist_store(store: ResultsStore, path: str | Path) -> str:
    """Write the snapshot collections plus a checksummed manifest.

    Returns the snapshot id (content hash over all collection files). Files
    are written via temp-and-replace, manifest last, so readers never see a
    half-written snapshot.
    """
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    contents = {
        "documents.json": _dump([doc_to_dict(d) for d in store.documents]),
        "components.json": _dump({
            "components": [comp_to_dict(c) for c in store.components],
            "orientations": store.orientations,
        }),
        "pairs.json": _dump({
            "pairs": [pair_to_dict(p) for p in store.pairs],
            "hits": store.hits_info,
        }),
        "word_scores.json": _dump({w: word_to_dict(ws)
                                   for w, ws in sorted(store.word_sentiments.items())}),
    }
    digests = {name: _sha256(text) for name, text in contents.items()}
    snapshot_id = _sha256("".join(f"{n}:{digests[n]}\n" for n in sorted(digests)))
    for name, text in contents.items():
        _write_atomic(path / name, text)
    manifest = {"snapshot_id": snapshot_id, "files": digests, "params": store.params}
    _write_atomic(path / "manifest.json", _dump(manifest))
    store.snapshot_id = snapshot_id
    return snapshot_id


def load_store(path: str | Path) -> ResultsStore:
    """Load and checksum-verify a persisted snapshot."""
    path = Path(path)
    manifest_path = path / "manifest.json"
    if not manifest_path.exists():
        raise FileNotFoundError(f"no snapshot manifest in {path}")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    payloads = {}
    for name, digest in manifest["files"].items():
        text = (path / name).read_text(encoding="utf-8")
        if _sha256(text) != digest:
            raise StoreCorruptionError(f"checksum mismatch in {name}")
        payloads[name] = json.loads(text)
    comp_payload = payloads["components.json"]
    store = ResultsStore(
        documents=[doc_from_dict(d) for d in payloads["documents.json"]],
        components=[comp_from_dict(c) for c in comp_payload["components"]],
        orientations=comp_payload["orientations"],
        pairs=[pair_from_dict(p) for p in payloads["pairs.json"]["pairs"]],
        word_sentiments={w: word_from_dict(d)
                         for w, d in payloads["word_scores.json"].items()},
        hits_info=payloads["pairs.json"]["hits"],
        params=manifest["params"],
        snapshot_id=manifest["snapshot_id"],
    )
    return store
