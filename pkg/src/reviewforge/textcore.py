"""Corpus substrate: review ingestion, sentence splitting, tokenization and
part-of-speech tagging.

All spans are half-open ``(start, end)`` character offsets into the review
body, so ``body[start:end]`` recovers the original surface text at any level
(sentence, token, extracted component).
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field, replace
from pathlib import Path

from .lexicon import LEXICON, PTB_FOLD, TAGSET

Span = tuple[int, int]

SUBJECTIVE = "subjective"
OBJECTIVE = "objective"


class MalformedRecord(ValueError):
    """An input record that cannot be turned into a review document."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class DuplicateReviewId(ValueError):
    def __init__(self, review_id: str, line_no: int):
        super().__init__(f"line {line_no}: duplicate review id {review_id!r}")
        self.review_id = review_id


@dataclass
class Token:
    surface: str
    normalized: str
    span: Span
    pos: str | None = None


@dataclass
class Sentence:
    index: int
    span: Span
    tokens: list[Token] = field(default_factory=list)
    subjectivity: str | None = None
    subjectivity_score: float | None = None


@dataclass
class ReviewDocument:
    id: str
    body: str
    source: str | None = None
    product_domain: str | None = None
    author: str | None = None
    posted_on: str | None = None
    star_rating: int | None = None
    title: str | None = None
    sentences: list[Sentence] = field(default_factory=list)

    def __post_init__(self):
        if self.star_rating is not None and self.star_rating not in (1, 2, 3, 4, 5):
            raise ValueError(f"star_rating must be 1..5, got {self.star_rating!r}")

    def sentence_text(self, index: int) -> str:
        s = self.sentences[index]
        return self.body[s.span[0]:s.span[1]]


# ---------------------------------------------------------------------------
# sentence splitting

_TERMINATORS = ".!?"

# Guard list: tokens before a period that never end a sentence.
ABBREVIATIONS = {
    "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs", "etc",
    "e.g", "i.e", "fig", "no", "inc", "ltd", "co", "corp", "approx",
    "dept", "est", "min", "max", "oz", "lb", "ft", "u.s", "u.k",
    "a.m", "p.m",
}


def _preceding_word(text: str, i: int) -> str:
    j = i - 1
    while j >= 0 and (text[j].isalpha() or text[j] == "."):
        j -= 1
    return text[j + 1:i].lower().rstrip(".")


def _is_decimal_point(text: str, i: int) -> bool:
    return (
        0 < i < len(text) - 1
        and text[i - 1].isdigit()
        and text[i + 1].isdigit()
    )


def split_sentences(body: str) -> list[Span]:
    """Split a review body into sentence spans.

    A boundary is a run of ``. ! ?`` followed by whitespace and a capital
    letter, with decimal-point and abbreviation guards. Spans are trimmed of
    surrounding whitespace and together cover all non-whitespace content.
    """
    spans: list[Span] = []
    n = len(body)
    start = 0
    i = 0
    while i < n:
        ch = body[i]
        if ch in _TERMINATORS:
            if ch == "." and (_is_decimal_point(body, i) or
                              _preceding_word(body, i) in ABBREVIATIONS):
                i += 1
                continue
            # absorb the full terminator run ("?!", "...")
            end = i + 1
            while end < n and body[end] in _TERMINATORS:
                end += 1
            j = end
            while j < n and body[j].isspace():
                j += 1
            if j < n and not body[j].isupper():
                i = end
                continue
            spans.append((start, end))
            start = j
            i = j
        else:
            i += 1
    if start < n:
        spans.append((start, n))
    return [_trim(body, s) for s in spans if body[s[0]:s[1]].strip()]


def _trim(body: str, span: Span) -> Span:
    start, end = span
    while start < end and body[start].isspace():
        start += 1
    while end > start and body[end - 1].isspace():
        end -= 1
    return (start, end)


# ---------------------------------------------------------------------------
# tokenization

_NUMBER_RE = re.compile(r"\d+(?:\.\d+)*")
_WORD_RE = re.compile(r"[A-Za-z]+(?:'[A-Za-z]+)*")
_CLITICS = ("'s", "'re", "'ve", "'ll", "'d", "'m")


def _split_word(surface: str, start: int) -> list[tuple[str, int, int]]:
    """Split clitics off a word match: (surface, start, end) pieces."""
    low = surface.lower()
    if low.endswith("n't") and len(surface) > 3:
        cut = len(surface) - 3
        return [(surface[:cut], start, start + cut),
                (surface[cut:], start + cut, start + len(surface))]
    for clitic in _CLITICS:
        if low.endswith(clitic) and len(surface) > len(clitic):
            cut = len(surface) - len(clitic)
            return [(surface[:cut], start, start + cut),
                    (surface[cut:], start + cut, start + len(surface))]
    if "'" in surface:
        pieces = []
        pos = start
        for part in re.split(r"(')", surface):
            if part:
                pieces.append((part, pos, pos + len(part)))
                pos += len(part)
        return pieces
    return [(surface, start, start + len(surface))]


def tokenize(sentence_text: str, base: int = 0) -> list[Token]:
    """Tokenize one sentence into words, numbers and punctuation tokens.

    Hyphens and other punctuation come out as their own tokens; contractions
    split PTB-style ("don't" -> "do" + "n't"). Spans are offset by ``base``
    so document-level assembly can keep offsets absolute into the body.
    """
    tokens: list[Token] = []
    i = 0
    n = len(sentence_text)
    while i < n:
        ch = sentence_text[i]
        if ch.isspace():
            i += 1
            continue
        m = _NUMBER_RE.match(sentence_text, i)
        if m:
            tokens.append(Token(m.group(), m.group().lower(), (base + i, base + m.end())))
            i = m.end()
            continue
        m = _WORD_RE.match(sentence_text, i)
        if m:
            for surface, s, e in _split_word(m.group(), i):
                tokens.append(Token(surface, surface.lower(), (base + s, base + e)))
            i = m.end()
            continue
        tokens.append(Token(ch, ch.lower(), (base + i, base + i + 1)))
        i += 1
    return tokens


# ---------------------------------------------------------------------------
# tagging

class RuleTagger:
    """Two-stage tagger: lexicon lookup, then suffix/context rules.

    Deterministic by construction; swap in any object with the same ``tag``
    signature to use a different tagger in the pipeline.
    """

    def __init__(self, lexicon: dict[str, str] | None = None):
        self.lexicon = LEXICON if lexicon is None else lexicon

    def tag(self, tokens: list[Token]) -> list[Token]:
        tagged: list[Token] = []
        for position, tok in enumerate(tokens):
            pos = self._tag_one(tok, position, tagged)
            tagged.append(replace(tok, pos=pos))
        return tagged

    def _tag_one(self, tok: Token, position: int, tagged: list[Token]) -> str:
        w = tok.normalized
        if not any(c.isalnum() for c in w):
            return "OTHER"
        if w[0].isdigit():
            return "CD"
        if w in self.lexicon:
            return self.lexicon[w]
        if w.endswith("ly"):
            return "RB"
        if w.endswith("est") and len(w) >= 5:
            return "JJS"
        if w.endswith("er") and len(w) >= 4:
            prev = tagged[-1].pos if tagged else None
            if prev in ("DT", "RB", "RBR", "RBS"):
                return "JJR"
            # -er nouns (speaker, charger, ...) fall through to NN
        if w.endswith("s") and len(w) >= 3 and not w.endswith(("ss", "us", "is")):
            return "NNS"
        if position > 0 and tok.surface[0].isupper():
            return "NNP"
        return "NN"


_DEFAULT_TAGGER = RuleTagger()


def pos_tag(tokens: list[Token], tagger: RuleTagger | None = None) -> list[Token]:
    """Assign exactly one tag from the closed tagset to every token."""
    return (tagger or _DEFAULT_TAGGER).tag(tokens)


# ---------------------------------------------------------------------------
# document assembly and ingestion

def build_document(record: dict, tagger: RuleTagger | None = None,
                   pretagged: bool = False) -> ReviewDocument:
    """Assemble a fully split/tokenized/tagged document from a raw record."""
    if pretagged:
        return _build_pretagged(record)
    body = record["body"]
    doc = ReviewDocument(
        id=record["id"],
        body=body,
        source=record.get("source"),
        product_domain=record.get("domain"),
        author=record.get("author"),
        posted_on=record.get("date"),
        star_rating=record.get("stars"),
        title=record.get("title"),
    )
    for idx, span in enumerate(split_sentences(body)):
        toks = pos_tag(tokenize(body[span[0]:span[1]], base=span[0]), tagger)
        doc.sentences.append(Sentence(index=idx, span=span, tokens=toks))
    return doc


def _build_pretagged(record: dict) -> ReviewDocument:
    """Parse a pre-tagged body: one sentence per line of ``surface/TAG`` pairs."""
    lines = [ln for ln in record["body"].splitlines() if ln.strip()]
    sentences: list[Sentence] = []
    parts: list[str] = []
    offset = 0
    for idx, line in enumerate(lines):
        tokens: list[Token] = []
        sent_start = offset
        for pair in line.split():
            surface, sep, tag = pair.rpartition("/")
            if not sep or not surface:
                raise MalformedRecord(idx + 1, f"bad surface/TAG pair {pair!r}")
            tag = PTB_FOLD.get(tag, tag)
            if tag not in TAGSET:
                tag = "OTHER"
            if tokens:
                offset += 1  # single space between tokens
            tokens.append(Token(surface, surface.lower(),
                                (offset, offset + len(surface)), pos=tag))
            offset += len(surface)
        sentences.append(Sentence(index=idx, span=(sent_start, offset), tokens=tokens))
        parts.append(" ".join(t.surface for t in tokens))
        offset += 1  # newline between sentences
    doc = ReviewDocument(
        id=record["id"],
        body="\n".join(parts),
        source=record.get("source"),
        product_domain=record.get("domain"),
        author=record.get("author"),
        posted_on=record.get("date"),
        star_rating=record.get("stars"),
        title=record.get("title"),
    )
    doc.sentences = sentences
    return doc


_FIELDS = ("id", "source", "domain", "author", "date", "stars", "title", "body")


def _normalize_record(raw: dict, line_no: int) -> dict:
    if not raw.get("id"):
        raise MalformedRecord(line_no, "missing required field 'id'")
    if raw.get("body") is None or raw.get("body") == "":
        raise MalformedRecord(line_no, "missing required field 'body'")
    rec = {k: raw.get(k) for k in _FIELDS}
    rec["id"] = str(rec["id"])
    stars = rec.get("stars")
    if stars in (None, ""):
        rec["stars"] = None
    else:
        try:
            rec["stars"] = int(stars)
        except (TypeError, ValueError):
            raise MalformedRecord(line_no, f"stars must be an integer 1..5, got {stars!r}")
        if rec["stars"] not in (1, 2, 3, 4, 5):
            raise MalformedRecord(line_no, f"stars must be in 1..5, got {stars!r}")
    for key in ("source", "domain", "author", "date", "title"):
        if rec.get(key) == "":
            rec[key] = None
    return rec


def iter_records(path: str | Path, format: str = "jsonl"):
    """Yield ``(line_no, record)`` pairs of normalized raw records."""
    path = Path(path)
    if format == "jsonl":
        with open(path, encoding="utf-8") as fh:
            for line_no, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    raw = json.loads(line)
                except json.JSONDecodeError as exc:
                    raise MalformedRecord(line_no, f"invalid JSON: {exc.msg}")
                if not isinstance(raw, dict):
                    raise MalformedRecord(line_no, "record must be an object")
                yield line_no, _normalize_record(raw, line_no)
    elif format == "csv":
        with open(path, encoding="utf-8", newline="") as fh:
            reader = csv.DictReader(fh)
            for line_no, row in enumerate(reader, start=2):
                yield line_no, _normalize_record(row, line_no)
    else:
        raise ValueError(f"unknown input format {format!r} (expected jsonl or csv)")


def ingest_reviews(path: str | Path, format: str = "jsonl",
                   tagger: RuleTagger | None = None,
                   pretagged: bool = False) -> list[ReviewDocument]:
    """Read a review corpus into fully analyzed documents.

    Rejects duplicate ids and reports malformed records with their line
    number. An empty input file is a valid empty corpus.
    """
    docs: list[ReviewDocument] = []
    seen: dict[str, int] = {}
    for line_no, rec in iter_records(path, format):
        if rec["id"] in seen:
            raise DuplicateReviewId(rec["id"], line_no)
        seen[rec["id"]] = line_no
        docs.append(build_document(rec, tagger=tagger, pretagged=pretagged))
    return docs
