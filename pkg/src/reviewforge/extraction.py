"""Rule-based extraction of (feature, modifier, opinion) components from
tagged subjective sentences, plus backtracking pronoun resolution.

Rule catalog, applied in order per sentence with (feature_span, opinion_span)
dedup keeping the first match:

  R1  NP + copula + [RB] + JJ           ("The camera is great.")
  R2  [RB] + JJ immediately before NP   ("a very nice lens")
  R3  subject + has/have/comes with + [DT] + [RB] + JJ + NP
  R4  subject pronoun + copula + [RB] + JJ -> placeholder for resolution

Conjoined subjects distribute: "the screen and keyboard are great" emits one
component per conjunct noun phrase.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .textcore import ReviewDocument, Sentence, Span, Token

NOUN_TAGS = ("NN", "NNS", "NNP")
ADJ_TAGS = ("JJ", "JJR", "JJS")
ADV_TAGS = ("RB", "RBR", "RBS")

COPULAS = {"is", "are", "was", "were", "looks", "seems", "feels"}
POSSESSIVE_VERBS = {"has", "have"}

SINGULAR_PRONOUNS = {"it", "this"}
PLURAL_PRONOUNS = {"they", "these", "those"}
SUBJECT_PRONOUNS = SINGULAR_PRONOUNS | PLURAL_PRONOUNS


@dataclass
class InformationComponent:
    feature: str
    modifier: str | None
    opinion: str
    document_id: str
    sentence_index: int
    feature_span: Span
    modifier_span: Span | None
    opinion_span: Span
    rule_id: str
    anaphora_resolved: bool = False
    antecedent_sentence_index: int | None = None

    @property
    def pair(self) -> tuple[str, str]:
        return (self.feature, self.opinion)


def noun_phrase_head(tokens: list[Token]) -> str:
    """Lowercased text of the maximal contiguous noun run in ``tokens``.

    The head (last noun of the run) governs number agreement. Raises when the
    run contains no noun.
    """
    run = _best_noun_run(tokens)
    if run is None:
        raise ValueError("token run contains no noun")
    return " ".join(t.normalized for t in run)


def _best_noun_run(tokens: list[Token]) -> list[Token] | None:
    runs = _noun_runs(tokens)
    if not runs:
        return None
    # longest run wins; ties go to the rightmost (heads sit late in English)
    return max(runs, key=lambda r: (len(r), tokens.index(r[0])))


def _noun_runs(tokens: list[Token]) -> list[list[Token]]:
    runs: list[list[Token]] = []
    current: list[Token] = []
    for tok in tokens:
        if tok.pos in NOUN_TAGS:
            current.append(tok)
        elif current:
            runs.append(current)
            current = []
    if current:
        runs.append(current)
    return runs


def _run_span(run: list[Token]) -> Span:
    return (run[0].span[0], run[-1].span[1])


def _run_text(run: list[Token]) -> str:
    return " ".join(t.normalized for t in run)


def _adverb_run_before(tokens: list[Token], i: int) -> list[Token]:
    run = []
    j = i - 1
    while j >= 0 and tokens[j].pos in ADV_TAGS:
        run.insert(0, tokens[j])
        j -= 1
    return run


def _modifier_fields(run: list[Token]) -> tuple[str | None, Span | None]:
    if not run:
        return None, None
    return " ".join(t.normalized for t in run), _run_span(run)


def _adjective_after(tokens: list[Token], i: int) -> tuple[list[Token], int] | None:
    """Optional adverb run then an adjective, starting at position i.

    Returns (adverb_run, adjective_index) or None.
    """
    adv = []
    j = i
    while j < len(tokens) and tokens[j].pos in ADV_TAGS:
        adv.append(tokens[j])
        j += 1
    if j < len(tokens) and tokens[j].pos in ADJ_TAGS:
        return adv, j
    return None


def _noun_run_starting_at(tokens: list[Token], i: int) -> list[Token] | None:
    if i >= len(tokens) or tokens[i].pos not in NOUN_TAGS:
        return None
    run = []
    while i < len(tokens) and tokens[i].pos in NOUN_TAGS:
        run.append(tokens[i])
        i += 1
    return run


def _subject_runs(tokens: list[Token], copula_index: int) -> list[list[Token]]:
    """Noun run(s) ending right before the copula; CC chains distribute."""
    end = copula_index - 1
    if end < 0 or tokens[end].pos not in NOUN_TAGS:
        return []
    runs = []
    while True:
        start = end
        while start - 1 >= 0 and tokens[start - 1].pos in NOUN_TAGS:
            start -= 1
        runs.append(tokens[start:end + 1])
        j = start - 1
        if j >= 0 and tokens[j].pos == "DT":
            j -= 1  # determiner of this conjunct
        if j >= 0 and tokens[j].pos == "CC" and j - 1 >= 0 \
                and tokens[j - 1].pos in NOUN_TAGS:
            end = j - 1
            continue
        break
    runs.reverse()
    return runs


def _is_subject_pronoun(tok: Token) -> bool:
    return tok.normalized in SUBJECT_PRONOUNS and tok.pos in ("PRP", "DT")


def extract_triplets(sentence: Sentence, document_id: str) -> list[InformationComponent]:
    """Apply R1-R4 to one tagged sentence."""
    tokens = sentence.tokens
    found: list[InformationComponent] = []
    seen: set[tuple[Span, Span]] = set()

    def emit(feature_run, modifier_run, opinion_tok, rule_id, placeholder=None):
        if placeholder is not None:
            feature, fspan = placeholder.normalized, placeholder.span
        else:
            feature, fspan = _run_text(feature_run), _run_span(feature_run)
        key = (fspan, opinion_tok.span)
        if key in seen:
            return
        seen.add(key)
        modifier, mspan = _modifier_fields(modifier_run)
        found.append(InformationComponent(
            feature=feature, modifier=modifier, opinion=opinion_tok.normalized,
            document_id=document_id, sentence_index=sentence.index,
            feature_span=fspan, modifier_span=mspan, opinion_span=opinion_tok.span,
            rule_id=rule_id,
        ))

    # R1: NP(s) + copula + [RB] + JJ
    for c, tok in enumerate(tokens):
        if tok.normalized not in COPULAS or tok.pos != "VB":
            continue
        match = _adjective_after(tokens, c + 1)
        if match is None:
            continue
        adv, adj = match
        for run in _subject_runs(tokens, c):
            emit(run, adv, tokens[adj], "R1")

    # R2: [RB] + JJ + NP
    for i, tok in enumerate(tokens):
        if tok.pos not in ADJ_TAGS:
            continue
        run = _noun_run_starting_at(tokens, i + 1)
        if run is None:
            continue
        emit(run, _adverb_run_before(tokens, i), tok, "R2")

    # R3: subject + has/have/"comes with" + [DT] + [RB] + JJ + NP
    for v, tok in enumerate(tokens):
        after = None
        if tok.normalized in POSSESSIVE_VERBS and tok.pos == "VB":
            after = v + 1
        elif (tok.normalized == "comes" and v + 1 < len(tokens)
              and tokens[v + 1].normalized == "with"):
            after = v + 2
        if after is None:
            continue
        if v == 0 or tokens[v - 1].pos not in NOUN_TAGS + ("PRP",):
            continue
        j = after
        if j < len(tokens) and tokens[j].pos == "DT":
            j += 1
        match = _adjective_after(tokens, j)
        if match is None:
            continue
        adv, adj = match
        run = _noun_run_starting_at(tokens, adj + 1)
        if run is None:
            continue
        emit(run, adv, tokens[adj], "R3")

    # R4: subject pronoun + copula + [RB] + JJ -> placeholder
    for c, tok in enumerate(tokens):
        if tok.normalized not in COPULAS or tok.pos != "VB" or c == 0:
            continue
        pron = tokens[c - 1]
        if not _is_subject_pronoun(pron):
            continue
        match = _adjective_after(tokens, c + 1)
        if match is None:
            continue
        adv, adj = match
        emit(None, adv, tokens[adj], "R4", placeholder=pron)

    found.sort(key=lambda ic: (ic.feature_span[0], ic.opinion_span[0]))
    return found


# ---------------------------------------------------------------------------
# anaphora resolution

def _pronoun_number(pronoun: str) -> str:
    return "singular" if pronoun in SINGULAR_PRONOUNS else "plural"


def _head_number(tag: str | None) -> str | None:
    if tag in ("NN", "NNP"):
        return "singular"
    if tag == "NNS":
        return "plural"
    return None


def _component_head_tag(document: ReviewDocument, comp: InformationComponent) -> str | None:
    sent_index = (comp.antecedent_sentence_index
                  if comp.anaphora_resolved else comp.sentence_index)
    sentence = document.sentences[sent_index]
    inside = [t for t in sentence.tokens
              if t.span[0] >= comp.feature_span[0] and t.span[1] <= comp.feature_span[1]]
    return inside[-1].pos if inside else None


def resolve_anaphora(document: ReviewDocument,
                     components: list[InformationComponent],
                     window: int = 2) -> list[InformationComponent]:
    """Bind pronoun placeholders to antecedents in preceding sentences.

    Scans nearest-first up to ``window`` sentences back, preferring noun
    phrases that already appear as features of earlier components and
    falling back to raw noun phrases only when no such feature exists in
    the window. Binding requires number agreement with the candidate's head
    noun; unresolved placeholders are dropped.
    """
    resolved: list[InformationComponent] = []
    for comp in components:
        if comp.rule_id != "R4":
            resolved.append(comp)
            continue
        number = _pronoun_number(comp.feature)
        lo = max(0, comp.sentence_index - window)
        in_window = [c for c in resolved
                     if lo <= c.sentence_index < comp.sentence_index
                     and not c.anaphora_resolved]
        binding = None
        if in_window:
            candidates = sorted(in_window,
                                key=lambda c: (c.sentence_index, c.feature_span[0]),
                                reverse=True)
            for cand in candidates:
                if _head_number(_component_head_tag(document, cand)) == number:
                    binding = (cand.feature, cand.feature_span, cand.sentence_index)
                    break
        else:
            binding = _noun_phrase_fallback(document, comp.sentence_index, lo, number)
        if binding is None:
            continue
        feature, fspan, ante = binding
        resolved.append(replace(
            comp, feature=feature, feature_span=fspan,
            anaphora_resolved=True, antecedent_sentence_index=ante,
        ))
    return resolved


def _noun_phrase_fallback(document: ReviewDocument, sentence_index: int,
                          lo: int, number: str):
    for s in range(sentence_index - 1, lo - 1, -1):
        runs = _noun_runs(document.sentences[s].tokens)
        for run in reversed(runs):
            if _head_number(run[-1].pos) == number:
                return _run_text(run), _run_span(run), s
    return None


def extract_document(document: ReviewDocument,
                     window: int = 2,
                     subjective_only: bool = True) -> list[InformationComponent]:
    """Extract and resolve all components of one document, in reading order."""
    components: list[InformationComponent] = []
    for sentence in document.sentences:
        if subjective_only and sentence.subjectivity != "subjective":
            continue
        components.extend(extract_triplets(sentence, document.id))
    components = resolve_anaphora(document, components, window=window)
    components.sort(key=lambda ic: (ic.sentence_index, ic.feature_span[0], ic.opinion_span[0]))
    return components
