"""From raw review text to (feature, modifier, opinion) triplets.

Walks one review through the substrate: sentence splitting, tokenization,
tagging, rule-based extraction, and pronoun resolution.
"""

from reviewforge.extraction import extract_document, extract_triplets, resolve_anaphora
from reviewforge.textcore import build_document

BODY = ("The camera is great. It is very cheap. "
        "The screen and keyboard are great. I bought it yesterday.")

doc = build_document({"id": "demo", "body": BODY, "domain": "digital camera"})

print("sentences and tags")
for sent in doc.sentences:
    text = doc.body[sent.span[0]:sent.span[1]]
    print(f"  [{sent.index}] {text}")
    print("      " + " ".join(f"{t.surface}/{t.pos}" for t in sent.tokens))

# raw rule matches still carry pronoun placeholders ("it", "they")
raw = []
for sent in doc.sentences:
    raw.extend(extract_triplets(sent, doc.id))
print("\nraw rule matches")
for c in raw:
    print(f"  {c.rule_id}: ({c.feature}, {c.modifier or '-'}, {c.opinion})")

# backtracking resolution binds "It is very cheap." to the camera
resolved = resolve_anaphora(doc, raw)
print("\nafter anaphora resolution")
for c in resolved:
    note = f"  <- antecedent sentence {c.antecedent_sentence_index}" \
        if c.anaphora_resolved else ""
    print(f"  ({c.feature}, {c.modifier or '-'}, {c.opinion}){note}")

# the one-call version used by the pipeline
assert extract_document(doc, subjective_only=False) == sorted(
    resolved, key=lambda c: (c.sentence_index, c.feature_span[0], c.opinion_span[0]))
