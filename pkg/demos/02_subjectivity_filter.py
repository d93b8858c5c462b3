"""Training and applying the subjective/objective sentence filter.

A smoothed unigram Bayes model: factual sentences ("shipped monday") drop
out of the pipeline, opinionated ones ("the camera is great") pass through.
"""

from pathlib import Path

from reviewforge.subjectivity import (
    classify_sentence, cross_validate, filter_subjective, parse_training_file,
    train_subjectivity,
)
from reviewforge.textcore import build_document

FIXTURES = Path(__file__).resolve().parents[1] / "data" / "fixtures"

training = parse_training_file(FIXTURES / "subjectivity_train.tsv")
model = train_subjectivity(training, alpha=1.0)

print(f"vocabulary: {len(model.vocabulary)} words, "
      f"priors: {model.class_priors}")

for text in ("the lens is great", "the box arrived on monday",
             "speaker quality is very bad"):
    label, p = classify_sentence(model, text.split())
    print(f"  {text!r:42} -> {label} ({p:.3f})")

# stratified cross-validation on the training file itself
metrics = cross_validate(training, k=5, seed=0)
print(f"\n5-fold CV accuracy on the fixture training set: {metrics.accuracy:.2f}")
for cls, m in metrics.per_class.items():
    print(f"  {cls:11} precision={m.precision:.2f} recall={m.recall:.2f} f1={m.f1:.2f}")

# corpus filtering marks every sentence; extraction only reads subjective ones
doc = build_document({"id": "d", "body": "The camera is great. I bought it yesterday."})
labeled = filter_subjective([doc], model)[0]
print("\nfiltered document")
for sent in labeled.sentences:
    text = labeled.body[sent.span[0]:sent.span[1]]
    print(f"  {sent.subjectivity:10} {sent.subjectivity_score:.3f}  {text}")
