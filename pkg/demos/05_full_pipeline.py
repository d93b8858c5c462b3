"""The whole pipeline on the shipped 6-review corpus, then a look inside
the persisted snapshot: summaries, highlights, and the component export.

Run `reviewforge serve --store-path <dir>` afterwards to browse the same
snapshot over HTTP (or `python -m reviewforge.cli serve ...`).
"""

import tempfile
from pathlib import Path

from reviewforge.pipeline import PipelineConfig, run_pipeline
from reviewforge.summary import (
    aggregate_feature_summary, aggregate_review_summary, export_text,
    snippet_highlights,
)

FIXTURES = Path(__file__).resolve().parents[1] / "data" / "fixtures"

workdir = Path(tempfile.mkdtemp(prefix="reviewforge-demo-"))
config = PipelineConfig(
    input_path=str(FIXTURES / "reviews.jsonl"),
    subjectivity_training=str(FIXTURES / "subjectivity_train.tsv"),
    store_path=str(workdir / "store"),
    seed=42,
)
store = run_pipeline(config)
print(f"snapshot {store.snapshot_id[:16]}... in {config.store_path}")
print(f"documents={len(store.documents)} retained pairs={len(store.pairs)} "
      f"components={len(store.components)}")

print("\nper-review opinion counts (blue/red/green pie data)")
for doc in store.documents:
    s = aggregate_review_summary(store, doc.id)
    print(f"  {doc.id}: +{s.positive_count} -{s.negative_count} ~{s.neutral_count}"
          f"   [{doc.title}]")

print("\nfeature drill-down: camera")
summary = aggregate_feature_summary(store, "camera")
pos, neg, neu = summary.percentages
print(f"  {summary.positive_count}+ {summary.negative_count}- "
      f"{summary.neutral_count}~  ({pos:.0f}% / {neg:.0f}% / {neu:.0f}%)")
print("  chi-square score slices (drive the expanded pie):")
for opinion, magnitude, orientation in summary.score_slices:
    print(f"    {opinion:10} |chi|={magnitude:8.4f} {orientation}")

print("\nhighlight spans for r1 (orange=feature, yellow=opinion)")
body = store.document("r1").body
for row in snippet_highlights(store, "r1"):
    print(f"  {row['role']:8} {str((row['start'], row['end'])):10} "
          f"{body[row['start']:row['end']]!r}")

print("\nfirst export object (fixed 4-decimal serialization)")
print(export_text(store)[:export_text(store).index("},") + 2])
