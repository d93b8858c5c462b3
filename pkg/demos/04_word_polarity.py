"""Statistical polarity scores and the bagged-tree word classifier.

Four association measures over one word/class contingency table, the zero
convention for words that never co-occur with either class, and polarity
prediction from the score vector.
"""

from reviewforge.sentiment import (
    ContingencyTable, SentimentVector, chi_square_score, classify_polarity,
    llr_score, mi_score, pmi_score, train_sentiment,
)

# word seen 8x in positive contexts, 2x in negative (of 50 tokens each)
table = ContingencyTable(8, 2, 42, 48)
print("table (8, 2, 42, 48):")
print(f"  pmi={pmi_score(table):+.4f}  mi={mi_score(table):+.4f}"
      f"  chi={chi_square_score(table):+.4f}  llr={llr_score(table):+.4f}")

mirrored = table.swapped()
print("class-swapped table negates every score:")
print(f"  pmi={pmi_score(mirrored):+.4f}  chi={chi_square_score(mirrored):+.4f}")

absent = ContingencyTable(0, 0, 50, 50)
print("no co-occurrence with either class -> all scores exactly zero:")
print(f"  pmi={pmi_score(absent):.4f}  mi={mi_score(absent):.4f}"
      f"  chi={chi_square_score(absent):.4f}  llr={llr_score(absent):.4f}")

# a tiny training set: sign-separable positive/negative plus zero-score
# neutral words, the same shape the pipeline builds from a labeled corpus
samples = []
for k in range(1, 11):
    samples.append((SentimentVector(0.2 * k, 8.0 * k, 40.0 * k, 12.0 * k,
                                    False, 1.0, False), "positive"))
    samples.append((SentimentVector(-0.2 * k, -8.0 * k, -40.0 * k, -12.0 * k,
                                    False, 1.0, False), "negative"))
    samples.append((SentimentVector(0, 0, 0, 0, False, 1.0, False), "neutral"))

model = train_sentiment(samples, bags=10, seed=42)
probes = {
    "amazing-like": SentimentVector(2.3403, 172.7484, 1177.2141, 340.0, False, 1.0, False),
    "bad-like": SentimentVector(-0.7344, -109.3725, -850.0066, -250.0, False, 1.0, False),
    "bittersweet-like": SentimentVector(0.0, 0.0, 0.0, 0.0, False, 1.0, False),
}
print("\nclassifier predictions:")
for name, vector in probes.items():
    print(f"  {name:17} -> {classify_polarity(model, vector)}")
