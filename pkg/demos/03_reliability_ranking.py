"""Hub scores and reliability ratios for feature-opinion pairs.

Pairs are hubs, review documents are authorities; the power iteration
rewards pairs that recur across documents, and reliability rescales hub
scores so each product partition tops out at exactly 1.0.
"""

import numpy as np

from reviewforge.reliability import (
    BipartiteGraph, prune_noisy_pairs, reliability_scores, run_hits,
)

# (camera, great) appears in three documents; the others in one each
pairs = [("camera", "great"), ("camera", "cheap"), ("screen", "wonderful"),
         ("photo", "good"), ("manual", "useless")]
docs = ["d1", "d2", "d3"]
incidence = [{0: 1.0, 1: 1.0, 2: 1.0}, {0: 1.0}, {1: 1.0}, {1: 1.0}, {2: 1.0}]
graph = BipartiteGraph(pairs, docs, incidence)

result = run_hits(graph, epsilon=1e-8)
print(f"converged in {result.iterations} iterations "
      f"(hub vector norm {np.linalg.norm(result.hub):.6f})")

scored = reliability_scores(graph.pairs, result.hub, "digital camera")
for p in sorted(scored, key=lambda p: -p.reliability):
    bar = "#" * int(round(30 * p.reliability))
    print(f"  {p.feature:8} {p.opinion:10} hub={p.hub_score:.4f} "
          f"reliability={p.reliability:.2f} {bar}")

kept = prune_noisy_pairs(scored, threshold=0.3)
print(f"\npruning at 0.3 keeps {len(kept)} of {len(scored)} pairs")

# the converged hub direction is the principal eigenvector of W W^T
w = graph.matrix()
values, vectors = np.linalg.eigh(w @ w.T)
principal = np.abs(vectors[:, np.argmax(values)])
print(f"cosine vs principal eigenvector: {float(result.hub @ principal):.8f}")
