"""Feasibility analysis: feature-opinion pairs vs. review documents as a
bipartite graph, hub scores via HITS power iteration, reliability as the
within-partition ratio to the maximum hub score, and pruning of noisy pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .extraction import InformationComponent

Pair = tuple[str, str]


@dataclass
class BipartiteGraph:
    pairs: list[Pair]                      # hub side
    documents: list[str]                   # authority side
    incidence: list[dict[int, float]]      # per pair: doc index -> weight

    def matrix(self) -> np.ndarray:
        w = np.zeros((len(self.pairs), len(self.documents)))
        for i, edges in enumerate(self.incidence):
            for j, weight in edges.items():
                w[i, j] = weight
        return w


@dataclass
class HitsResult:
    hub: np.ndarray
    authority: np.ndarray
    iterations: int
    converged: bool
    trace: list[tuple[np.ndarray, np.ndarray]] = field(default_factory=list)


@dataclass
class ScoredPair:
    feature: str
    opinion: str
    hub_score: float
    reliability: float
    product_domain: str


def build_bipartite_graph(components: list[InformationComponent]) -> BipartiteGraph:
    """Edges weighted by pair occurrence count per document."""
    pairs: list[Pair] = []
    pair_index: dict[Pair, int] = {}
    documents: list[str] = []
    doc_index: dict[str, int] = {}
    incidence: list[dict[int, float]] = []
    for comp in components:
        pair = comp.pair
        if pair not in pair_index:
            pair_index[pair] = len(pairs)
            pairs.append(pair)
            incidence.append({})
        if comp.document_id not in doc_index:
            doc_index[comp.document_id] = len(documents)
            documents.append(comp.document_id)
        edges = incidence[pair_index[pair]]
        j = doc_index[comp.document_id]
        edges[j] = edges.get(j, 0.0) + 1.0
    return BipartiteGraph(pairs, documents, incidence)


def run_hits(graph: BipartiteGraph, epsilon: float = 1e-6,
             max_iter: int = 100, collect_trace: bool = False) -> HitsResult:
    """Power iteration from a uniform hub vector.

    Each round: authority <- W^T hub, hub <- W authority, both L2-normalized.
    Stops when the max absolute hub change drops below epsilon; if max_iter
    is hit first the result carries converged=False.
    """
    if not graph.pairs:
        raise ValueError("graph has no pairs")
    if epsilon <= 0:
        raise ValueError("epsilon must be > 0")
    w = graph.matrix()
    n = len(graph.pairs)
    hub = np.full(n, 1.0 / np.sqrt(n))
    authority = np.zeros(len(graph.documents))
    trace = []
    converged = False
    iterations = 0
    for iterations in range(1, max_iter + 1):
        prev = hub
        authority = w.T @ hub
        norm = np.linalg.norm(authority)
        if norm > 0:
            authority = authority / norm
        hub = w @ authority
        norm = np.linalg.norm(hub)
        if norm > 0:
            hub = hub / norm
        if collect_trace:
            trace.append((hub.copy(), authority.copy()))
        if np.max(np.abs(hub - prev)) < epsilon:
            converged = True
            break
    return HitsResult(hub, authority, iterations, converged, trace)


def reliability_scores(pairs: list[Pair], hub, domains) -> list[ScoredPair]:
    """Normalize hub scores to reliability ratios within each domain.

    ``domains`` is either one domain name for all pairs or a per-pair list.
    The per-partition maximum maps to exactly 1.0.
    """
    hub = np.asarray(hub, dtype=float)
    if isinstance(domains, str):
        domains = [domains] * len(pairs)
    by_domain: dict[str, float] = {}
    for score, domain in zip(hub, domains):
        by_domain[domain] = max(by_domain.get(domain, 0.0), float(score))
    scored = []
    for pair, score, domain in zip(pairs, hub, domains):
        peak = by_domain[domain]
        if peak <= 0:
            continue
        scored.append(ScoredPair(pair[0], pair[1], float(score),
                                 float(score) / peak, domain))
    return scored


def prune_noisy_pairs(scored: list[ScoredPair], threshold: float = 0.1) -> list[ScoredPair]:
    """Keep pairs with reliability >= threshold, strongest first."""
    kept = [p for p in scored if p.reliability >= threshold]
    kept.sort(key=lambda p: (-p.reliability, p.feature, p.opinion))
    return kept
