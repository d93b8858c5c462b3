import numpy as np
import pytest

from reviewforge.extraction import InformationComponent
from reviewforge.reliability import (
    BipartiteGraph, build_bipartite_graph, prune_noisy_pairs,
    reliability_scores, run_hits,
)


def comp(feature, opinion, doc):
    return InformationComponent(
        feature=feature, modifier=None, opinion=opinion, document_id=doc,
        sentence_index=0, feature_span=(0, 1), modifier_span=None,
        opinion_span=(2, 3), rule_id="R1")


class TestGraph:
    def test_single_component(self):
        g = build_bipartite_graph([comp("camera", "great", "d1")])
        assert g.pairs == [("camera", "great")]
        assert g.documents == ["d1"]
        assert g.incidence == [{0: 1.0}]

    def test_same_pair_three_documents(self):
        g = build_bipartite_graph([comp("camera", "great", d)
                                   for d in ("d1", "d2", "d3")])
        assert len(g.pairs) == 1
        assert len(g.incidence[0]) == 3

    def test_distinct_opinions_distinct_pairs(self):
        g = build_bipartite_graph([comp("camera", "great", "d1"),
                                   comp("camera", "blurry", "d1")])
        assert len(g.pairs) == 2

    def test_repeats_accumulate_weight(self):
        g = build_bipartite_graph([comp("camera", "great", "d1"),
                                   comp("camera", "great", "d1")])
        assert g.incidence[0] == {0: 2.0}

    def test_empty(self):
        g = build_bipartite_graph([])
        assert g.pairs == [] and g.documents == []


def two_pair_graph(scale=1.0):
    # p1 in {d1, d2}, p2 in {d1}
    return BipartiteGraph([("a", "x"), ("b", "y")], ["d1", "d2"],
                          [{0: scale, 1: scale}, {0: scale}])


class TestHits:
    def test_single_pair_single_document(self):
        g = BipartiteGraph([("a", "x")], ["d1"], [{0: 1.0}])
        res = run_hits(g)
        assert res.hub == pytest.approx([1.0])
        assert res.authority == pytest.approx([1.0])
        assert res.converged

    def test_two_pair_eigenvector(self):
        res = run_hits(two_pair_graph())
        assert res.hub == pytest.approx([0.8507, 0.5257], abs=1e-4)
        assert res.converged

    def test_scale_invariance(self):
        h1 = run_hits(two_pair_graph(1.0)).hub
        h10 = run_hits(two_pair_graph(10.0)).hub
        assert h1 == pytest.approx(h10, abs=1e-9)

    def test_unit_norm_and_nonnegative_every_iteration(self):
        res = run_hits(two_pair_graph(), collect_trace=True)
        assert res.trace
        for hub, authority in res.trace:
            assert np.linalg.norm(hub) == pytest.approx(1.0, abs=1e-12)
            assert np.linalg.norm(authority) == pytest.approx(1.0, abs=1e-12)
            assert (hub >= 0).all() and (authority >= 0).all()

    def test_fixed_point_after_convergence(self):
        g = two_pair_graph()
        eps = 1e-8
        res = run_hits(g, epsilon=eps)
        w = g.matrix()
        a = w.T @ res.hub
        a /= np.linalg.norm(a)
        h = w @ a
        h /= np.linalg.norm(h)
        assert np.max(np.abs(h - res.hub)) < eps

    def test_non_converged_flag(self):
        res = run_hits(two_pair_graph(), epsilon=1e-12, max_iter=1)
        assert not res.converged
        assert res.iterations == 1

    def test_matches_principal_eigenvector(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            n, m = rng.integers(2, 7), rng.integers(2, 7)
            w = np.where(rng.random((n, m)) < 0.6, rng.uniform(0.5, 2.0, (n, m)), 0.0)
            w[:, 0] = np.maximum(w[:, 0], 0.1)  # no isolated pair
            g = BipartiteGraph([("f%d" % i, "o") for i in range(n)],
                               ["d%d" % j for j in range(m)],
                               [{j: w[i, j] for j in range(m) if w[i, j] > 0}
                                for i in range(n)])
            res = run_hits(g, epsilon=1e-12, max_iter=500)
            vals, vecs = np.linalg.eigh(w @ w.T)
            principal = np.abs(vecs[:, np.argmax(vals)])
            cosine = float(res.hub @ principal)
            assert 1.0 - cosine < 1e-4

    def test_superset_incidence_never_lower_hub(self):
        rng = np.random.default_rng(5)
        for _ in range(5):
            m = int(rng.integers(3, 7))
            docs_b = sorted(rng.choice(m, size=2, replace=False).tolist())
            docs_a = sorted(set(docs_b) | {int(rng.integers(0, m))})
            others = [{int(j): 1.0 for j in
                       rng.choice(m, size=int(rng.integers(1, m)), replace=False)}
                      for _ in range(3)]
            incidence = [{j: 1.0 for j in docs_a}, {j: 1.0 for j in docs_b}] + others
            g = BipartiteGraph([("p%d" % i, "o") for i in range(len(incidence))],
                               ["d%d" % j for j in range(m)], incidence)
            res = run_hits(g, epsilon=1e-12, max_iter=500)
            assert res.hub[0] >= res.hub[1] - 1e-12

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            run_hits(BipartiteGraph([], [], []))


class TestReliability:
    def test_ratio_normalization_printed_scores(self):
        pairs = [("camera", "great"), ("picture", "beautiful")]
        scored = reliability_scores(pairs, [18.11, 7.16], "digital camera")
        assert scored[0].reliability == 1.0
        assert scored[1].reliability == pytest.approx(0.39, abs=0.01)

    def test_second_partition(self):
        pairs = [("phone", "thin"), ("os", "tricky")]
        scored = reliability_scores(pairs, [5.70, 2.25], "cell phone")
        assert scored[1].reliability == pytest.approx(0.39, abs=0.01)

    def test_single_pair_partition(self):
        scored = reliability_scores([("a", "b")], [0.37], "laptop")
        assert scored[0].reliability == 1.0

    def test_partition_max_exactly_one(self):
        scored = reliability_scores(
            [("a", "x"), ("b", "y"), ("c", "z")], [0.2, 0.7, 0.3],
            ["g1", "g1", "g2"])
        by_domain = {}
        for p in scored:
            by_domain.setdefault(p.product_domain, []).append(p.reliability)
        for values in by_domain.values():
            assert max(values) == 1.0

    def test_scale_invariance_of_ratios(self):
        pairs = [("a", "x"), ("b", "y")]
        r1 = reliability_scores(pairs, [0.8, 0.2], "g")
        r2 = reliability_scores(pairs, [8.0, 2.0], "g")
        assert [p.reliability for p in r1] == pytest.approx(
            [p.reliability for p in r2], abs=1e-12)


class TestPrune:
    def make(self, values):
        return reliability_scores(
            [("f%d" % i, "o%d" % i) for i in range(len(values))], values, "g")

    def test_threshold_zero_keeps_all(self):
        scored = self.make([18.11, 7.16, 7.76, 6.30, 5.78])
        assert len(prune_noisy_pairs(scored, 0.0)) == 5

    def test_threshold_one_keeps_maxima(self):
        scored = self.make([18.11, 7.16, 7.76, 6.30, 5.78])
        kept = prune_noisy_pairs(scored, 1.0)
        assert len(kept) == 1
        assert kept[0].reliability == 1.0

    def test_table_values_at_point_three_and_four(self):
        scored = self.make([18.11, 7.16, 7.76, 6.30, 5.78])
        assert len(prune_noisy_pairs(scored, 0.3)) == 5
        assert len(prune_noisy_pairs(scored, 0.4)) == 2

    def test_descending_order(self):
        scored = self.make([1.0, 5.0, 3.0, 4.0])
        kept = prune_noisy_pairs(scored, 0.0)
        rel = [p.reliability for p in kept]
        assert rel == sorted(rel, reverse=True)
