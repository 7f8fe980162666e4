"""Graph isomorphism and canonical certificate tests."""

import itertools
import random

import pytest

from comaximal import (
    CapacityError,
    SimpleGraph,
    are_isomorphic,
    build_comaximal_graph,
    canonical_certificate,
    disjoint_union,
    join,
    refined_colors,
    ring_from_text,
    verify_isomorphism,
)

from oracles import brute_isomorphic


def graph_of(text: str, selector: str = "full") -> SimpleGraph:
    return build_comaximal_graph(ring_from_text(text), selector)


def shuffled(g: SimpleGraph, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    perm = list(range(g.n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return SimpleGraph.from_edges(g.n, edges)


def random_graph(n: int, p: float, seed: int) -> SimpleGraph:
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return SimpleGraph.from_edges(n, edges)


class TestAreIsomorphic:
    def test_size4_local_pair(self):
        witness = are_isomorphic(graph_of("Z/4"), graph_of("Z/2[x]/(x^2)"))
        assert witness is not None

    def test_size8_local_trio(self):
        g_z8 = graph_of("Z/8")
        g_poly = graph_of("Z/2[x]/(x^3)")
        g_sqz = graph_of("SQZ(2,2)")
        assert are_isomorphic(g_z8, g_poly) is not None
        assert are_isomorphic(g_z8, g_sqz) is not None
        synthetic = join(SimpleGraph.complete(4), SimpleGraph.edgeless(4))
        assert are_isomorphic(g_z8, synthetic) is not None

    def test_unit_count_reject(self):
        assert are_isomorphic(graph_of("Z/9"), graph_of("Z/3 x Z/3")) is None

    def test_size16_product_pair(self):
        g_r = graph_of("Z/2 x Z/8")
        g_s = graph_of("Z/4 x Z/4")
        assert are_isomorphic(g_r, g_s) is not None
        synthetic = join(
            disjoint_union(SimpleGraph.complete_multipartite([4, 4]), SimpleGraph.edgeless(4)),
            SimpleGraph.complete(4),
        )
        assert are_isomorphic(g_r, synthetic) is not None
        core = graph_of("Z/2 x Z/8", "core")
        assert are_isomorphic(core, SimpleGraph.complete_multipartite([4, 4])) is not None

    def test_witness_verified(self):
        g1 = graph_of("Z/30", "core")
        g2 = shuffled(g1, seed=7)
        witness = are_isomorphic(g1, g2)
        assert witness is not None
        assert verify_isomorphism(g1, g2, witness)

    def test_relabeling_invariance(self):
        for text in ("Z/12", "Z/30", "Z/2 x Z/8"):
            g = graph_of(text)
            for seed in (1, 2, 3):
                assert are_isomorphic(g, shuffled(g, seed)) is not None

    def test_matches_bruteforce_on_random_pairs(self):
        cases = []
        for seed in range(12):
            cases.append((random_graph(6, 0.4, seed), random_graph(6, 0.4, seed + 100)))
        for seed in range(6):
            g = random_graph(6, 0.5, seed + 200)
            cases.append((g, shuffled(g, seed)))
        for g1, g2 in cases:
            got = are_isomorphic(g1, g2)
            expected = brute_isomorphic(g1, g2)
            assert (got is not None) == expected
            if got is not None:
                assert verify_isomorphism(g1, g2, got)

    def test_same_degree_sequence_different_graphs(self):
        g1 = disjoint_union(
            SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]),
            SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)]),
        )
        g2 = SimpleGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
        assert are_isomorphic(g1, g2) is None

    def test_cap(self):
        g = SimpleGraph.edgeless(10)
        with pytest.raises(CapacityError):
            are_isomorphic(g, g, cap=5)

    def test_empty_graphs(self):
        assert are_isomorphic(SimpleGraph.edgeless(0), SimpleGraph.edgeless(0)) == ()


class TestVerifyIsomorphism:
    def test_accepts_identity(self):
        g = graph_of("Z/12")
        assert verify_isomorphism(g, g, list(range(g.n)))

    def test_rejects_wrong_map(self):
        g = SimpleGraph.from_edges(3, [(0, 1)])
        h = SimpleGraph.from_edges(3, [(1, 2)])
        assert verify_isomorphism(g, h, [0, 1, 2]) is False
        assert verify_isomorphism(g, h, [1, 2, 0])

    def test_rejects_non_bijection(self):
        g = SimpleGraph.edgeless(3)
        assert verify_isomorphism(g, g, [0, 0, 1]) is False


class TestRefinement:
    def test_distinguishes_degrees(self):
        g = SimpleGraph.complete_multipartite([1, 3])
        colors = refined_colors(g)
        assert colors[0] != colors[1]
        assert colors[1] == colors[2] == colors[3]

    def test_regular_graph_single_class(self):
        g = SimpleGraph.complete(5)
        assert len(set(refined_colors(g))) == 1


class TestCertificates:
    def test_triangle_orderings(self):
        base = SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        for perm in itertools.permutations(range(3)):
            edges = [(perm[u], perm[v]) for u, v in base.edges()]
            assert canonical_certificate(SimpleGraph.from_edges(3, edges)) == canonical_certificate(base)

    def test_size4_local_pair_certificates(self):
        synthetic = join(SimpleGraph.complete(2), SimpleGraph.edgeless(2))
        assert canonical_certificate(graph_of("Z/4")) == canonical_certificate(synthetic)
        assert canonical_certificate(graph_of("Z/2[x]/(x^2)")) == canonical_certificate(synthetic)

    def test_star_vs_triangle(self):
        star = SimpleGraph.complete_multipartite([1, 2])
        triangle = SimpleGraph.complete(3)
        assert canonical_certificate(star) != canonical_certificate(triangle)

    def test_agrees_with_are_isomorphic(self):
        graphs = [random_graph(7, 0.4, s) for s in range(10)]
        graphs += [shuffled(graphs[0], 5), shuffled(graphs[3], 6)]
        for g1 in graphs:
            for g2 in graphs:
                same_cert = canonical_certificate(g1) == canonical_certificate(g2)
                assert same_cert == (are_isomorphic(g1, g2) is not None)

    def test_cap(self):
        with pytest.raises(CapacityError):
            canonical_certificate(SimpleGraph.edgeless(65))

    def test_deterministic(self):
        g = graph_of("Z/30", "core")
        assert canonical_certificate(g) == canonical_certificate(g)
