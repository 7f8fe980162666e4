"""Property-based checks over randomly generated rings and graphs."""

import math

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from comaximal import (
    SimpleGraph,
    are_isomorphic,
    build_comaximal_graph,
    build_ring,
    canonical_certificate,
    chromatic_number,
    clique_number,
    format_expression,
    parse_expression,
    ring_from_text,
)

from oracles import brute_chromatic, brute_clique, brute_diameter, zn_comaximal, zn_unit

settings.register_profile(
    "suite", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")

moduli = st.integers(min_value=2, max_value=96)
small_moduli = st.integers(min_value=2, max_value=24)


def random_graph_strategy(max_n):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.tuples(
            st.just(n),
            st.sets(
                st.tuples(
                    st.integers(0, n - 1), st.integers(0, n - 1)
                ).filter(lambda p: p[0] < p[1]),
            ),
        )
    )


class TestRingProperties:
    @given(moduli)
    def test_zn_units_match_gcd(self, n):
        ring = ring_from_text(f"Z/{n}")
        assert ring.units == frozenset(a for a in range(n) if zn_unit(a, n))

    @given(small_moduli, small_moduli)
    def test_product_arithmetic(self, n, m):
        ring = ring_from_text(f"Z/{n} x Z/{m}")
        assert ring.size == n * m
        assert ring.characteristic == (n * m) // math.gcd(n, m)

    @given(moduli, st.data())
    def test_zn_comaximal_matches_gcd(self, n, data):
        ring = ring_from_text(f"Z/{n}")
        a = data.draw(st.integers(0, n - 1))
        b = data.draw(st.integers(0, n - 1))
        assert ring.is_comaximal(a, b) == zn_comaximal(a, b, n)

    @given(small_moduli, st.data())
    def test_signature_matches_closure(self, n, data):
        ring = ring_from_text(f"Z/{n}")
        a = data.draw(st.integers(0, n - 1))
        b = data.draw(st.integers(0, n - 1))
        assert ring.is_comaximal(a, b) == ring.is_comaximal_via_closure(a, b)

    @given(small_moduli)
    def test_quotient_size_law(self, n):
        ring = ring_from_text(f"Z/{n}")
        radical = ring.jacobson_radical
        quotient, projection = ring.quotient(radical)
        assert quotient.size * len(radical) == ring.size
        assert projection.verify()

    @given(small_moduli)
    def test_radical_is_unit_shifter(self, n):
        ring = ring_from_text(f"Z/{n}")
        for j in ring.jacobson_radical.members():
            assert all(
                ring.is_unit(ring.sub(ring.one, ring.mul(j, r)))
                for r in range(ring.size)
            )


class TestParserProperties:
    @given(st.integers(min_value=2, max_value=10**6))
    def test_zn_round_trip(self, n):
        text = f"Z/{n}"
        assert format_expression(parse_expression(text)) == text

    @given(st.lists(st.sampled_from(["Z/2", "Z/3", "Z/4", "GF(4)", "SQZ(2,2)"]),
                    min_size=1, max_size=4))
    def test_product_round_trip(self, parts):
        text = " x ".join(parts)
        expr = parse_expression(text)
        assert parse_expression(format_expression(expr)) == expr


class TestGraphProperties:
    @given(random_graph_strategy(7))
    def test_exact_solvers_match_brute_force(self, spec):
        n, edges = spec
        g = SimpleGraph.from_edges(n, sorted(edges))
        assert clique_number(g) == brute_clique(g)
        assert chromatic_number(g) == brute_chromatic(g)

    @given(random_graph_strategy(8))
    def test_diameter_matches_brute_force(self, spec):
        n, edges = spec
        g = SimpleGraph.from_edges(n, sorted(edges))
        from comaximal import metrics

        assert metrics(g).diameter == brute_diameter(g)

    @given(random_graph_strategy(7), st.randoms(use_true_random=False))
    def test_certificate_invariant_under_relabeling(self, spec, rng):
        n, edges = spec
        g = SimpleGraph.from_edges(n, sorted(edges))
        perm = list(range(n))
        rng.shuffle(perm)
        shuffled = SimpleGraph.from_edges(
            n, sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges())
        )
        assert canonical_certificate(g) == canonical_certificate(shuffled)
        mapping = are_isomorphic(g, shuffled)
        assert mapping is not None
        from comaximal import verify_isomorphism

        assert verify_isomorphism(g, shuffled, mapping)

    @given(random_graph_strategy(6), random_graph_strategy(6))
    def test_certificate_equality_decides_isomorphism(self, spec_a, spec_b):
        na, ea = spec_a
        nb, eb = spec_b
        ga = SimpleGraph.from_edges(na, sorted(ea))
        gb = SimpleGraph.from_edges(nb, sorted(eb))
        same_cert = canonical_certificate(ga) == canonical_certificate(gb)
        verdict = are_isomorphic(ga, gb)
        assert same_cert == (verdict is not None)


class TestComaximalGraphProperties:
    @given(small_moduli)
    def test_units_section_is_complete_with_apex(self, n):
        ring = ring_from_text(f"Z/{n}")
        g = build_comaximal_graph(ring, "units")
        k = len(ring.units)
        assert g.n == k
        assert g.edge_count == k * (k - 1) // 2

    @given(small_moduli)
    def test_full_graph_edge_split(self, n):
        ring = ring_from_text(f"Z/{n}")
        full = build_comaximal_graph(ring, "full")
        units = build_comaximal_graph(ring, "units")
        nonunits = build_comaximal_graph(ring, "nonunits")
        k = len(ring.units)
        cross = k * (ring.size - k)
        assert full.edge_count == units.edge_count + nonunits.edge_count + cross

    @given(small_moduli)
    def test_radical_vertices_isolated_among_nonunits(self, n):
        ring = ring_from_text(f"Z/{n}")
        g = build_comaximal_graph(ring, "nonunits")
        keys = g.vertex_keys
        radical = set(ring.jacobson_radical.members())
        for i, key in enumerate(keys):
            if key in radical:
                assert g.rows[i] == 0
