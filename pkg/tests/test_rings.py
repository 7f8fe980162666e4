"""Ring kernel tests against hand-derived and brute-force values."""

import numpy as np
import pytest

from comaximal import (
    CapacityError,
    IdealSet,
    RingAxiomError,
    direct_product,
    maximal_ideals_bruteforce,
    ring_from_text,
    ring_isomorphic,
    validate_ring_axioms,
)
from comaximal.rings import RingTable

from oracles import zn_comaximal, zn_unit


def zn(n: int) -> RingTable:
    return ring_from_text(f"Z/{n}")


class TestArithmetic:
    def test_z12_samples(self):
        r = zn(12)
        assert r.add(7, 8) == 3
        assert r.mul(4, 9) == 0
        assert r.neg(5) == 7
        assert r.sub(3, 7) == 8

    def test_index_bounds(self):
        r = zn(6)
        with pytest.raises(ValueError):
            r.add(0, 6)
        with pytest.raises(ValueError):
            r.mul(-1, 2)

    def test_rows_match_scalars(self):
        r = zn(9)
        for a in range(9):
            assert list(r.add_row(a)) == [r.add(a, b) for b in range(9)]
            assert list(r.mul_row(a)) == [r.mul(a, b) for b in range(9)]

    def test_constructor_rejects_degenerate(self):
        with pytest.raises(ValueError):
            RingTable(1, 0, [0], [0])
        with pytest.raises(ValueError):
            RingTable(2, 0, [0, 1, 1, 0], [0, 0, 0, 1])


class TestUnits:
    def test_z12(self):
        assert sorted(zn(12).units) == [1, 5, 7, 11]

    def test_every_zn_matches_gcd(self):
        for n in range(2, 40):
            r = zn(n)
            for a in range(n):
                assert r.is_unit(a) == zn_unit(n, a)

    def test_field_units(self):
        gf4 = ring_from_text("GF(4)")
        assert gf4.unit_count == 3

    def test_product_units(self):
        r = ring_from_text("Z/2 x Z/8")
        assert sorted(r.units) == [9, 11, 13, 15]


class TestIdeals:
    def test_closure_z12(self):
        r = zn(12)
        assert sorted(r.ideal_closure([4]).members()) == [0, 4, 8]
        assert len(r.ideal_closure([4, 3])) == 12

    def test_closure_zero(self):
        r = zn(10)
        assert r.ideal_closure([0]).members() == (0,)

    def test_closure_empty_rejected(self):
        with pytest.raises(ValueError):
            zn(6).ideal_closure([])

    def test_principal_ideal(self):
        r = zn(12)
        assert sorted(r.principal_ideal(3).members()) == [0, 3, 6, 9]

    def test_is_ideal(self):
        r = zn(12)
        good = IdealSet(12, sum(1 << x for x in (0, 6)))
        bad = IdealSet(12, sum(1 << x for x in (0, 5)))
        assert r.is_ideal(good)
        assert not r.is_ideal(bad)


class TestComaximality:
    def test_z12_samples(self):
        r = zn(12)
        assert r.is_comaximal(4, 3)
        assert not r.is_comaximal(2, 4)
        assert r.is_comaximal(5, 2)

    def test_diagonal_is_unit_test(self):
        r = zn(12)
        for a in range(12):
            assert r.is_comaximal(a, a) == r.is_unit(a)

    def test_signature_path_equals_closure_oracle(self):
        for text in ("Z/24", "Z/30", "Z/2 x Z/9", "SQZ(2,2)", "GF(8)"):
            r = ring_from_text(text)
            for a in range(r.size):
                for b in range(r.size):
                    assert r.is_comaximal(a, b) == r.is_comaximal_via_closure(a, b)

    def test_zn_gcd_oracle(self):
        for n in (12, 30, 36):
            r = zn(n)
            for a in range(n):
                for b in range(n):
                    assert r.is_comaximal(a, b) == zn_comaximal(n, a, b)


class TestJacobsonRadical:
    def test_known_values(self):
        assert sorted(zn(12).jacobson_radical.members()) == [0, 6]
        assert sorted(zn(4).jacobson_radical.members()) == [0, 2]
        assert sorted(ring_from_text("Z/2 x Z/8").jacobson_radical.members()) == [0, 2, 4, 6]

    def test_equals_intersection_of_maximals(self):
        for text in ("Z/12", "Z/30", "Z/16", "Z/2 x Z/4", "SQZ(3,1)"):
            r = ring_from_text(text)
            meet = (1 << r.size) - 1
            for m in r.maximal_ideals:
                meet &= m.mask
            assert r.jacobson_radical.mask == meet

    def test_reduced_iff_trivial_radical(self):
        assert zn(30).is_reduced
        assert len(zn(30).jacobson_radical) == 1
        assert not zn(12).is_reduced


class TestIdempotentsAndNilpotents:
    def test_known_values(self):
        assert zn(12).idempotent_elements == (0, 1, 4, 9)
        assert zn(4).idempotent_elements == (0, 1)
        assert zn(6).idempotent_elements == (0, 1, 3, 4)

    def test_nilpotents(self):
        assert zn(12).nilpotent_elements == (0, 6)
        assert zn(8).nilpotent_elements == (0, 2, 4, 6)
        assert zn(30).nilpotent_elements == (0,)


class TestMaximalIdeals:
    def test_z12(self):
        r = zn(12)
        members = sorted(sorted(m.members()) for m in r.maximal_ideals)
        assert members == [[0, 2, 4, 6, 8, 10], [0, 3, 6, 9]]

    def test_field_single_zero_ideal(self):
        gf4 = ring_from_text("GF(4)")
        assert [m.members() for m in gf4.maximal_ideals] == [(0,)]

    def test_z30_count(self):
        assert zn(30).maximal_ideal_count == 3

    def test_agrees_with_bruteforce(self):
        for text in ("Z/12", "Z/30", "Z/27", "Z/2 x Z/2 x Z/3", "SQZ(2,2)", "GF(9)"):
            r = ring_from_text(text)
            fast = sorted(m.mask for m in r.maximal_ideals)
            slow = sorted(m.mask for m in maximal_ideals_bruteforce(r))
            assert fast == slow

    def test_product_structure(self):
        r = ring_from_text("Z/2 x Z/3")
        sizes = sorted(len(m) for m in r.maximal_ideals)
        assert sizes == [2, 3]


class TestSignatures:
    def test_unit_iff_empty(self):
        r = zn(12)
        for a in range(12):
            assert (r.signature(a) == 0) == r.is_unit(a)

    def test_radical_iff_full(self):
        r = zn(12)
        full = (1 << r.maximal_ideal_count) - 1
        for a in range(12):
            assert (r.signature(a) == full) == (a in r.jacobson_radical)

    def test_bits_match_membership(self):
        r = zn(30)
        for a in range(30):
            for i, m in enumerate(r.maximal_ideals):
                assert bool(r.signature(a) >> i & 1) == (a in m)


class TestResidueFields:
    def test_known_values(self):
        assert zn(12).residue_field_sizes == (2, 3)
        assert zn(30).residue_field_sizes == (2, 3, 5)
        assert ring_from_text("Z/2 x Z/8").residue_field_sizes == (2, 2)


class TestQuotient:
    def test_z12_mod_radical(self):
        r = zn(12)
        q, proj = r.quotient(r.jacobson_radical)
        assert q.size == 6
        assert ring_isomorphic(q, zn(6)) is not None
        assert proj.verify()

    def test_z4_residue_field(self):
        r = zn(4)
        q, _ = r.quotient(r.jacobson_radical)
        assert q.size == 2

    def test_mod_zero_is_identity(self):
        r = zn(9)
        q, proj = r.quotient(IdealSet(9, 1))
        assert q is r
        assert proj.mapping == tuple(range(9))

    def test_improper_ideal_rejected(self):
        r = zn(6)
        with pytest.raises(ValueError):
            r.quotient(IdealSet(6, (1 << 6) - 1))

    def test_size_law(self):
        for n in (8, 12, 16, 36):
            r = zn(n)
            j = r.jacobson_radical
            q, _ = r.quotient(j)
            assert q.size * len(j) == r.size


class TestDirectProduct:
    def test_crt(self):
        r = direct_product(zn(2), zn(3))
        assert ring_isomorphic(r, zn(6)) is not None

    def test_z2xz2(self):
        r = ring_from_text("Z/2 x Z/2")
        assert r.unit_count == 1
        assert r.maximal_ideal_count == 2

    def test_example_dimensions(self):
        r = ring_from_text("Z/4 x Z/4")
        assert r.size == 16
        assert r.unit_count == 4
        assert len(r.jacobson_radical) == 4

    def test_labels(self):
        r = ring_from_text("Z/2 x Z/3")
        assert r.labels[5] == "(1,2)"

    def test_axioms_hold(self):
        validate_ring_axioms(ring_from_text("Z/4 x GF(4) x Z/3"))

    def test_size_cap(self):
        with pytest.raises(CapacityError):
            direct_product(zn(100), zn(100), max_size=4096)


class TestClean:
    def test_z6_witness(self):
        cd = zn(6).clean_decomposition()
        assert cd.clean
        e, u = cd.witnesses[2]
        r = zn(6)
        assert e in r.idempotent_elements
        assert r.is_unit(u)
        assert r.add(e, u) == 2

    def test_every_small_ring_is_clean(self):
        for text in ("Z/12", "Z/30", "GF(8)", "SQZ(2,2)", "Z/4 x Z/9"):
            assert ring_from_text(text).clean_decomposition().clean


class TestCharacteristic:
    def test_values(self):
        assert zn(12).characteristic == 12
        assert ring_from_text("Z/2[x]/(x^3)").characteristic == 2
        assert ring_from_text("Z/2 x Z/3").characteristic == 6


class TestAxiomValidation:
    def test_passes_on_real_rings(self):
        for text in ("Z/7", "GF(4)", "SQZ(2,2)", "Z/6 x Z/5"):
            validate_ring_axioms(ring_from_text(text))

    def test_broken_distributivity_caught(self):
        n = 4
        add = [[(a + b) % n for b in range(n)] for a in range(n)]
        mul = [[(a * b) % n for b in range(n)] for a in range(n)]
        mul[3][2] = 1
        mul[2][3] = 1
        flat_add = [v for row in add for v in row]
        flat_mul = [v for row in mul for v in row]
        ring = RingTable(n, 1, flat_add, flat_mul)
        with pytest.raises(RingAxiomError):
            validate_ring_axioms(ring)

    def test_witness_is_concrete(self):
        n = 4
        add = [[(a + b) % n for b in range(n)] for a in range(n)]
        add[2][3] = 0
        add[3][2] = 0
        flat_add = [v for row in add for v in row]
        flat_mul = [(a * b) % n for a in range(n) for b in range(n)]
        ring = RingTable(n, 1, flat_add, flat_mul)
        with pytest.raises(RingAxiomError) as err:
            validate_ring_axioms(ring)
        law, witness = err.value.law, err.value.witness
        assert law
        assert all(0 <= w < n for w in witness)

    def test_large_ring_sampled(self):
        r = zn(1024)
        validate_ring_axioms(r)


class TestRingIsomorphism:
    def test_crt_positive(self):
        iso = ring_isomorphic(zn(6), ring_from_text("Z/2 x Z/3"))
        assert iso is not None
        assert iso.verify()

    def test_characteristic_screen(self):
        assert ring_isomorphic(zn(4), ring_from_text("Z/2[x]/(x^2)")) is None

    def test_products_same_graph_different_rings(self):
        assert ring_isomorphic(ring_from_text("Z/2 x Z/8"), ring_from_text("Z/4 x Z/4")) is None

    def test_size_mismatch_is_definite(self):
        assert ring_isomorphic(zn(4), zn(6)) is None

    def test_cap_is_capability_error(self):
        with pytest.raises(CapacityError):
            ring_isomorphic(zn(64), zn(64), cap=32)

    def test_field_presentations_agree(self):
        iso = ring_isomorphic(ring_from_text("GF(4)"), ring_from_text("Z/2[x]/(x^2+x+1)"))
        assert iso is not None

    def test_self_isomorphic(self):
        for text in ("Z/9", "SQZ(2,1)", "Z/2 x Z/4"):
            r = ring_from_text(text)
            iso = ring_isomorphic(r, r)
            assert iso is not None and iso.verify()

    def test_same_size_nonisomorphic_rings(self):
        assert ring_isomorphic(zn(9), ring_from_text("Z/3 x Z/3")) is None
        assert ring_isomorphic(zn(8), ring_from_text("Z/2[x]/(x^3)")) is None


class TestIdempotentComponents:
    def test_z12_split(self):
        r = zn(12)
        sizes = sorted(r.idempotent_component(e).size for e in (4, 9))
        assert sizes == [3, 4]
        assert r.idempotent_component(4).maximal_ideal_count == 1

    def test_component_is_valid_ring(self):
        r = zn(12)
        validate_ring_axioms(r.idempotent_component(4))


class TestCosetRepresentatives:
    def test_minimal_reps(self):
        r = zn(12)
        reps, rep_of = r.coset_representatives(r.jacobson_radical)
        assert [int(x) for x in reps] == [0, 1, 2, 3, 4, 5]
        assert int(rep_of[7]) == 1
        assert int(rep_of[6]) == 0

    def test_partition(self):
        r = ring_from_text("Z/2 x Z/4")
        j = r.jacobson_radical
        reps, rep_of = r.coset_representatives(j)
        assert len(reps) * len(j) == r.size
        assert len(np.unique(rep_of)) == len(reps)
