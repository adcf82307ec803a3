"""Finite ring arithmetic, ideals, local decomposition and the radical filtration."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chevlab.algebra.errors import NotAUnit, NotLocal
from chevlab.algebra.finring import (
    check_ring_axioms,
    ideal_generated,
    idempotents,
    is_local,
    is_nice_pair,
    jacobson_radical,
    local_decomposition,
    make_ring,
    maximal_ideals,
    nilpotency_degree,
    radical_filtration,
    residue_field,
    split_top_level,
    unit_generated_subring,
    units,
    wedderburn_splitting,
)
from chevlab.algebra.rootsys import parse_root_system

SMALL_RINGS = ["Z/2", "Z/6", "Z/8", "Z/12", "F3[x]/(x^2)", "F2[x]/(x^2+x+1)", "Z/4 x Z/3",
               "Z/4[x]/(x^2)", "(Z/2 x Z/2)[x]/(x^2)"]


class TestArithmetic:
    @pytest.mark.parametrize("text", SMALL_RINGS)
    def test_axioms(self, text):
        assert check_ring_axioms(make_ring(text)) == []

    def test_dual_numbers(self, dual_f3):
        x = dual_f3.parse("x")
        assert dual_f3.mul(x, x) == 0
        assert dual_f3.format(dual_f3.parse("2x+1")) == "2x+1"
        assert dual_f3.generators() == [dual_f3.one, x]

    def test_product_elements(self):
        ring = make_ring("Z/4 x Z/3")
        a = ring.parse("(1, 2)")
        assert ring.format(ring.mul(a, a)) == "(1, 1)"
        assert ring.characteristic == 12

    def test_field_extension(self):
        f4 = make_ring("F2[x]/(x^2+x+1)")
        assert len(units(f4)) == 3
        assert is_local(f4)
        assert jacobson_radical(f4).is_zero

    def test_inverse_of_nonunit(self, z12):
        with pytest.raises(NotAUnit):
            z12.inverse(4)

    @settings(max_examples=50, deadline=None)
    @given(st.sampled_from(SMALL_RINGS), st.data())
    def test_unit_inverse(self, text, data):
        ring = make_ring(text)
        unit_map = units(ring)
        u = data.draw(st.sampled_from(sorted(unit_map)))
        assert ring.mul(u, unit_map[u]) == ring.one
        assert ring.pow(u, -1) == unit_map[u]

    def test_split_top_level(self):
        assert split_top_level("1, (2, 3), [4, 5]") == ["1", "(2, 3)", "[4, 5]"]


class TestIdeals:
    def test_units_of_z12(self, z12):
        assert sorted(units(z12)) == [1, 5, 7, 11]

    def test_idempotents_of_z12(self, z12):
        assert idempotents(z12) == [0, 1, 4, 9]

    def test_maximal_ideals_of_z12(self, z12):
        maximal = maximal_ideals(z12)
        assert sorted(len(m) for m in maximal) == [4, 6]
        assert all(m.is_ideal() for m in maximal)

    def test_radical_of_z12(self, z12):
        radical = jacobson_radical(z12)
        assert radical.sorted() == [0, 6]
        assert nilpotency_degree(radical) == 2

    def test_generated_ideal(self, z12):
        assert ideal_generated(z12, [8]).sorted() == [0, 4, 8]


class TestDecomposition:
    def test_z12_splits_as_z4_z3(self, z12):
        decomposition = local_decomposition(z12)
        assert decomposition.idempotents == (9, 4)
        assert [f.name for f in decomposition.factors] == ["Z/4", "Z/3"]
        assert decomposition.verify() == []

    @pytest.mark.parametrize("text", ["Z/6", "Z/12", "Z/4 x Z/3", "(Z/2 x Z/2)[x]/(x^2)"])
    def test_project_embed(self, text):
        ring = make_ring(text)
        decomposition = local_decomposition(ring)
        assert all(decomposition.embed(decomposition.project(x)) == x for x in ring.elements())

    def test_local_ring_is_one_factor(self, dual_f3):
        assert len(local_decomposition(dual_f3).factors) == 1

    def test_residue_field(self, dual_f3):
        field = residue_field(dual_f3)
        assert (field.characteristic, field.order) == (3, 3)

    def test_residue_field_needs_local(self):
        with pytest.raises(NotLocal):
            residue_field(make_ring("Z/6"))


class TestFiltration:
    def test_truncated_polynomials(self):
        filtration = radical_filtration(make_ring("F3[x]/(x^3)"))
        assert [level.s for level in filtration.levels] == [1, 1]
        assert filtration.nilpotency == 3
        assert filtration.residue_order == 3

    def test_z8(self):
        filtration = radical_filtration(make_ring("Z/8"))
        assert [level.s for level in filtration.levels] == [1, 1]
        assert filtration.residue_characteristic == 2

    @pytest.mark.parametrize("text", ["Z/8", "Z/9", "F3[x]/(x^3)", "Z/4[x]/(x^2)", "F2[x]/(x^2+x+1)"])
    def test_order_is_residue_power(self, text):
        ring = make_ring(text)
        filtration = radical_filtration(ring)
        q = filtration.residue_order
        assert ring.size == q ** (1 + sum(level.s for level in filtration.levels))


class TestSplitting:
    def test_z4_unsplittable(self):
        assert not wedderburn_splitting(make_ring("Z/4")).split

    def test_equal_characteristic_splits(self, dual_f3):
        splitting = wedderburn_splitting(dual_f3)
        assert splitting.split
        assert sorted(splitting.section) == [0, 1, 2]


class TestNicePairs:
    def test_simply_laced(self):
        assert is_nice_pair(parse_root_system("A2"), make_ring("Z/4")).ok

    def test_b2_needs_two(self):
        b2 = parse_root_system("B2")
        assert not is_nice_pair(b2, make_ring("Z/6")).ok
        assert is_nice_pair(b2, make_ring("Z/5")).ok

    def test_g2_needs_two_and_three(self):
        g2 = parse_root_system("G2")
        assert not is_nice_pair(g2, make_ring("Z/6")).ok
        assert not is_nice_pair(g2, make_ring("Z/9")).ok
        assert is_nice_pair(g2, make_ring("Z/7")).ok


class TestUnitSubring:
    def test_generated_by_units(self):
        assert unit_generated_subring(make_ring("F2[x]/(x^2)")).equals_whole

    def test_proper_unit_subring(self):
        subring = unit_generated_subring(make_ring("Z/2 x Z/2"))
        assert not subring.equals_whole
        assert len(subring.elements) == 2

    def test_ring_tables_are_int32(self, z12):
        assert z12.mul_table.dtype == np.int32
