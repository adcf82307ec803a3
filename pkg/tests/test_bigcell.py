"""Big-cell factorization g = ω⁻(u⁻) ω(t) ω⁺(u⁺)."""
from hypothesis import given, settings, strategies as st

from chevlab.algebra.bigcell import (
    CellFactorization,
    NotInCell,
    bigcell_factor,
    cell_census,
    expected_cell_size,
    reassemble,
)
from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.enumeration import enumerate_elementary
from chevlab.algebra.finring import make_ring
from chevlab.algebra.rootsys import parse_root_system

coords = st.lists(st.integers(0, 4), min_size=3, max_size=3)
torus = st.lists(st.integers(1, 4), min_size=2, max_size=2)


class TestCensus:
    def test_sl3_f2(self, sl3_f2):
        elements = enumerate_elementary(sl3_f2).elements
        counts, checks = cell_census(sl3_f2, elements)
        assert counts["group_order"] == 168
        assert counts["cell_members"] == 64
        assert counts["distinct_coordinates"] == 64
        assert all(c.passed for c in checks)

    def test_expected_size(self, sl3_f2, sl3_z5):
        assert expected_cell_size(sl3_f2) == 64
        assert expected_cell_size(sl3_z5) == 5 ** 6 * 4 ** 2


class TestFactor:
    def test_simple_reflection_outside(self, sl3_f2):
        outcome = bigcell_factor(sl3_f2, sl3_f2.w("12", 1))
        assert isinstance(outcome, NotInCell)
        assert outcome.step == 0

    def test_identity(self, sl3_z5):
        outcome = bigcell_factor(sl3_z5, sl3_z5.identity)
        assert outcome == CellFactorization((0, 0, 0), (1, 1), (0, 0, 0))

    def test_root_element(self, sl3_z5):
        outcome = bigcell_factor(sl3_z5, sl3_z5.e("13", 3))
        assert outcome.uplus == (0, 0, 3)
        assert outcome.uminus == (0, 0, 0)

    @settings(max_examples=60, deadline=None)
    @given(coords, torus, coords)
    def test_coordinates_round_trip(self, uminus, t, uplus):
        group = chevalley_group(parse_root_system("A2"), make_ring("Z/5"))
        f = CellFactorization(tuple(uminus), tuple(t), tuple(uplus))
        assert bigcell_factor(group, reassemble(group, f)) == f

    def test_symplectic_round_trip(self, sp4_z5):
        f = CellFactorization((1, 2, 3, 4), (2, 3), (4, 0, 1, 2))
        assert bigcell_factor(sp4_z5, reassemble(sp4_z5, f)) == f

    def test_describe(self, sl3_z5):
        described = bigcell_factor(sl3_z5, sl3_z5.e("12", 1)).describe(sl3_z5)
        assert described["in_cell"] is True
        assert described["uplus"]["e1-e2"] == "1"
