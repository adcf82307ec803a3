"""Matrix realizations and the Steinberg relations they must satisfy."""
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from chevlab.algebra.chevmatrix import (
    build_representation,
    chevalley_group,
    check_h_multiplicative,
    check_invariant_form,
    commutator,
    verify_steinberg_relations,
)
from chevlab.algebra.errors import NicePairViolation, NotAUnit
from chevlab.algebra.finring import make_ring
from chevlab.algebra.rootsys import parse_root_system

INSTANCES = [("A2", "Z/5"), ("A2", "Z/4"), ("A2", "F3[x]/(x^2)"), ("B2", "Z/5"), ("G2", "Z/7")]


class TestRepresentations:
    @pytest.mark.parametrize("label, kind, dim", [("A2", "natural", 3), ("B2", "symplectic", 4),
                                                  ("C3", "symplectic", 6), ("G2", "adjoint", 14)])
    def test_default_realization(self, label, kind, dim):
        rep = build_representation(parse_root_system(label))
        assert (rep.kind, rep.dim) == (kind, dim)
        assert rep.bracket_failures() == []

    def test_adjoint_a2(self, a2):
        assert build_representation(a2, "adjoint").dim == 8


class TestRelations:
    @pytest.mark.parametrize("label, ring", INSTANCES)
    def test_steinberg_relations(self, label, ring):
        group = chevalley_group(parse_root_system(label), make_ring(ring))
        checks = verify_steinberg_relations(group)
        assert [c.passed for c in checks] == [True, True], [c.detail for c in checks]

    @pytest.mark.parametrize("label, ring", [("A2", "Z/5"), ("B2", "Z/5"), ("A2", "F3[x]/(x^2)")])
    def test_h_multiplicative(self, label, ring):
        assert check_h_multiplicative(chevalley_group(parse_root_system(label), make_ring(ring))).passed

    def test_symplectic_form_preserved(self, sp4_z5):
        assert check_invariant_form(sp4_z5).passed
        for alpha in sp4_z5.phi.roots:
            assert sp4_z5.preserves_form(sp4_z5.w(alpha, 1) * sp4_z5.h(alpha, 2))

    def test_determinant_one(self, sl3_z5):
        assert check_invariant_form(sl3_z5).passed

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 5), st.integers(0, 4), st.integers(0, 4))
    def test_additivity_samples(self, root, s, t):
        group = chevalley_group(parse_root_system("A2"), make_ring("Z/5"))
        assert group.e(root, s) * group.e(root, t) == group.e(root, (s + t) % 5)
        assert group.e(root, s).inv() == group.e(root, (-s) % 5)

    def test_commutator_of_simple_roots(self, sl3_z5, a2):
        c = commutator(sl3_z5.e("12", 2), sl3_z5.e("23", 3))
        n = a2.root("13")
        assert c in (sl3_z5.e(n, 1), sl3_z5.e(n, 4))


class TestTorus:
    def test_h_is_diagonal(self, sl3_z5):
        h = sl3_z5.h("12", 2)
        assert h.matrix.tolist() == [[2, 0, 0], [0, 3, 0], [0, 0, 1]]

    def test_h_matches_weights(self, g2_z7):
        for alpha in g2_z7.phi.simple_roots:
            assert g2_z7.h(alpha, 3) == g2_z7.h_expected(alpha, 3)

    def test_zero_and_one_give_identity(self, sp4_z5):
        for alpha in sp4_z5.phi.roots:
            assert sp4_z5.e(alpha, 0).is_identity()
            assert sp4_z5.h(alpha, 1).is_identity()

    def test_w_needs_a_unit(self, sl3_z5):
        with pytest.raises(NotAUnit):
            sl3_z5.w("12", 0)

    def test_w_squared_is_h_of_minus_one(self, sp4_z5):
        for alpha in sp4_z5.phi.roots:
            w = sp4_z5.w(alpha, 1)
            assert w * w == sp4_z5.h(alpha, 4)


class TestGuards:
    def test_g2_refuses_non_nice_ring(self, g2):
        with pytest.raises(NicePairViolation):
            chevalley_group(g2, make_ring("Z/6"))

    def test_element_identity(self, sl3_z5):
        assert sl3_z5.identity.is_identity()
        assert np.array_equal(sl3_z5.identity.matrix, np.eye(3, dtype=np.int32))
