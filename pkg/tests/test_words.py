"""Word maps on root subgroups and ring reconstruction from a carrier."""
import pytest
from hypothesis import given, settings, strategies as st

from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.errors import LengthMismatch, NicePairViolation, NotAHomomorphism, UnsupportedType
from chevlab.algebra.finring import make_ring
from chevlab.algebra.rootsys import parse_root_system
from chevlab.algebra.words import (
    a2_mult_word,
    b2_long_mult,
    b2_mult_word,
    b2_nu,
    b2_pi,
    extend_homomorphism,
    g2_kappa,
    g2_mult_word,
    g2_short_mult,
    g2_theta,
    make_harness,
    read_coordinate,
    reconstruct_ring,
    transport_word,
    verify_transport,
    word_maps,
)


class TestProducts:
    def test_a2(self, sl3_z5):
        g = a2_mult_word(sl3_z5, sl3_z5.e("13", 2), sl3_z5.e("13", 3))
        assert read_coordinate(sl3_z5, "13", g) == 1

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 4), st.integers(0, 4))
    def test_a2_is_ring_multiplication(self, s, t):
        group = chevalley_group(parse_root_system("A2"), make_ring("Z/5"))
        g = a2_mult_word(group, group.e("13", s), group.e("13", t))
        assert read_coordinate(group, "13", g) == (s * t) % 5

    def test_a3(self):
        group = chevalley_group(parse_root_system("A3"), make_ring("Z/3"))
        g = a2_mult_word(group, group.e("13", 2), group.e("13", 2))
        assert read_coordinate(group, "13", g) == 1

    def test_b2_short_carrier(self, sp4_z5):
        assert read_coordinate(sp4_z5, "e1", b2_mult_word(sp4_z5, sp4_z5.e("e1", 2), sp4_z5.e("e1", 4))) == 3

    def test_b2_long_carrier(self, sp4_z5):
        g = b2_long_mult(sp4_z5, sp4_z5.e("e1+e2", 2), sp4_z5.e("e1+e2", 3))
        assert read_coordinate(sp4_z5, "e1+e2", g) == 1

    def test_g2_long_carrier(self, g2_z7):
        assert read_coordinate(g2_z7, "k", g2_mult_word(g2_z7, g2_z7.e("k", 3), g2_z7.e("k", 5))) == 1

    def test_g2_short_carrier(self, g2_z7):
        g = g2_short_mult(g2_z7, g2_z7.e("2c+k", 3), g2_z7.e("2c+k", 4))
        assert read_coordinate(g2_z7, "2c+k", g) == 5


class TestTransports:
    @pytest.mark.parametrize("t", range(5))
    def test_pi_and_nu_are_inverse(self, sp4_z5, t):
        x = sp4_z5.e("e1", t)
        y = b2_pi(sp4_z5, x)
        assert read_coordinate(sp4_z5, "e1+e2", y) == t
        assert b2_nu(sp4_z5, y) == x

    @pytest.mark.parametrize("t", range(7))
    def test_kappa_and_theta_are_inverse(self, g2_z7, t):
        u = g2_z7.e("k", t)
        v = g2_kappa(g2_z7, u)
        assert read_coordinate(g2_z7, "2c+k", v) == t
        assert g2_theta(g2_z7, v) == u

    def test_weyl_transport(self, sp4_z5):
        word = transport_word(sp4_z5, "e1-e2", "e1+e2")
        assert word.sign in (1, -1)
        assert verify_transport(sp4_z5, word)
        assert word.describe(sp4_z5.phi)["to"] == "e1+e2"

    def test_transport_across_lengths(self, sp4_z5):
        with pytest.raises(LengthMismatch):
            transport_word(sp4_z5, "e1", "e1+e2")


class TestGuards:
    def test_no_maps_for_c3(self):
        with pytest.raises(UnsupportedType):
            word_maps(parse_root_system("C3"))

    def test_b2_map_on_a2(self, sl3_z5):
        with pytest.raises(UnsupportedType):
            b2_pi(sl3_z5, sl3_z5.e("13", 1))

    def test_template_description(self, a2):
        described = word_maps(a2)["mult"].describe(a2)
        assert (described["domain"], described["codomain"], described["arity"]) == ("e1-e3", "e1-e3", 2)


class TestHomomorphisms:
    def test_reduction(self):
        f = extend_homomorphism(make_ring("Z/8"), make_ring("Z/4"), [1])
        assert f.tolist() == [0, 1, 2, 3, 0, 1, 2, 3]

    def test_not_a_homomorphism(self):
        with pytest.raises(NotAHomomorphism):
            extend_homomorphism(make_ring("Z/5"), make_ring("Z/4"), [1])

    def test_dual_numbers_to_field(self, dual_f3):
        f = extend_homomorphism(dual_f3, make_ring("F3"), [1, 0])
        assert sorted(set(f.tolist())) == [0, 1, 2]

    def test_images_needed(self, dual_f3, a2):
        with pytest.raises(NotAHomomorphism):
            make_harness(a2, dual_f3, make_ring("Z/3"))


class TestReconstruction:
    def test_identity_a2(self, a2):
        counts, tables, checks = reconstruct_ring(make_harness(a2, make_ring("Z/5")))
        assert counts == {"carrier_size": 5, "source_size": 5, "kernel_size": 1}
        assert tables["f_injective"] is True
        assert tables["multiplication"][2][3] == "1"
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]

    def test_non_injective(self, a2):
        harness = make_harness(a2, make_ring("Z/8"), make_ring("Z/4"))
        counts, tables, checks = reconstruct_ring(harness)
        assert counts["kernel_size"] == 2
        assert counts["carrier_size"] == 4
        assert tables["f_injective"] is False
        assert all(c.passed for c in checks)

    def test_reduction_from_a_product(self, a2):
        # Z/6 = Z/2 x Z/3 onto its Z/3 factor
        harness = make_harness(a2, make_ring("Z/6"), make_ring("Z/3"))
        counts, tables, checks = reconstruct_ring(harness)
        assert counts == {"carrier_size": 3, "source_size": 6, "kernel_size": 2}
        assert tables["f_injective"] is False
        assert tables["elements"] == ["0", "1", "2"]
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]

    def test_dual_numbers(self, a2, dual_f3):
        counts, _, checks = reconstruct_ring(make_harness(a2, dual_f3))
        assert counts["carrier_size"] == 9
        assert all(c.passed for c in checks)

    def test_b2(self, b2):
        counts, _, checks = reconstruct_ring(make_harness(b2, make_ring("Z/5")))
        assert counts["carrier_size"] == 5
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]

    def test_g2(self, g2):
        _, _, checks = reconstruct_ring(make_harness(g2, make_ring("Z/7")))
        assert all(c.passed for c in checks), [c.name for c in checks if not c.passed]

    def test_g2_needs_a_nice_ring(self, g2):
        with pytest.raises(NicePairViolation):
            reconstruct_ring(make_harness(g2, make_ring("Z/6")))
