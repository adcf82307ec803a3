"""Steinberg presentations, K2 by coset enumeration, and Steinberg symbols."""
import numpy as np
import pytest

from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.errors import BudgetExceeded, NicePairViolation, NotAUnit, NotLongRoot
from chevlab.algebra.finring import make_ring
from chevlab.algebra.rootsys import parse_root_system
from chevlab.algebra.steinberg import (
    build_presentation,
    k2_local_product_check,
    k2_order,
    pi_S,
    presentation_soundness,
    symbol,
    symbol_generation_check,
    symbol_root,
)
from chevlab.runner.models import SubgroupStrategy


@pytest.fixture(scope="session")
def f2():
    return make_ring("F2")


@pytest.fixture(scope="session")
def k2_f2(a2, f2):
    return k2_order(a2, f2)


class TestPresentation:
    def test_sl3_f2(self, a2, f2, sl3_f2):
        pres = build_presentation(a2, f2)
        assert len(pres.generators) == 6
        assert pres.x("12", 0) == ()
        assert presentation_soundness(pres, sl3_f2).passed

    @pytest.mark.parametrize("label, ring", [("A2", "Z/5"), ("B2", "Z/5"), ("A2", "F3[x]/(x^2)")])
    def test_relators_hold_in_the_group(self, label, ring):
        phi, r = parse_root_system(label), make_ring(ring)
        check = presentation_soundness(build_presentation(phi, r), chevalley_group(phi, r))
        assert check.passed, check.counterexamples

    def test_export(self, a2, f2):
        text = build_presentation(a2, f2).export()
        assert text.startswith("# St(A2, F2): 6 generators")
        assert "x1 = x_e1-e2(1)" in text

    def test_ring_too_large(self, a2):
        with pytest.raises(BudgetExceeded):
            build_presentation(a2, make_ring("Z/9"))


class TestK2:
    def test_sl3_f2(self, k2_f2):
        assert k2_f2.st_order == 168
        assert k2_f2.k2_order == 1
        assert k2_f2.counts()["index"] == 21
        assert k2_f2.symbols == []

    def test_trivial_subgroup_strategy(self, a2, f2):
        result = k2_order(a2, f2, SubgroupStrategy.TRIVIAL)
        assert result.counts()["index"] == 168
        assert result.k2_order == 1

    def test_sl3_f3(self, a2):
        result = k2_order(a2, make_ring("F3"))
        assert (result.st_order, result.group_order, result.k2_order) == (5616, 5616, 1)

    def test_refuses_non_nice_pair(self, b2):
        with pytest.raises(NicePairViolation):
            k2_order(b2, make_ring("Z/6"))

    def test_local_product(self, a2):
        counts, checks = k2_local_product_check(a2, make_ring("Z/2 x Z/2"))
        assert counts["k2_order"] == 1
        assert counts["factors"] == 2
        assert all(c.passed for c in checks)

    @pytest.mark.slow
    def test_sl3_z4_symbols_generate(self, a2):
        result = k2_order(a2, make_ring("Z/4"))
        assert result.group_order == 43008
        assert result.divides
        counts, checks = symbol_generation_check(result)
        assert counts["symbol_subgroup_order"] == result.k2_order
        assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]

    @pytest.mark.slow
    def test_sl3_z6_is_a_local_product(self, a2):
        counts, checks = k2_local_product_check(a2, make_ring("Z/6"))
        assert counts["factors"] == 2
        assert all(c.passed for c in checks)


class TestSymbols:
    def test_symbols_map_to_identity(self, a2, sl3_z5):
        pres = build_presentation(a2, sl3_z5.ring)
        alpha = symbol_root(a2)
        for u in range(1, 5):
            for v in range(1, 5):
                assert pi_S(pres, sl3_z5, symbol(pres, alpha, u, v)).is_identity()

    def test_short_root_refused(self, b2):
        pres = build_presentation(b2, make_ring("Z/5"))
        with pytest.raises(NotLongRoot):
            symbol(pres, "e2", 2, 3)

    def test_non_unit_refused(self, a2):
        pres = build_presentation(a2, make_ring("Z/4"))
        with pytest.raises(NotAUnit):
            symbol(pres, "12", 2, 3)

    def test_symbol_root_is_long(self, b2):
        assert symbol_root(b2).is_long

    def test_generation_over_f2(self, k2_f2):
        counts, checks = symbol_generation_check(k2_f2)
        assert counts == {"symbol_subgroup_order": 1, "units": 1}
        assert all(c.passed for c in checks)

    def test_symbol_permutations_are_trivial_when_k2_is(self, a2):
        result = k2_order(a2, make_ring("F3"))
        pres = result.presentation
        perm = result.table.permutation(symbol(pres, symbol_root(a2), 2, 2))
        assert np.array_equal(perm, np.arange(result.table.index))
