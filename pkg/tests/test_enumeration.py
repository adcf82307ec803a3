"""Closure of the elementary subgroup and the independent SL3 count."""
import numpy as np
import pytest

from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.enumeration import (
    Enumeration,
    additive_generators,
    check_matsumoto,
    count_special_linear,
    enumerate_elementary,
    local_product_check,
)
from chevlab.algebra.errors import BudgetExceeded, PreconditionFailed
from chevlab.algebra.finring import make_ring


class TestClosure:
    @pytest.mark.parametrize("ring, order", [("F2", 168), ("F3", 5616)])
    def test_sl3(self, a2, ring, order):
        group = chevalley_group(a2, make_ring(ring))
        enumeration = enumerate_elementary(group)
        assert enumeration.order == check_matsumoto(group, enumeration) == order

    @pytest.mark.slow
    def test_sl3_z4(self, a2):
        group = chevalley_group(a2, make_ring("Z/4"))
        enumeration = enumerate_elementary(group)
        assert enumeration.order == 43008
        assert check_matsumoto(group, enumeration) == 43008

    @pytest.mark.slow
    def test_sl3_z6(self, a2):
        # SL3(Z/6) = SL3(F2) x SL3(F3)
        group = chevalley_group(a2, make_ring("Z/6"))
        enumeration = enumerate_elementary(group)
        assert enumeration.order == check_matsumoto(group, enumeration) == 168 * 5616

    def test_sp4_f3(self, b2):
        # |Sp4(F3)| = 3^4 (3^2 - 1)(3^4 - 1)
        assert enumerate_elementary(chevalley_group(b2, make_ring("F3"))).order == 51840

    def test_budget(self, a2):
        with pytest.raises(BudgetExceeded):
            enumerate_elementary(chevalley_group(a2, make_ring("F3")), budget=100)


class TestDirectCount:
    @pytest.mark.parametrize("ring, order", [("F2", 168), ("F3", 5616)])
    def test_count(self, ring, order):
        assert count_special_linear(make_ring(ring)) == order

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            count_special_linear(make_ring("Z/5"), budget=1000)

    def test_matsumoto_needs_sl3(self, sp4_z5):
        with pytest.raises(PreconditionFailed):
            check_matsumoto(sp4_z5, Enumeration(0, np.empty((0, 4, 4), dtype=np.int32), 0, 0.0))


class TestGenerators:
    def test_cyclic(self):
        assert additive_generators(make_ring("Z/6")) == [1]

    def test_dual_numbers(self, dual_f3):
        assert additive_generators(dual_f3) == [1, 3]


class TestLocalProduct:
    def test_product_of_two_fields(self, a2):
        group = chevalley_group(a2, make_ring("Z/2 x Z/2"))
        counts, check = local_product_check(group)
        assert check.passed
        assert counts["order"] == 168 * 168
        assert counts["factor_1_order"] == counts["factor_2_order"] == 168
