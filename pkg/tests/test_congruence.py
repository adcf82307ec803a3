"""Congruence subgroups along the radical filtration and the Levi splitting."""
import pytest

from chevlab.algebra.chevmatrix import chevalley_group
from chevlab.algebra.congruence import (
    commutator_filtration_check,
    congruence_subgroup_order,
    filtration_quotient_check,
    levi_check,
    lie_dimension,
)
from chevlab.algebra.errors import PreconditionFailed
from chevlab.algebra.finring import make_ring


@pytest.fixture(scope="session")
def sl3_dual_f3(a2, dual_f3):
    return chevalley_group(a2, dual_f3)


class TestOrders:
    def test_dual_numbers(self, sl3_dual_f3):
        assert congruence_subgroup_order(sl3_dual_f3, 1) == 3 ** 8

    def test_z4(self, a2):
        assert congruence_subgroup_order(chevalley_group(a2, make_ring("Z/4")), 1) == 256

    def test_beyond_nilpotency_is_trivial(self, sl3_dual_f3):
        assert congruence_subgroup_order(sl3_dual_f3, 2) == 1

    def test_lie_dimension(self, sl3_dual_f3, sp4_z5):
        assert lie_dimension(sl3_dual_f3) == 8
        assert lie_dimension(sp4_z5) == 10


class TestQuotients:
    def test_dual_numbers(self, sl3_dual_f3):
        counts, checks = filtration_quotient_check(sl3_dual_f3, 1, samples=10, seed=1)
        assert counts["quotient_order"] == counts["expected_quotient_order"] == 3 ** 8
        assert counts["s_k"] == 1
        assert all(c.passed for c in checks), [c.detail for c in checks if not c.passed]

    def test_z4(self, a2):
        group = chevalley_group(a2, make_ring("Z/4"))
        counts, checks = filtration_quotient_check(group, 1, samples=10, seed=1)
        assert counts["quotient_order"] == 2 ** 8
        assert all(c.passed for c in checks)

    @pytest.mark.parametrize("level", [0, 2])
    def test_level_out_of_range(self, sl3_dual_f3, level):
        with pytest.raises(PreconditionFailed):
            filtration_quotient_check(sl3_dual_f3, level)


class TestCommutators:
    def test_truncated_polynomials(self, a2):
        group = chevalley_group(a2, make_ring("F3[x]/(x^3)"))
        check = commutator_filtration_check(group, 1, 1, samples=20, seed=7)
        assert check.passed, check.counterexamples

    def test_trivial_target(self, sl3_dual_f3):
        check = commutator_filtration_check(sl3_dual_f3, 1, 1, samples=10, seed=7)
        assert check.passed
        assert "commutators trivial" in check.detail


class TestLevi:
    def test_equal_characteristic(self, a2):
        counts, checks = levi_check(chevalley_group(a2, make_ring("F2[x]/(x^2)")))
        assert counts["order"] == 43008
        assert counts["levi_order"] == 168
        assert counts["kernel_order"] == 256
        assert all(c.passed for c in checks)

    def test_mixed_characteristic_refused(self, a2):
        with pytest.raises(PreconditionFailed):
            levi_check(chevalley_group(a2, make_ring("Z/4")))
