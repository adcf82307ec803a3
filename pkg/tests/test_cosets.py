"""Coset enumeration on small presentations with known orders."""
import numpy as np
import pytest

from chevlab.algebra.cosets import free_reduce, generated_order, invert_word, todd_coxeter

A, B = 1, 2

S3 = [(A, A), (B, B, B), (A, B, A, B)]
A4 = [(A, A), (B, B, B), (A, B) * 3]
A5 = [(A, A), (B, B, B), (A, B) * 5]


class TestWords:
    def test_free_reduce(self):
        assert free_reduce((A, B, -B, -A, B)) == (B,)
        assert free_reduce((A, -A)) == ()

    def test_invert_word(self):
        assert invert_word((1, -2, 3)) == (-3, 2, -1)


class TestEnumeration:
    @pytest.mark.parametrize("relators, order", [(S3, 6), (A4, 12), (A5, 60)])
    def test_group_order(self, relators, order):
        table = todd_coxeter(2, relators)
        assert table.closed
        assert table.index == order
        assert table.relators_hold()

    def test_subgroup_index(self):
        table = todd_coxeter(2, S3, subgroup=[(A,)])
        assert table.index == 3
        assert table.relators_hold()

    def test_trivial_group(self):
        assert todd_coxeter(1, [(A,)]).index == 1

    def test_permutations_compose(self):
        table = todd_coxeter(2, A4)
        a, b = table.permutation((A,)), table.permutation((B,))
        assert np.array_equal(table.permutation((A, B)), b[a])
        assert np.array_equal(table.permutation((B, -B)), np.arange(12))

    def test_action_is_faithful(self):
        table = todd_coxeter(2, A5)
        assert generated_order([table.permutation((A,)), table.permutation((B,))]) == 60

    def test_dump(self):
        lines = todd_coxeter(2, S3).dump().splitlines()
        assert lines[0] == "coset\tg1\tg1^-1\tg2\tg2^-1"
        assert len(lines) == 7


class TestPermutationGroups:
    def test_symmetric_group(self):
        swap = np.array([1, 0, 2, 3])
        cycle = np.array([1, 2, 3, 0])
        assert generated_order([swap, cycle]) == 24

    def test_empty(self):
        assert generated_order([]) == 1
