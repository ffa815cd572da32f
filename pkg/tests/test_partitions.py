from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from classavg.errors import DoesNotFitBox
from classavg.partitions import (
    Partition,
    box_complement,
    conjugate,
    enumerate_in_box,
    hook_lengths,
    hook_product,
    horizontal_strips_added,
    is_horizontal_strip,
    is_vertical_strip,
    partitions_of,
    vertical_strips_added,
)
from classavg.symmetric_functions import count_ssyt

partitions = st.integers(0, 8).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_parse_and_normalize():
    assert Partition.parse("3,1,1") == Partition((3, 1, 1))
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition.parse("-") == Partition()
    with pytest.raises(ValueError):
        Partition((1, 2))


@given(partitions)
def test_conjugate_is_an_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


@given(partitions)
def test_hook_length_formula_counts_standard_tableaux(lam):
    # f^λ = |λ|! / ∏ hooks equals the number of standard fillings
    def standard(shape):
        if not shape:
            return 1
        total = 0
        for i in range(len(shape)):
            if shape[i] > (shape[i + 1] if i + 1 < len(shape) else 0):
                total += standard(Partition(shape[:i] + (shape[i] - 1,) + shape[i + 1:]))
        return total

    assert factorial(lam.size) // hook_product(lam) == standard(tuple(lam))
    assert len(hook_lengths(lam)) == lam.size


def test_ssyt_count_matches_dimension():
    assert count_ssyt((2, 1), 3) == 8


def test_box_complement():
    assert box_complement((2, 1), 3, 2) == Partition((2, 1, 0))
    assert box_complement((), 2, 2) == Partition((2, 2))
    with pytest.raises(DoesNotFitBox):
        box_complement((4,), 3, 2)
    for lam in enumerate_in_box(3, 3):
        assert box_complement(box_complement(lam, 3, 3), 3, 3) == lam


def test_box_enumeration_and_filters():
    assert len(enumerate_in_box(2, 2)) == 6
    assert all(lam.size % 2 == 0 for lam in enumerate_in_box(4, 3, "even-rows"))
    assert enumerate_in_box(2, 1, "odd-columns-literal") == [Partition((2,)), Partition((1,))]
    assert enumerate_in_box(2, 1, "odd-columns-corrected") == [Partition((2,))]
    with pytest.raises(ValueError):
        enumerate_in_box(2, 2, "nonsense")


@given(partitions, st.integers(1, 3))
def test_strips(mu, r):
    for lam in horizontal_strips_added(mu, r):
        assert is_horizontal_strip(lam, mu) and lam.size == mu.size + r
    for lam in vertical_strips_added(mu, r):
        assert is_vertical_strip(lam, mu) and lam.size == mu.size + r
