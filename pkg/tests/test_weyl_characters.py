from fractions import Fraction

import pytest

from classavg.errors import LabelTooLong, SingularPoint, UnsupportedGroup
from classavg.groups import Family, GroupSpec
from classavg.partitions import SignedPartition
from classavg.weyl_characters import (
    branch_gl_to_o,
    branch_gl_to_sp,
    char_dim,
    char_eval,
    dual_pair_sides,
    group_cauchy_sides,
    littlewood_parity_series,
    so_even_dim_hook,
    so_even_dim_weyl,
    so_odd_dim_weyl,
    sp_dim_hook,
    sp_dim_weyl,
)

X = [Fraction(1, 2), Fraction(-3, 2)]


def test_defining_representations():
    x = X[0]
    assert char_eval("sp", (1,), [x]) == x + 1 / x
    assert char_eval("so-odd", (1,), [x]) == x + 1 / x + 1
    assert char_eval("so-even", (), X) == 1
    assert char_eval("o", (1,), X) == sum(x + 1 / x for x in X)


def test_so_even_signed_labels():
    plus = char_eval("so-even", SignedPartition((1, 1), 1), X)
    minus = char_eval("so-even", SignedPartition((1, 1), -1), X)
    assert plus != minus
    assert char_eval("o", (1, 1), X) == plus + minus


@pytest.mark.parametrize("lam", [(), (1,), (2,), (1, 1), (2, 1), (3, 2), (2, 2)])
def test_dimension_formulas_agree(lam):
    for k in (2, 3):
        assert sp_dim_weyl(lam, k) == sp_dim_hook(lam, k)
        # the content formula counts both SO(2k) labels λ± when λ_k ≠ 0
        doubled = 2 if len(lam) == k else 1
        assert doubled * so_even_dim_weyl(lam, k) == so_even_dim_hook(lam, k)


def test_known_dimensions():
    assert sp_dim_weyl((1,), 2) == 4
    assert sp_dim_weyl((1, 1), 2) == 5
    assert so_odd_dim_weyl((1,), 2) == 5
    assert so_even_dim_weyl((1,), 2) == 4
    assert char_dim(GroupSpec(Family.O_FULL, 2), (1, 1)) == 6
    assert char_dim(GroupSpec(Family.UNITARY, 3), (2, 1)) == 8


def test_errors():
    with pytest.raises(LabelTooLong):
        char_eval("sp", (1, 1, 1), X)
    with pytest.raises(SingularPoint):
        char_eval("sp", (1,), [Fraction(1), Fraction(1)])
    with pytest.raises(UnsupportedGroup):
        char_eval("o-minus", (1,), X)


@pytest.mark.parametrize("family", ["sp", "so-even", "so-odd"])
def test_dual_pair_identity(family):
    xs = [Fraction(2, 3), Fraction(-5, 2)]
    ts = [Fraction(3, 7), Fraction(4), Fraction(-1, 3)]
    lhs, rhs = dual_pair_sides(family, 2, 3, xs, ts)
    assert lhs == rhs


@pytest.mark.parametrize("family", ["sp", "so-even", "so-odd"])
def test_group_cauchy(family):
    lhs, rhs = group_cauchy_sides(family, [Fraction(1, 3), Fraction(5, 2)], 2, 4)
    assert lhs == rhs


def test_branching_and_parity_sums():
    assert branch_gl_to_sp((1, 1), ()) == 1
    assert branch_gl_to_sp((2,), ()) == 0
    assert branch_gl_to_o((2,), ()) == 1
    assert branch_gl_to_o((2, 1), (1,)) == 1
    assert littlewood_parity_series("even", 2, 6)
    assert littlewood_parity_series("transpose-even", 3, 6)
