from fractions import Fraction

import pytest

from classavg.exact_algebra import Laurent
from classavg.littlewood_schur import (
    berele_regev_sides,
    gen_pieri_sides,
    generalized_cauchy_sides,
    hopf_sides,
    interchange_sides,
    ls,
    ls_eval,
    ls_in_y,
    ls_laplace_sides,
    ls_rectangle,
)
from classavg.partitions import conjugate, partitions_up_to
from classavg.symmetric_functions import schur_eval


@pytest.mark.parametrize("lam", [(1,), (2, 1), (3,), (2, 2)])
def test_reduces_to_schur_without_y(lam):
    pts = [Fraction(1, 2), Fraction(-2, 3), Fraction(3)]
    assert ls_eval(lam, pts, []) == schur_eval(lam, pts)
    assert ls_eval(lam, [], pts) == schur_eval(conjugate(lam), pts)


@pytest.mark.parametrize("lam", list(partitions_up_to(3)))
def test_interchange_and_gen_pieri(lam):
    for k, l in ((1, 1), (2, 1), (1, 2), (2, 2)):
        a, b = interchange_sides(lam, k, l)
        assert a == b
        for _, lhs, rhs in gen_pieri_sides(lam, k, l):
            assert lhs == rhs


def test_rectangle_formula():
    for k, l, m in ((1, 1, 0), (2, 1, 1), (2, 2, 0)):
        assert ls([l + m] * k, k, l).value == ls_rectangle(k, l, m)


def test_vanishing_outside_hook():
    # LS_λ(x; y) vanishes unless λ_{k+1} ≤ l
    assert ls((2, 2, 2), 1, 1).value == Laurent.zero(2)


def test_partially_symbolic_evaluation():
    xs = [Fraction(1, 3), Fraction(2)]
    ys = [Fraction(-1, 2)]
    for lam in ((2, 1), (3, 1, 1), (2, 2)):
        assert ls_in_y(lam, xs, 1).evaluate(ys) == ls_eval(lam, xs, ys)


def test_berele_regev_and_generalized_cauchy():
    assert berele_regev_sides((3, 1), 1, 1)[0] == berele_regev_sides((3, 1), 1, 1)[1]
    lhs, rhs = generalized_cauchy_sides(1, 1, 1, 1, 4)
    assert lhs == rhs


def test_laplace_and_hopf():
    alphas = [Fraction(1, 2), Fraction(2, 3), Fraction(-3)]
    lhs, rhs = ls_laplace_sides((2, 1), 1, 2, alphas, [Fraction(1, 5)])
    assert lhs == rhs
    for quad in (((1,), (1,), (1,), (1,)), ((2, 1), (1,), (1, 1), (2,))):
        a, b = hopf_sides(*quad)
        assert a == b
