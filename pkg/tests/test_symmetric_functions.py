import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classavg.errors import NotSymmetric
from classavg.exact_algebra import Laurent, variables
from classavg.partitions import Partition, conjugate, partitions_of, partitions_up_to
from classavg.symmetric_functions import (
    branching_split_sides,
    cauchy_sides,
    complete,
    decompose_in_schur_basis,
    dual_cauchy_sides,
    dual_pair_expansion,
    elementary,
    lr_coefficient,
    lr_expand,
    lr_tableau_count,
    pieri_e,
    pieri_h,
    rectangle_hook_product,
    schur,
    schur_dim,
    schur_dim_hook_content,
    schur_eval,
    schur_eval_bialternant,
    schur_ssyt,
)
from classavg.partitions import hook_product

small = st.integers(0, 5).flatmap(lambda n: st.sampled_from(partitions_of(n)))
points = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(bool), min_size=1, max_size=4, unique=True)


def test_small_schur_polynomials():
    x, y = variables(2)
    assert schur((1,), 2) == x + y
    assert schur((1, 1), 2) == x * y
    assert schur((2,), 2) == x * x + x * y + y * y
    assert schur((1, 1, 1), 2) == Laurent.zero(2)
    assert complete(2, 2) == schur((2,), 2) and elementary(2, 2) == schur((1, 1), 2)


@given(small, points)
@settings(max_examples=80, deadline=None)
def test_three_schur_algorithms_agree(lam, pts):
    n = len(pts)
    if len(lam) > n:
        assert schur_eval(lam, pts) == 0
        return
    jt = schur(lam, n)
    assert jt == schur_ssyt(lam, n)
    assert jt.evaluate(pts) == schur_eval(lam, pts) == schur_eval_bialternant(lam, pts)


@given(small, st.integers(1, 5))
def test_dimension_formulas(lam, n):
    assert schur_dim(lam, n) == schur_dim_hook_content(lam, n)
    if len(lam) <= n:
        assert schur_dim(lam, n) == schur(lam, n).evaluate([1] * n)


def test_lr_known_values_and_symmetry():
    assert dict(lr_expand((1,), (1,))) == {Partition((2,)): 1, Partition((1, 1)): 1}
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    for lam in partitions_of(5):
        for mu in partitions_up_to(3):
            for nu in partitions_of(5 - mu.size):
                c = lr_coefficient(lam, mu, nu)
                assert c == lr_coefficient(lam, nu, mu) == lr_tableau_count(lam, mu, nu)
                assert c == lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu))


@pytest.mark.parametrize("mu", [(), (1,), (2, 1), (3, 1, 1)])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_pieri_matches_lr(mu, r):
    assert dict(pieri_h(mu, r)) == dict(lr_expand(mu, (r,)))
    assert dict(pieri_e(mu, r)) == dict(lr_expand(mu, (1,) * r))


def test_decomposition_round_trip():
    p = schur((2, 1), 3).scale(3) + schur((3,), 3) - schur((1, 1, 1), 3)
    exp = decompose_in_schur_basis(p)
    assert dict(exp) == {Partition((2, 1)): 3, Partition((3,)): 1, Partition((1, 1, 1)): -1}
    x, y = variables(2)
    with pytest.raises(NotSymmetric):
        decompose_in_schur_basis(x * x + y)


@pytest.mark.parametrize("p,q", [(1, 1), (1, 2), (2, 2), (3, 2)])
def test_cauchy_identities(p, q):
    assert dual_cauchy_sides(p, q)[0] == dual_cauchy_sides(p, q)[1]
    if q <= 2 and p <= 2:
        lhs, rhs = cauchy_sides(p, q, 6)
        assert lhs == rhs


@pytest.mark.parametrize("lam", [(2, 1), (3, 1), (2, 2, 1)])
def test_branching_split(lam):
    lhs, rhs = branching_split_sides(lam, 2, 2)
    assert lhs == rhs


@pytest.mark.parametrize("k,N", [(1, 1), (2, 2), (3, 2), (2, 3)])
def test_dual_pair_expansion(k, N):
    lhs, rhs = dual_pair_expansion(k, N)
    assert lhs == rhs


def test_rectangle_hook_product():
    for N in range(1, 4):
        for k in range(1, 4):
            assert rectangle_hook_product(N, k) == hook_product([N] * k)
