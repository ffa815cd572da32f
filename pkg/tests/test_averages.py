from fractions import Fraction

import pytest

from classavg.averages import (
    ProductQuery,
    RatioQuery,
    moment,
    product_average,
    ratio_average,
    schur_box_sum_eval,
    verify_rectangular_identities,
)
from classavg.errors import PreconditionViolated, SingularParameters
from classavg.groups import GroupSpec

h = Fraction(1, 2)


@pytest.mark.parametrize(
    "family,N,k,value",
    [
        ("u", 1, 1, 2), ("u", 2, 1, 3), ("u", 2, 2, 20),
        ("sp", 1, 1, 2), ("sp", 1, 2, 5), ("sp", 2, 1, 3),
        ("so-even", 1, 1, 2), ("so-even", 2, 2, 10),
        ("o", 2, 2, 5), ("o-minus", 2, 2, 0), ("so-odd", 1, 3, 0),
    ],
)
def test_moment_spot_values(family, N, k, value):
    g = GroupSpec(family, N)
    r = moment(g, k)
    assert r.value == value
    assert len(set(v for v in r.forms.values())) == 1


def test_one_parameter_products():
    for N in range(1, 4):
        x = Fraction(2, 3)
        assert product_average(ProductQuery(GroupSpec("sp", N), xs=[x])).value == sum(x ** (2 * j) for j in range(N + 1))
        assert product_average(ProductQuery(GroupSpec("so-even", N), xs=[x])).value == 1 + x ** (2 * N)
        assert product_average(ProductQuery(GroupSpec("o-minus", N), xs=[x])).value == 1 - x ** (2 * N)
        assert product_average(ProductQuery(GroupSpec("o", N), xs=[x])).value == 1
    assert product_average(ProductQuery(GroupSpec("so-odd", 1), xs=[h], sign=-1)).value == Fraction(7, 8)


def test_unitary_product_and_ratio():
    g = GroupSpec("u", 1)
    # E det(I + a⁻¹g⁻¹) det(I + b g) = 1 + 1/a · b
    r = product_average(ProductQuery(g, xs=[Fraction(2, 3)], inverse_side=[Fraction(1, 2)]))
    assert r.value == 1 + Fraction(2, 3) * 2
    assert ratio_average(RatioQuery(GroupSpec("u", 3), gammas=[h], deltas=[h])).value == Fraction(4, 3)


def test_ratio_without_denominator_is_the_product():
    xs = [Fraction(1, 3), Fraction(-2, 5)]
    for fam in ("sp", "so-even", "so-odd", "o", "o-minus"):
        g = GroupSpec(fam, 2)
        assert ratio_average(RatioQuery(g, xs=xs)).value == product_average(ProductQuery(g, xs=xs)).value


def test_ratios_are_symmetric_in_their_parameters():
    g = GroupSpec("sp", 3)
    a = ratio_average(RatioQuery(g, xs=[Fraction(1, 3), Fraction(2, 7)], ys=[Fraction(1, 4), Fraction(-1, 5)])).value
    b = ratio_average(RatioQuery(g, xs=[Fraction(2, 7), Fraction(1, 3)], ys=[Fraction(-1, 5), Fraction(1, 4)])).value
    assert a == b


def test_query_errors():
    with pytest.raises(SingularParameters):
        product_average(ProductQuery(GroupSpec("sp", 1), xs=[1, 1]))
    with pytest.raises(SingularParameters):
        product_average(ProductQuery(GroupSpec("sp", 1), xs=[0]))
    with pytest.raises(PreconditionViolated):
        RatioQuery(GroupSpec("sp", 1), ys=[Fraction(1, 2), Fraction(1, 3)])
    with pytest.raises(PreconditionViolated):
        RatioQuery(GroupSpec("so-even", 2), ys=[1])
    with pytest.raises(PreconditionViolated):
        ProductQuery(GroupSpec("sp", 1), inverse_side=[h])
    with pytest.raises(PreconditionViolated):
        moment(GroupSpec("u", 1), -1)


def test_box_sum_literal_counterexample():
    # k = 1, N = 1: the literal odd-column sum is x + x², the true value x²
    x = Fraction(1, 4)
    assert schur_box_sum_eval(2, 1, [x], "odd-columns-literal") == x + x * x
    assert schur_box_sum_eval(2, 1, [x], "odd-columns-corrected") == x * x


@pytest.mark.parametrize("k,N", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_rectangular_identities(k, N):
    report = verify_rectangular_identities(k, N, ls=True)
    assert report.ok, [c.identity for c in report.failures()]
    assert report.summary["expected-fail"] > 0
    assert all(c.identity.endswith("literal") for c in report.cases if c.status == "expected-fail")
