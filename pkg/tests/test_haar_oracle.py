from fractions import Fraction

import numpy as np
import pytest

from classavg.errors import TooLarge, UnsupportedGroup
from classavg.exact_algebra import Laurent, variables
from classavg.groups import Family, GroupSpec
from classavg.haar_oracle import (
    ClassFunction,
    char_poly_integrand,
    ct_average,
    mc_eigen_average,
    mc_matrix_average,
    moment_integrand,
    quad_average,
    ratio_tail_bound,
    truncated_ratio_integrand,
    validate_weight,
)
from classavg.symmetric_functions import schur

DENSITY = [Family.UNITARY, Family.SYMPLECTIC, Family.SO_EVEN, Family.SO_ODD]


@pytest.mark.parametrize("family", DENSITY)
@pytest.mark.parametrize("N", [1, 2, 3])
def test_density_normalizes(family, N):
    g = GroupSpec(family, N)
    assert abs(quad_average(g, ClassFunction(g, Laurent.one(N)), 30) - 1) < 1e-10
    assert validate_weight(family, N)


def test_unitary_schur_orthogonality():
    g = GroupSpec(Family.UNITARY, 2)
    lams = [(), (1,), (2,), (1, 1), (2, 1)]
    for a in lams:
        for b in lams:
            f = ClassFunction(g, schur(a, 2) * schur(b, 2).invert_variables())
            assert ct_average(f) == (1 if a == b else 0)


@pytest.mark.parametrize("family", DENSITY)
def test_ct_matches_quadrature(family):
    g = GroupSpec(family, 2)
    x, y = variables(2)
    body = (x + x.invert_variables() + 2 * y) ** 2 + y.invert_variables() * Fraction(1, 3)
    f = ClassFunction(g, body)
    assert abs(float(ct_average(f)) - quad_average(g, f, 40)) < 1e-10


def test_full_orthogonal_group_needs_the_reflection_coset():
    o, so = GroupSpec(Family.O_FULL, 2), GroupSpec(Family.SO_EVEN, 2)
    assert ct_average(moment_integrand(o, 2)) == 5
    assert ct_average(moment_integrand(so, 2)) == 10
    # E det(I + x g) is 1 over O(2N): the two cosets give 1 + x^{2N} and 1 − x^{2N}
    assert ct_average(char_poly_integrand(o, [Fraction(1, 2)])) == 1


def test_reflection_coset():
    g = GroupSpec(Family.O_MINUS, 2)
    assert ct_average(char_poly_integrand(g, [Fraction(1, 2)])) == Fraction(15, 16)
    mean, se = mc_matrix_average(4, -1, lambda e: np.real(np.prod(1 + 0.5 * e, axis=-1)), 100_000, 3)
    assert abs(mean - 15 / 16) <= 4 * se


def test_truncated_ratio_tail_is_bounded():
    g = GroupSpec(Family.SYMPLECTIC, 1)
    f = truncated_ratio_integrand(g, [Fraction(1, 3)], [Fraction(1, 4)], 20)
    bound = ratio_tail_bound(f)
    assert 0 < bound < 1e-6
    deeper = truncated_ratio_integrand(g, [Fraction(1, 3)], [Fraction(1, 4)], 40)
    assert abs(float(ct_average(f) - ct_average(deeper))) <= bound


def test_eigenvalue_sampler_is_seeded():
    g = GroupSpec(Family.SYMPLECTIC, 1)
    f = moment_integrand(g, 1)
    a = mc_eigen_average(g, f, 50_000, 11)
    assert a == mc_eigen_average(g, f, 50_000, 11)
    assert abs(a[0] - 2) <= 4 * a[1]


def test_limits():
    with pytest.raises(UnsupportedGroup):
        quad_average(GroupSpec(Family.O_MINUS, 1), lambda th: th[..., 0], 10)
    with pytest.raises(TooLarge):
        quad_average(GroupSpec(Family.UNITARY, 4), lambda th: th[..., 0], 10)
