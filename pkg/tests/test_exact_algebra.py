from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from classavg.errors import BadRowSet, NonSquare, VariableCountMismatch, ZeroAtNegativeExponent
from classavg.exact_algebra import (
    Laurent,
    bareiss_det,
    constant_term,
    determinant,
    laplace_terms,
    minor_expansion_det,
    rat,
    rat_str,
    variables,
)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
NV = 2


@st.composite
def laurents(draw, nvars=NV):
    n = draw(st.integers(0, 4))
    terms = {}
    for _ in range(n):
        exp = tuple(draw(st.integers(-2, 2)) for _ in range(nvars))
        terms[exp] = draw(fractions)
    return Laurent(nvars, terms)


@given(laurents(), laurents(), laurents())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Laurent.zero(NV)
    assert p * 1 == p


@given(laurents(), laurents(), st.tuples(fractions, fractions).filter(lambda t: 0 not in t))
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_homomorphism(p, q, point):
    assert (p * q).evaluate(point) == p.evaluate(point) * q.evaluate(point)
    assert (p + q).evaluate(point) == p.evaluate(point) + q.evaluate(point)


def test_canonical_text_and_rationals():
    x, y = variables(2)
    p = (x + y.scale(Fraction(1, 2))) ** 2 - x.invert_variables()
    assert p.to_text() == "x1^2 + x1*x2 + 1/4*x2^2 - x1^-1"
    assert rat_str(Fraction(-3, 4)) == "-3/4"
    assert rat_str(Fraction(4)) == "4"
    assert rat("2/6") == Fraction(1, 3)


def test_constant_term_and_errors():
    x, y = variables(2)
    assert constant_term(x * x.invert_variables() + 3) == 4
    with pytest.raises(ZeroAtNegativeExponent):
        x.invert_variables().evaluate([0, 1])
    with pytest.raises(VariableCountMismatch):
        x + Laurent.one(3)


def test_truncation_keeps_low_degree_terms():
    x, y = variables(2)
    p = (1 + x + y) ** 4
    t = p.truncate_total_degree([0, 1], 2)
    assert t == 1 + (x + y) * 4 + (x + y) ** 2 * 6


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(fractions, min_size=n, max_size=n), min_size=n, max_size=n)))
@settings(max_examples=60, deadline=None)
def test_determinants_agree(m):
    b = bareiss_det(m)
    assert b == minor_expansion_det(m)
    assert b == determinant(m)
    assert abs(float(b) - np.linalg.det(np.array(m, dtype=float))) <= 1e-9 * max(1.0, abs(float(b)))


def test_polynomial_determinant():
    x, y = variables(2)
    assert determinant([[x, y], [y, x]]) == x * x - y * y


def test_laplace_expansion_sums_to_determinant():
    m = [[Fraction(i * j + i + 1, j + 2) for j in range(4)] for i in range(4)]
    for rows in ([0], [1, 3], [0, 1, 2]):
        total = sum(a * b for _, a, b in laplace_terms(m, rows))
        assert total == bareiss_det(m)
    with pytest.raises(BadRowSet):
        laplace_terms(m, [0, 0])
    with pytest.raises(NonSquare):
        bareiss_det([[1, 2]])
