"""Acceptance criteria 1-10.

Each criterion is a function returning (ok, detail). Under pytest every
criterion is a test and a one-line verdict per criterion is printed in
the terminal summary; run this file directly to get just those lines.
"""

from __future__ import annotations

import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from classavg.averages import ProductQuery, moment, product_average
from classavg.groups import Family, GroupSpec
from classavg.haar_oracle import char_poly_integrand, mc_matrix_average, moment_integrand, quad_average
from classavg.report import Case
from classavg.suites import (
    task_cauchy,
    task_character_dims,
    task_ct_vs_quad,
    task_dual_pair_expand,
    task_dual_pairs,
    task_generalized_cauchy,
    task_group_cauchy,
    task_hopf,
    task_ls,
    task_ls_laplace,
    task_pieri,
    task_products,
    task_ratios,
    task_rect,
    task_schur_algorithms,
    task_schur_orthogonality,
)
from classavg.symmetric_functions import schur_dim

MC_SAMPLES = 10**6
RESULTS: dict[int, tuple[bool, str]] = {}


def _tally(cases: list[Case]) -> tuple[bool, str]:
    bad = [c for c in cases if c.status in ("fail", "error")]
    expected = sum(c.status == "expected-fail" for c in cases)
    detail = f"{len(cases) - len(bad)}/{len(cases)} cases"
    if expected:
        detail += f", {expected} documented counterexamples"
    if bad:
        detail += "; first failure " + f"{bad[0].identity} {bad[0].params}"
    return not bad, detail


def _mc_ok(mean: float, stderr: float, exact) -> bool:
    return abs(mean - float(exact)) <= 4 * stderr


def criterion_1():
    t0 = time.perf_counter()
    ok = True
    for n in range(1, 9):
        for k in range(0, 6):
            r = moment(GroupSpec(Family.UNITARY, n), k)
            ok &= r.forms["product"] == r.forms["schur-dim"] == schur_dim([n] * k, 2 * k)
    spots = {(1, 1): 2, (2, 1): 3, (2, 2): 20}
    ok &= all(moment(GroupSpec(Family.UNITARY, n), k).value == v for (n, k), v in spots.items())
    worst = 0.0
    for n in (1, 2):
        for k in range(0, 4):
            g = GroupSpec(Family.UNITARY, n)
            worst = max(worst, abs(quad_average(g, moment_integrand(g, k), 40) - float(moment(g, k).value)))
    elapsed = time.perf_counter() - t0
    ok &= worst <= 1e-8 and elapsed < 60
    return ok, f"quadrature error {worst:.1e}, {elapsed:.1f}s"


def criterion_2():
    ok = True
    for N in range(1, 7):
        for k in range(0, 7):
            forms = moment(GroupSpec(Family.SYMPLECTIC, N), k).forms
            ok &= forms["factorial"] == forms["gamma"] == forms["duplication"] == forms["dimension"]
    spots = {(1, 1): 2, (1, 2): 5, (2, 1): 3}
    ok &= all(moment(GroupSpec(Family.SYMPLECTIC, N), k).value == v for (N, k), v in spots.items())
    g = GroupSpec(Family.SYMPLECTIC, 1)
    worst = max(abs(quad_average(g, moment_integrand(g, k), 40) - float(moment(g, k).value)) for k in range(0, 7))
    ok &= worst <= 1e-8
    return ok, f"quadrature error {worst:.1e}"


def criterion_3():
    so = {(1, 1): 2, (2, 2): 10}
    ok = all(moment(GroupSpec(Family.SO_EVEN, N), k).value == v for (N, k), v in so.items())
    o22 = moment(GroupSpec(Family.O_FULL, 2), 2).value
    ok &= o22 == 5 == moment(GroupSpec(Family.SO_EVEN, 2), 2).value / 2
    mean, se = mc_matrix_average(4, None, lambda e: np.real(np.prod(1 - e, axis=-1)) ** 2, MC_SAMPLES, 0)
    ok &= _mc_ok(mean, se, o22)
    so3 = GroupSpec(Family.SO_ODD, 1)
    q = quad_average(so3, char_poly_integrand(so3, [Fraction(1, 2)], -1), 40)
    ok &= abs(q - 7 / 8) <= 1e-8
    return ok, f"O(4) Monte Carlo {mean:.4f} ± {se:.4f}; SO(3) quadrature {q!r}"


def criterion_4():
    t0 = time.perf_counter()
    ok, detail = _tally(task_products(3, 3, 0))
    elapsed = time.perf_counter() - t0
    return ok and elapsed < 300, f"{detail}, {elapsed:.1f}s"


def criterion_5():
    return _tally(task_ratios(3, 3, 0))


def criterion_6():
    cases = task_cauchy(0, 0, 0) + task_dual_pair_expand(4, 4, 0) + task_pieri(0, 0, 0) + task_schur_algorithms(0, 0, 0)
    return _tally(cases)


def criterion_7():
    cases = task_ls(0, 0, 0) + task_generalized_cauchy(0, 0, 0) + task_ls_laplace(0, 0, 0) + task_hopf(0, 0, 0)
    return _tally(cases)


def criterion_8():
    cases = (
        task_dual_pairs(3, 3, 0)
        + task_group_cauchy(3, 3, 0)
        + task_schur_orthogonality(3, 3, 0)
        + task_character_dims(3, 3, 0)
    )
    return _tally(cases)


def criterion_9():
    cases = []
    for k in range(1, 4):
        for N in range(1, 4):
            cases += task_rect(k, N, 0, k=k, N=N, ls=k <= 2)
    ok, detail = _tally(cases)
    odd_cols = [c for c in cases if c.identity == "o-odd-columns-literal" and c.params["k"] == 1 and c.params["N"] == 1]
    # x + x² against x² at x = 1/4
    reproduced = bool(odd_cols) and all(c.status == "expected-fail" and (c.lhs, c.rhs) == ("5/16", "1/16") for c in odd_cols)
    corrected = [c for c in cases if c.identity == "o-odd-columns-corrected"]
    ok &= reproduced and bool(corrected) and all(c.status == "pass" for c in corrected)
    return ok, detail


def criterion_10():
    ok, detail = _tally(task_ct_vs_quad(3, 3, 0))
    x = Fraction(1, 2)
    # O⁻(2) has eigenvalues ±1 only, so the sample is constant; O⁻(4) is the real test
    for N in (1, 2):
        mean, se = mc_matrix_average(2 * N, -1, lambda e: np.real(np.prod(1 + float(x) * e, axis=-1)), MC_SAMPLES, 0)
        exact = product_average(ProductQuery(GroupSpec(Family.O_MINUS, N), xs=[x])).value
        ok &= exact == 1 - x ** (2 * N) and _mc_ok(mean, se, exact)
        detail += f"; O-({2 * N}) Monte Carlo {mean:.5f} ± {se:.5f} vs {exact}"
    return ok, detail


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 11)}


def run_criterion(i: int) -> tuple[bool, str]:
    if i not in RESULTS:
        try:
            RESULTS[i] = CRITERIA[i]()
        except Exception as exc:  # report, then let the test fail
            RESULTS[i] = (False, f"error: {exc!r}")
    return RESULTS[i]


def verdict_line(i: int) -> str:
    ok, detail = RESULTS[i]
    return f"criterion {i:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


@pytest.mark.parametrize("i", list(CRITERIA))
def test_criterion(i):
    ok, detail = run_criterion(i)
    print(verdict_line(i))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for i in CRITERIA:
        run_criterion(i)
        print(verdict_line(i), flush=True)
        failed += not RESULTS[i][0]
    sys.exit(1 if failed else 0)
