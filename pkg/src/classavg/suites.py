"""Verification suites: batches of identity checks that produce Reports.

Each suite is a list of tasks. A task is a module-level function plus
keyword arguments returning a list of Cases, so tasks can run in worker
processes; results are always collected in task order.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from itertools import product as cartesian

import numpy as np

from .averages import (
    ProductQuery,
    RatioQuery,
    moment,
    product_average,
    ratio_average,
    verify_rectangular_identities,
)
from .errors import SingularPoint
from .exact_algebra import Laurent, random_rationals
from .groups import Family, GroupSpec
from .haar_oracle import (
    ClassFunction,
    char_poly_integrand,
    ct_average,
    mc_matrix_average,
    moment_integrand,
    quad_average,
    ratio_tail_bound,
    truncated_ratio_integrand,
    unitary_product_body,
)
from .littlewood_schur import (
    berele_regev_sides,
    gen_pieri_sides,
    generalized_cauchy_sides,
    hopf_sides,
    interchange_sides,
    ls,
    ls_laplace_sides,
    ls_rectangle,
)
from .partitions import Partition, hook_product, partitions_of, partitions_up_to
from .report import Case, Report, compare
from .symmetric_functions import (
    branching_split_sides,
    cauchy_sides,
    dual_cauchy_sides,
    dual_pair_expansion,
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
from .weyl_characters import (
    branch_gl_to_sp,
    char_eval,
    dual_pair_sides,
    group_cauchy_sides,
    littlewood_parity_sides,
    so_even_dim_hook,
    so_even_dim_weyl,
    sp_dim_hook,
    sp_dim_weyl,
)

SUITES = ("symfunc", "ls", "characters", "averages", "rect", "oracle-crosscheck")
FAMILIES = (Family.UNITARY, Family.SYMPLECTIC, Family.SO_EVEN, Family.SO_ODD, Family.O_FULL, Family.O_MINUS)


def _fmt(xs) -> list[str]:
    return [str(x) for x in xs]


def _timed_compare(identity, params, fn, **kw) -> Case:
    t0 = time.perf_counter()
    lhs, rhs = fn()
    return compare(identity, params, lhs, rhs, elapsed=time.perf_counter() - t0, **kw)


# symmetric functions


def task_cauchy(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for p, q in cartesian(range(1, 4), repeat=2):
        cases.append(_timed_compare("dual-cauchy", {"p": p, "q": q}, lambda: dual_cauchy_sides(p, q)))
    for p, q in cartesian(range(1, 3), repeat=2):
        cases.append(_timed_compare("cauchy", {"p": p, "q": q, "D": 8}, lambda: cauchy_sides(p, q, 8)))
    return cases


def task_dual_pair_expand(max_k: int, max_n: int, seed: int) -> list[Case]:
    return [
        _timed_compare("dual-pair-expand", {"k": k, "N": N}, lambda: dual_pair_expansion(k, N))
        for k in range(1, max_k + 1)
        for N in range(1, max_n + 1)
    ]


def task_pieri(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for mu in partitions_up_to(6):
        for r in range(1, 4):
            p = {"mu": mu.to_text(), "r": r}
            cases.append(compare("pieri-h", p, dict(pieri_h(mu, r)), dict(lr_expand(mu, (r,)))))
            cases.append(compare("pieri-e", p, dict(pieri_e(mu, r)), dict(lr_expand(mu, (1,) * r))))
    return cases


def task_lr(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for lam in partitions_of(5) + partitions_of(6):
        for mu in partitions_up_to(3):
            for nu in partitions_of(lam.size - mu.size):
                p = {"lam": lam.to_text(), "mu": mu.to_text(), "nu": nu.to_text()}
                cases.append(compare("lr-tableaux", p, lr_coefficient(lam, mu, nu), lr_tableau_count(lam, mu, nu)))
    return cases


def task_schur_algorithms(max_k: int, max_n: int, seed: int) -> list[Case]:
    rng = random.Random(seed)
    shapes = [lam for lam in partitions_up_to(6) if lam and len(lam) <= 5]
    cases = []
    for trial in range(100):
        lam = rng.choice(shapes)
        n = rng.randint(max(1, len(lam) - 1), 4)
        pts = random_rationals(rng, n)
        jt = schur(lam, n)
        p = {"lam": lam.to_text(), "n": n, "trial": trial}
        cases.append(compare("schur-ssyt", p, jt, schur_ssyt(lam, n)))
        direct = jt.evaluate(pts)
        cases.append(compare("schur-eval-jt", {**p, "point": _fmt(pts)}, direct, schur_eval(lam, pts)))
        cases.append(compare("schur-eval-bialternant", {**p, "point": _fmt(pts)}, direct, schur_eval_bialternant(lam, pts)))
    return cases


def task_dimensions(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for lam in partitions_up_to(6):
        for n in range(max(1, len(lam)), 5):
            cases.append(compare("weyl-vs-hook-content", {"lam": lam.to_text(), "n": n}, schur_dim(lam, n), schur_dim_hook_content(lam, n)))
    for N in range(1, 5):
        for k in range(1, 5):
            rect = [N] * k
            cases.append(compare("rectangle-hook-product", {"N": N, "k": k}, hook_product(rect), rectangle_hook_product(N, k)))
    for lam, p, q in [((2, 1), 1, 2), ((2, 1), 2, 2), ((3, 1), 2, 1), ((2, 2, 1), 2, 2)]:
        cases.append(_timed_compare("branching-split", {"lam": Partition(lam).to_text(), "p": p, "q": q}, lambda: branching_split_sides(lam, p, q)))
    return cases


# Littlewood–Schur


def task_ls(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for lam in partitions_up_to(4):
        for k, l in cartesian(range(0, 3), repeat=2):
            if k + l == 0:
                continue
            p = {"lam": lam.to_text(), "k": k, "l": l}
            cases.append(compare("ls-interchange", p, *interchange_sides(lam, k, l)))
            for var, a, b in gen_pieri_sides(lam, k, l):
                cases.append(compare(f"gen-pieri-{var}", p, a, b))
    for k, l, m in cartesian(range(1, 3), range(1, 3), range(0, 2)):
        shape = [l + m] * k
        cases.append(compare("ls-rectangle", {"k": k, "l": l, "m": m}, ls(shape, k, l).value, ls_rectangle(k, l, m)))
    for lam in partitions_up_to(6):
        for k, l in cartesian(range(1, 3), repeat=2):
            if lam.part(k) >= l >= lam.part(k + 1):
                cases.append(compare("berele-regev", {"lam": lam.to_text(), "k": k, "l": l}, *berele_regev_sides(lam, k, l)))
    return cases


def task_generalized_cauchy(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for m, n, s, t in cartesian(range(0, 3), repeat=4):
        if m + n == 0 or s + t == 0:
            continue
        p = {"m": m, "n": n, "s": s, "t": t, "D": 6}
        cases.append(_timed_compare("generalized-cauchy", p, lambda: generalized_cauchy_sides(m, n, s, t, 6)))
    return cases


def task_ls_laplace(max_k: int, max_n: int, seed: int) -> list[Case]:
    rng = random.Random(seed)
    cases = []
    for L, K, Q in cartesian(range(1, 3), range(1, 3), range(0, 3)):
        for lam in partitions_up_to(7, L + K):
            if lam.part(L) < lam.part(L + 1) + Q:
                continue
            pts = random_rationals(rng, L + K + Q)
            p = {"lam": lam.to_text(), "L": L, "K": K, "Q": Q}
            cases.append(compare("ls-laplace", p, *ls_laplace_sides(lam, L, K, pts[: L + K], pts[L + K :])))
    return cases


def task_hopf(max_k: int, max_n: int, seed: int) -> list[Case]:
    labels = partitions_up_to(3)
    cases = []
    for mu, nu, sigma, tau in cartesian(labels, repeat=4):
        if mu.size + nu.size != sigma.size + tau.size:
            continue
        p = {"labels": [x.to_text() for x in (mu, nu, sigma, tau)]}
        cases.append(compare("hopf", p, *hopf_sides(mu, nu, sigma, tau)))
    return cases


# characters


def task_dual_pairs(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for fam in (Family.SYMPLECTIC, Family.SO_EVEN, Family.SO_ODD):
        for k, N in cartesian(range(1, max_k + 1), range(1, max_n + 1)):
            rng = random.Random(f"{seed}-{fam.value}-{k}-{N}")
            done = 0
            while done < 10:
                pts = random_rationals(rng, k + N)
                try:
                    lhs, rhs = dual_pair_sides(fam, k, N, pts[:k], pts[k:])
                except SingularPoint:
                    continue
                cases.append(compare(f"dual-pair-{fam.value}", {"k": k, "N": N, "point": _fmt(pts)}, lhs, rhs))
                done += 1
    return cases


def task_group_cauchy(max_k: int, max_n: int, seed: int) -> list[Case]:
    rng = random.Random(seed)
    cases = []
    for fam in (Family.SYMPLECTIC, Family.SO_EVEN, Family.SO_ODD):
        for N in range(1, max_n + 1):
            for l in range(1, min(N, 2) + 1):
                ts = random_rationals(rng, N)
                p = {"family": fam.value, "N": N, "l": l, "D": 6, "t": _fmt(ts)}
                cases.append(_timed_compare("group-cauchy", p, lambda: group_cauchy_sides(fam, ts, l, 6)))
    for kind in ("even", "transpose-even"):
        for l in range(1, 4):
            cases.append(compare("littlewood-parity", {"kind": kind, "l": l, "D": 6}, *littlewood_parity_sides(kind, l, 6)))
    return cases


def task_schur_orthogonality(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for n in range(1, 4):
        g = GroupSpec(Family.UNITARY, n)
        labels = [lam for lam in partitions_up_to(3) if len(lam) <= n]
        for lam in labels:
            for mu in labels:
                body = schur(lam, n) * schur(mu, n).invert_variables()
                value = ct_average(ClassFunction(g, body))
                cases.append(compare("schur-orthogonality", {"n": n, "lam": lam.to_text(), "mu": mu.to_text()}, value, Fraction(int(lam == mu))))
    return cases


def task_character_dims(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for k in range(1, 4):
        for lam in partitions_up_to(5, k):
            p = {"lam": lam.to_text(), "k": k}
            cases.append(compare("sp-dim", p, sp_dim_weyl(lam, k), sp_dim_hook(lam, k)))
            weyl = so_even_dim_weyl(lam, k)
            cases.append(compare("so-even-dim", p, so_even_dim_hook(lam, k), 2 * weyl if len(lam) == k else weyl))
    rng = random.Random(seed)
    for N in range(1, 3):
        for lam in partitions_up_to(4, N):
            ts = random_rationals(rng, N)
            both = ts + [1 / t for t in ts]
            rhs = sum(
                (branch_gl_to_sp(lam, mu) * char_eval(Family.SYMPLECTIC, mu, ts) for mu in partitions_up_to(lam.size, N)),
                Fraction(0),
            )
            cases.append(compare("branch-gl-sp", {"lam": lam.to_text(), "N": N, "t": _fmt(ts)}, schur_eval(lam, both), rhs))
    return cases


# averages


MOMENT_SPOTS = {
    Family.UNITARY: {(1, 1): 2, (2, 1): 3, (2, 2): 20},
    Family.SYMPLECTIC: {(1, 1): 2, (1, 2): 5, (2, 1): 3},
    Family.SO_EVEN: {(1, 1): 2, (2, 2): 10},
    Family.O_FULL: {(2, 2): 5, (1, 1): 1},
}


def task_moments(max_k: int, max_n: int, seed: int) -> list[Case]:
    cases = []
    for fam, spots in MOMENT_SPOTS.items():
        for (N, k), expected in spots.items():
            cases.append(compare("moment-spot", {"group": GroupSpec(fam, N).name, "k": k}, moment(GroupSpec(fam, N), k).value, Fraction(expected)))
    for n, k in cartesian(range(1, 9), range(0, 6)):
        r = moment(GroupSpec(Family.UNITARY, n), k)
        cases.append(compare("moment-u-forms", {"n": n, "k": k}, r.forms["product"], r.forms["schur-dim"]))
    for N, k in cartesian(range(1, 7), range(0, 7)):
        r = moment(GroupSpec(Family.SYMPLECTIC, N), k)
        p = {"N": N, "k": k}
        cases.append(compare("moment-sp-gamma", p, r.forms["factorial"], r.forms["gamma"]))
        cases.append(compare("moment-sp-duplication", p, r.forms["factorial"], r.forms["duplication"]))
        cases.append(compare("moment-sp-dimension", p, r.forms["factorial"], r.forms["dimension"]))
    for fam in FAMILIES:
        for N, k in cartesian(range(1, 3), range(0, 3)):
            g = GroupSpec(fam, N)
            cases.append(compare("moment-ct", {"group": g.name, "k": k}, moment(g, k).value, ct_average(moment_integrand(g, k))))
    return cases


def _product_query(g: GroupSpec, rng: random.Random, k: int) -> ProductQuery:
    xs = random_rationals(rng, k)
    if g.family is Family.UNITARY:
        L = rng.randint(0, k)
        return ProductQuery(g, xs=xs[L:], inverse_side=xs[:L])
    return ProductQuery(g, xs=xs)


def product_ct(q: ProductQuery) -> Fraction:
    """Constant-term value of a product query's exact integrand."""
    g = q.group
    if g.family is Family.UNITARY:
        return ct_average(ClassFunction(g, unitary_product_body(g.N, [q.sign * a for a in q.inverse_side], [q.sign * a for a in q.xs])))
    return ct_average(char_poly_integrand(g, q.xs, q.sign))


def task_products(max_k: int, max_n: int, seed: int, trials: int = 10) -> list[Case]:
    cases = []
    for fam in FAMILIES:
        n_max = min(max_n, 2) if fam is Family.UNITARY else max_n
        for N, k in cartesian(range(1, n_max + 1), range(1, max_k + 1)):
            g = GroupSpec(fam, N)
            rng = random.Random(f"{seed}-product-{fam.value}-{N}-{k}")
            for trial in range(trials):
                q = _product_query(g, rng, k)
                r = product_average(q)
                p = {"group": g.name, "k": k, "xs": _fmt(q.xs), "inverse_side": _fmt(q.inverse_side)}
                other = next(name for name in r.forms if name not in ("eps-sum", "xi-sum"))
                closed = r.forms.get("eps-sum", r.forms.get("xi-sum"))
                cases.append(compare("product-character", p, closed, r.forms[other]))
                cases.append(compare("product-ct", p, r.value, product_ct(q)))
    # one-row sums at k = 1
    for N in range(1, 7):
        x = Fraction(2, 3)
        sp = product_average(ProductQuery(GroupSpec(Family.SYMPLECTIC, N), xs=[x])).value
        cases.append(compare("one-row-sp", {"N": N, "x": str(x)}, sp, sum((x ** (2 * j) for j in range(N + 1)), Fraction(0))))
        so = product_average(ProductQuery(GroupSpec(Family.SO_EVEN, N), xs=[x])).value
        cases.append(compare("one-row-so", {"N": N, "x": str(x)}, so, 1 + x ** (2 * N)))
    return cases


def task_ratios(max_k: int, max_n: int, seed: int, D: int = 30, tol: float = 1e-9) -> list[Case]:
    cases = []
    for fam in FAMILIES:
        for k, l in cartesian(range(0, min(max_k, 2) + 1), range(0, 3)):
            for N in sorted({max(l, 1), l + 1, 3}):
                if fam is Family.UNITARY and N > 2:
                    continue
                g = GroupSpec(fam, N)
                rng = random.Random(f"{seed}-ratio-{fam.value}-{k}-{l}-{N}")
                xs = random_rationals(rng, k, small=True)
                ys = [y / 2 for y in random_rationals(rng, l, small=True)]
                p = {"group": g.name, "k": k, "l": l, "xs": _fmt(xs), "ys": _fmt(ys), "D": D}
                if fam is Family.UNITARY:
                    half = len(ys) // 2
                    q = RatioQuery(g, xs=xs, gammas=ys[half:], deltas=ys[:half])
                    f = truncated_ratio_integrand(g, xs, (), D, gammas=q.gammas, deltas=q.deltas)
                else:
                    q = RatioQuery(g, xs=xs, ys=ys)
                    f = truncated_ratio_integrand(g, xs, ys, D)
                closed = ratio_average(q).value
                t0 = time.perf_counter()
                oracle = ct_average(f)
                bound = ratio_tail_bound(f)
                cases.append(
                    compare("ratio-ct", p, closed, oracle, tol=tol, elapsed=time.perf_counter() - t0, note=f"tail bound {bound:.3e}")
                )
                if l == 0:
                    cases.append(compare("ratio-empty-denominator", p, closed, product_average(q).value))
    return cases


def task_symmetry(max_k: int, max_n: int, seed: int) -> list[Case]:
    rng = random.Random(seed)
    cases = []
    for fam in FAMILIES:
        if fam is Family.UNITARY:
            continue
        g = GroupSpec(fam, 3)
        xs = random_rationals(rng, 3, small=True)
        ys = random_rationals(rng, 2, small=True)
        base = ratio_average(RatioQuery(g, xs=xs, ys=ys)).value
        swapped = ratio_average(RatioQuery(g, xs=xs[::-1], ys=ys[::-1])).value
        cases.append(compare("parameter-symmetry", {"group": g.name, "xs": _fmt(xs), "ys": _fmt(ys)}, base, swapped))
    return cases


# rectangular identities


def task_rect(max_k: int, max_n: int, seed: int, k: int = 1, N: int = 1, ls: bool = True) -> list[Case]:
    return verify_rectangular_identities(k, N, seed=seed, ls=ls).cases


# oracle cross-checks


def _random_class_function(g: GroupSpec, rng: random.Random) -> ClassFunction:
    """A random Weyl-invariant polynomial: a combination of products of
    characteristic polynomials at random rational parameters."""
    N = g.N
    body = Laurent.zero(N)
    for _ in range(rng.randint(1, 3)):
        coeff = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        if g.family is Family.UNITARY:
            a = random_rationals(rng, rng.randint(0, 2))
            b = random_rationals(rng, rng.randint(0, 2))
            part = unitary_product_body(N, a, b)
        else:
            part = char_poly_integrand(g, random_rationals(rng, rng.randint(0, 2))).body
        body = body + part.scale(coeff)
    return ClassFunction(g, body)


def task_ct_vs_quad(max_k: int, max_n: int, seed: int, count: int = 20) -> list[Case]:
    cases = []
    for fam in (Family.UNITARY, Family.SYMPLECTIC, Family.SO_EVEN, Family.SO_ODD):
        for N in range(1, min(max_n, 3) + 1):
            g = GroupSpec(fam, N)
            order = 40 if N < 3 else 24
            cases.append(compare("density-normalization", {"group": g.name}, quad_average(g, ClassFunction(g, Laurent.one(N)), order), 1.0, tol=1e-10))
            rng = random.Random(f"{seed}-cq-{fam.value}-{N}")
            for i in range(count):
                f = _random_class_function(g, rng)
                exact = float(ct_average(f))
                tol = 1e-8 * max(1.0, abs(exact))
                cases.append(compare("ct-vs-quad", {"group": g.name, "case": i}, exact, quad_average(g, f, order), tol=tol))
    x = Fraction(1, 2)
    so3 = GroupSpec(Family.SO_ODD, 1)
    cases.append(compare("so3-product-quad", {"x": "1/2"}, quad_average(so3, char_poly_integrand(so3, [x], -1), 40), 7 / 8, tol=1e-8))
    return cases


def _mc_case(identity, params, mean, stderr, exact) -> Case:
    tol = max(4 * stderr, 1e-12)
    case = compare(identity, params, mean, float(exact), tol=tol, note=f"stderr {stderr:.3e}")
    return case


def task_monte_carlo(max_k: int, max_n: int, seed: int, samples: int = 200_000) -> list[Case]:
    cases = []
    x = 0.5
    for N in (1, 2):
        mean, se = mc_matrix_average(2 * N, -1, lambda e: np.prod(1 + x * e, axis=-1), samples, seed)
        exact = product_average(ProductQuery(GroupSpec(Family.O_MINUS, N), xs=[Fraction(1, 2)])).value
        cases.append(_mc_case("o-minus-product-mc", {"N": N, "x": "1/2", "samples": samples}, mean, se, exact))
    mean, se = mc_matrix_average(4, None, lambda e: np.real(np.prod(1 - e, axis=-1)) ** 2, samples, seed)
    cases.append(_mc_case("o-moment-mc", {"N": 2, "k": 2, "samples": samples}, mean, se, moment(GroupSpec(Family.O_FULL, 2), 2).value))
    mean, se = mc_matrix_average(4, 1, lambda e: np.real(np.prod(1 - e, axis=-1)) ** 2, samples, seed)
    cases.append(_mc_case("so-moment-mc", {"N": 2, "k": 2, "samples": samples}, mean, se, moment(GroupSpec(Family.SO_EVEN, 2), 2).value))
    return cases


# orchestration


def suite_tasks(suite: str, max_k: int = 3, max_n: int = 3, seed: int = 0, samples: int = 200_000) -> list[tuple]:
    """(function, kwargs) pairs for a suite; 'all' concatenates every suite."""
    base = {"max_k": max_k, "max_n": max_n, "seed": seed}
    if suite == "all":
        return [t for name in SUITES for t in suite_tasks(name, max_k, max_n, seed, samples)]
    if suite == "symfunc":
        fns = [task_cauchy, task_dual_pair_expand, task_pieri, task_lr, task_schur_algorithms, task_dimensions]
    elif suite == "ls":
        fns = [task_ls, task_generalized_cauchy, task_ls_laplace, task_hopf]
    elif suite == "characters":
        fns = [task_dual_pairs, task_group_cauchy, task_schur_orthogonality, task_character_dims]
    elif suite == "averages":
        fns = [task_moments, task_products, task_ratios, task_symmetry]
    elif suite == "rect":
        return [
            (task_rect, {**base, "k": k, "N": N, "ls": k <= 2})
            for k in range(1, max_k + 1)
            for N in range(1, max_n + 1)
        ]
    elif suite == "oracle-crosscheck":
        return [(task_ct_vs_quad, base), (task_monte_carlo, {**base, "samples": samples})]
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    return [(fn, base) for fn in fns]


def _run_task(task) -> list[Case]:
    fn, kwargs = task
    return fn(**kwargs)


def run_suite(suite: str, max_k: int = 3, max_n: int = 3, seed: int = 0, threads: int = 1, samples: int = 200_000) -> Report:
    tasks = suite_tasks(suite, max_k, max_n, seed, samples)
    report = Report(suite, settings={"max_k": max_k, "max_n": max_n, "seed": seed, "threads": threads, "samples": samples})
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    for cases in results:
        for case in cases:
            report.add(case)
    return report
