"""Schur polynomials, Littlewood–Richardson coefficients and the classical
Cauchy-type identities, all in finitely many variables."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import factorial, prod
from typing import Mapping, Sequence

from .errors import NotSymmetric, RepeatedPoint
from .exact_algebra import Laurent, bareiss_det, determinant, rat
from .partitions import (
    Partition,
    box_complement,
    conjugate,
    contents,
    enumerate_in_box,
    hook_product,
    horizontal_strips_added,
    partitions_up_to,
    vertical_strips_added,
)


class SchurExpansion(dict):
    """Map Partition -> nonzero integer coefficient."""

    def __init__(self, data: Mapping | None = None):
        super().__init__()
        for lam, c in (data or {}).items():
            if c:
                self[Partition(lam)] = c

    def add(self, lam, c) -> None:
        lam = Partition(lam)
        v = self.get(lam, 0) + c
        if v:
            self[lam] = v
        else:
            self.pop(lam, None)

    def to_record(self) -> dict[str, int]:
        return {lam.to_text(): int(c) for lam, c in sorted(self.items(), reverse=True)}


# elementary and complete symmetric polynomials


@lru_cache(maxsize=None)
def elementary(r: int, n: int) -> Laurent:
    if r < 0 or r > n:
        return Laurent.zero(n)
    terms = {}
    for idx in combinations(range(n), r):
        e = [0] * n
        for i in idx:
            e[i] = 1
        terms[tuple(e)] = 1
    return Laurent(n, terms)


@lru_cache(maxsize=None)
def complete(r: int, n: int) -> Laurent:
    if r < 0:
        return Laurent.zero(n)
    if n == 0:
        return Laurent.one(0) if r == 0 else Laurent.zero(0)
    terms = {}
    for idx in combinations_with_replacement(range(n), r):
        e = [0] * n
        for i in idx:
            e[i] += 1
        terms[tuple(e)] = 1
    return Laurent(n, terms)


def elementary_lambda(lam: Sequence[int], n: int) -> Laurent:
    out = Laurent.one(n)
    for r in lam:
        out = out * elementary(r, n)
    return out


def complete_lambda(lam: Sequence[int], n: int) -> Laurent:
    out = Laurent.one(n)
    for r in lam:
        out = out * complete(r, n)
    return out


def complete_values(points: Sequence, rmax: int) -> list[Fraction]:
    """[h_0, …, h_rmax] evaluated at the points."""
    h = [Fraction(1)] + [Fraction(0)] * rmax
    for x in points:
        x = rat(x)
        for r in range(1, rmax + 1):
            h[r] += x * h[r - 1]
    return h


def elementary_values(points: Sequence, rmax: int) -> list[Fraction]:
    e = [Fraction(1)] + [Fraction(0)] * rmax
    for x in points:
        x = rat(x)
        for r in range(rmax, 0, -1):
            e[r] += x * e[r - 1]
    return e


# Schur polynomials


@lru_cache(maxsize=None)
def _schur(lam: Partition, n: int) -> Laurent:
    ell = len(lam)
    if ell > n:
        return Laurent.zero(n)
    if ell == 0:
        return Laurent.one(n)
    if ell > lam[0]:
        # the dual form has the smaller matrix
        lc = conjugate(lam)
        matrix = [[elementary(lc[i] - i + j, n) for j in range(len(lc))] for i in range(len(lc))]
    else:
        matrix = [[complete(lam[i] - i + j, n) for j in range(ell)] for i in range(ell)]
    return determinant(matrix)


def schur(lam: Sequence[int], n: int) -> Laurent:
    """s_λ(x_1..x_n) by the Jacobi–Trudi determinant det(h_{λ_i−i+j}), or
    its dual det(e_{λ'_i−i+j}) when λ has more rows than columns."""
    return _schur(Partition(lam), n)


def schur_eval(lam: Sequence[int], points: Sequence) -> Fraction:
    """s_λ at a rational point via the Jacobi–Trudi determinant of numbers;
    valid at coincident points too."""
    lam = Partition(lam)
    pts = [rat(p) for p in points]
    if len(lam) > len(pts):
        return Fraction(0)
    ell = len(lam)
    if ell == 0:
        return Fraction(1)
    h = complete_values(pts, lam[0] + ell)
    hr = lambda r: h[r] if r >= 0 else 0
    return bareiss_det([[hr(lam[i] - i + j) for j in range(ell)] for i in range(ell)])


def schur_eval_bialternant(lam: Sequence[int], points: Sequence) -> Fraction:
    """s_λ as det(x_j^{λ_i+n−i}) / det(x_j^{n−i}) at distinct points."""
    lam = Partition(lam)
    pts = [rat(p) for p in points]
    n = len(pts)
    if len(set(pts)) < n:
        raise RepeatedPoint("the bialternant needs pairwise distinct points")
    if len(lam) > n:
        return Fraction(0)
    a = lam.padded(n)
    num = bareiss_det([[x ** (a[i] + n - 1 - i) for x in pts] for i in range(n)])
    den = bareiss_det([[x ** (n - 1 - i) for x in pts] for i in range(n)])
    return num / den


def ssyt(lam: Sequence[int], n: int):
    """Yield every semistandard tableau of shape λ with entries 1..n, as a
    tuple of rows."""
    lam = Partition(lam)
    cells = list(lam.boxes())

    def rec(idx: int, filled: dict):
        if idx == len(cells):
            yield tuple(tuple(filled[(i, j)] for j in range(1, lam.part(i) + 1)) for i in range(1, len(lam) + 1))
            return
        i, j = cells[idx]
        low = 1
        if j > 1:
            low = filled[(i, j - 1)]
        if i > 1:
            low = max(low, filled[(i - 1, j)] + 1)
        for v in range(low, n + 1):
            filled[(i, j)] = v
            yield from rec(idx + 1, filled)
        filled.pop((i, j), None)

    yield from rec(0, {})


def schur_ssyt(lam: Sequence[int], n: int) -> Laurent:
    """s_λ as the generating function of semistandard tableaux."""
    terms: dict = {}
    for t in ssyt(lam, n):
        e = [0] * n
        for row in t:
            for v in row:
                e[v - 1] += 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + 1
    return Laurent(n, terms)


def schur_dim(lam: Sequence[int], n: int) -> int:
    """s_λ(1^n) by the Weyl dimension formula ∏_{i<j}(l_i − l_j)/(j − i)."""
    lam = Partition(lam)
    if len(lam) > n:
        return 0
    a = lam.padded(n)
    num = prod(a[i] - a[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def schur_dim_hook_content(lam: Sequence[int], n: int) -> int:
    """s_λ(1^n) = ∏_u (n + c(u)) / h(u)."""
    num = prod(n + c for c in contents(lam).values())
    return num // hook_product(lam)


# Littlewood–Richardson coefficients


def _dominant_part(p: Laurent) -> dict[tuple, int]:
    return {e: c for e, c in p.terms.items() if all(e[i] >= e[i + 1] for i in range(len(e) - 1))}


@lru_cache(maxsize=None)
def _schur_dominant(lam: Partition, n: int) -> tuple:
    return tuple(_dominant_part(schur(lam, n)).items())


def decompose_in_schur_basis(p: Laurent, n: int | None = None, check: bool = True) -> SchurExpansion:
    """Expand a symmetric polynomial in Schur polynomials by repeatedly
    peeling off the lexicographically largest monomial."""
    n = p.nvars if n is None else n
    if p.has_negative_exponents():
        raise NotSymmetric("negative exponents are not supported")
    if check:
        for e, c in p.terms.items():
            if p.terms.get(tuple(sorted(e, reverse=True))) != c:
                raise NotSymmetric(f"coefficient of {e} differs from its sorted image")
    rest = _dominant_part(p)
    out = SchurExpansion()
    while rest:
        lead = max(rest)
        c = rest[lead]
        lam = Partition(lead)
        out.add(lam, c)
        for e, k in _schur_dominant(lam, n):
            v = rest.get(e, 0) - c * k
            if v:
                rest[e] = v
            else:
                rest.pop(e, None)
    return out


@lru_cache(maxsize=None)
def _lr_expand(mu: Partition, nu: Partition) -> SchurExpansion:
    if not mu:
        return SchurExpansion({nu: 1})
    if not nu:
        return SchurExpansion({mu: 1})
    n = len(mu) + len(nu)
    return decompose_in_schur_basis(schur(mu, n) * schur(nu, n), n, check=False)


def lr_expand(mu: Sequence[int], nu: Sequence[int]) -> SchurExpansion:
    """s_μ·s_ν = Σ_λ c^λ_{μν} s_λ. The product is formed in ℓ(μ)+ℓ(ν)
    variables, enough for every λ that can occur."""
    mu, nu = Partition(mu), Partition(nu)
    key = (mu, nu) if mu >= nu else (nu, mu)
    return SchurExpansion(_lr_expand(*key))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not lam.contains(mu) or not lam.contains(nu):
        return 0
    return _lr_expand(*((mu, nu) if mu >= nu else (nu, mu))).get(lam, 0)


def lr_tableau_count(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Count LR tableaux: semistandard fillings of λ/μ with content ν whose
    right-to-left, top-to-bottom reading word is a lattice word."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size or not lam.contains(mu):
        return 0
    cells = [
        (i, j)
        for i in range(1, len(lam) + 1)
        for j in range(lam.part(i), mu.part(i), -1)
    ]
    m = len(nu)
    filled: dict = {}
    counts = [0] * (m + 1)

    def rec(idx: int) -> int:
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        high = m
        right = filled.get((i, j + 1))
        if right is not None:
            high = min(high, right)
        above = filled.get((i - 1, j))
        low = above + 1 if above is not None else 1
        total = 0
        for v in range(low, high + 1):
            if counts[v] >= nu.part(v):
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filled[(i, j)] = v
            total += rec(idx + 1)
            counts[v] -= 1
            del filled[(i, j)]
        return total

    return rec(0)


def pieri_h(mu: Sequence[int], r: int) -> SchurExpansion:
    """s_μ·h_r as a sum over horizontal r-strips."""
    return SchurExpansion({lam: 1 for lam in horizontal_strips_added(mu, r)})


def pieri_e(mu: Sequence[int], r: int) -> SchurExpansion:
    """s_μ·e_r as a sum over vertical r-strips."""
    return SchurExpansion({lam: 1 for lam in vertical_strips_added(mu, r)})


# classical identities


def _embed(p: Laurent, nvars: int, offset: int) -> Laurent:
    return p.embed(nvars, list(range(offset, offset + p.nvars)))


def geometric_factor(nvars: int, exp: Sequence[int], coeff, max_power: int) -> Laurent:
    """Σ_{m=0}^{max_power} (coeff·x^exp)^m."""
    c = rat(coeff)
    return Laurent(
        nvars,
        {tuple(m * e for e in exp): c ** m for m in range(max_power + 1)},
    )


def truncated_product(factors, vars: Sequence[int], D: int, nvars: int) -> Laurent:
    out = Laurent.one(nvars)
    for f in factors:
        out = (out * f).truncate_total_degree(vars, D)
    return out


def cauchy_sides(p: int, q: int, D: int = 8) -> tuple[Laurent, Laurent]:
    """∏ 1/(1 − x_i y_j) and Σ_λ s_λ(x) s_λ(y) through total degree D."""
    n = p + q
    allv = list(range(n))
    factors = []
    for i in range(p):
        for j in range(q):
            e = [0] * n
            e[i] = 1
            e[p + j] = 1
            factors.append(geometric_factor(n, e, 1, D // 2))
    lhs = truncated_product(factors, allv, D, n)
    rhs = Laurent.zero(n)
    for lam in partitions_up_to(D // 2, min(p, q)):
        rhs = rhs + _embed(schur(lam, p), n, 0) * _embed(schur(lam, q), n, p)
    return lhs, rhs.truncate_total_degree(allv, D)


def verify_cauchy(p: int, q: int, D: int = 8) -> bool:
    lhs, rhs = cauchy_sides(p, q, D)
    return lhs == rhs


def dual_cauchy_sides(p: int, q: int) -> tuple[Laurent, Laurent]:
    """∏ (1 + x_i y_j) and Σ_{λ ⊆ q^p} s_λ(x) s_{λ'}(y)."""
    n = p + q
    lhs = Laurent.one(n)
    for i in range(p):
        for j in range(q):
            e = [0] * n
            e[i] = 1
            e[p + j] = 1
            lhs = lhs * (Laurent.monomial(e) + 1)
    rhs = Laurent.zero(n)
    for lam in enumerate_in_box(q, p):
        rhs = rhs + _embed(schur(lam, p), n, 0) * _embed(schur(conjugate(lam), q), n, p)
    return lhs, rhs


def verify_dual_cauchy(p: int, q: int) -> bool:
    lhs, rhs = dual_cauchy_sides(p, q)
    return lhs == rhs


def branching_split_sides(lam: Sequence[int], p: int, q: int) -> tuple[Laurent, Laurent]:
    """s_λ(x, y) and Σ c^λ_{μν} s_μ(x) s_ν(y)."""
    lam = Partition(lam)
    n = p + q
    lhs = schur(lam, n)
    rhs = Laurent.zero(n)
    for size in range(lam.size + 1):
        for mu in partitions_up_to(size):
            if mu.size != size or not lam.contains(mu):
                continue
            for nu in partitions_up_to(lam.size - size):
                if nu.size != lam.size - size:
                    continue
                c = lr_coefficient(lam, mu, nu)
                if c:
                    rhs = rhs + (_embed(schur(mu, p), n, 0) * _embed(schur(nu, q), n, p)).scale(c)
    return lhs, rhs


def verify_branching_split(lam: Sequence[int], p: int, q: int) -> bool:
    lhs, rhs = branching_split_sides(lam, p, q)
    return lhs == rhs


def dual_pair_expansion(k: int, N: int) -> tuple[Laurent, Laurent]:
    """Both sides of ∏_{i,n}(x_i − t_n) = Σ_{λ⊆N^k} (−1)^{|λ̃|} s_λ(x) s_λ̃(t)
    as polynomials in k + N variables (x first)."""
    n = k + N
    lhs = Laurent.one(n)
    for i in range(k):
        for j in range(N):
            lhs = lhs * (Laurent.var(i, n) - Laurent.var(k + j, n))
    rhs = Laurent.zero(n)
    for lam in enumerate_in_box(N, k):
        tilde = box_complement(lam, N, k)
        term = _embed(schur(lam, k), n, 0) * _embed(schur(tilde, N), n, k)
        rhs = rhs + (term if tilde.size % 2 == 0 else -term)
    return lhs, rhs


def verify_dual_pair_expand(k: int, N: int) -> bool:
    lhs, rhs = dual_pair_expansion(k, N)
    return lhs == rhs


def rectangle_hook_product(N: int, k: int) -> int:
    """∏_{j=0}^{N−1} (j+k)!/j!, the hook product of the k×N rectangle."""
    out = 1
    for j in range(N):
        out *= factorial(j + k) // factorial(j)
    return out


def count_ssyt(lam: Sequence[int], n: int) -> int:
    return sum(1 for _ in ssyt(lam, n))

