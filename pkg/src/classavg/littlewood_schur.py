"""Littlewood–Schur (hook Schur) functions LS_λ(x; y) and their identities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import PreconditionViolated
from .exact_algebra import Laurent, rat
from .partitions import (
    Partition,
    conjugate,
    horizontal_strips_removed,
    partitions_of,
    partitions_up_to,
    vertical_strips_removed,
)
from .symmetric_functions import geometric_factor, lr_coefficient, lr_expand, schur, schur_eval, truncated_product


@dataclass(frozen=True)
class LSFunction:
    shape: Partition
    k: int
    l: int
    value: Laurent  # x-block is variables 0..k-1, y-block is k..k+l-1


def _sub_partitions(lam: Partition):
    """All μ ⊆ λ."""
    def rec(i: int, cap: int, acc: list[int]):
        if i == len(lam):
            yield Partition(acc)
            return
        for v in range(min(cap, lam[i]), -1, -1):
            if v == 0:
                yield Partition(acc)
                break
            yield from rec(i + 1, v, acc + [v])

    yield from rec(0, lam[0] if lam else 0, [])


@lru_cache(maxsize=None)
def _ls(lam: Partition, k: int, l: int) -> Laurent:
    n = k + l
    out = Laurent.zero(n)
    for mu in _sub_partitions(lam):
        if len(mu) > k:
            continue
        sx = schur(mu, k).embed(n, list(range(k)))
        for nu in partitions_of(lam.size - mu.size):
            if not lam.contains(nu) or (nu and nu[0] > l):
                continue
            c = lr_coefficient(lam, mu, nu)
            if c:
                sy = schur(conjugate(nu), l).embed(n, list(range(k, n)))
                out = out + (sx * sy).scale(c)
    return out


def ls(lam: Sequence[int], k: int, l: int) -> LSFunction:
    """LS_λ(x_1..x_k; y_1..y_l) = Σ c^λ_{μν} s_μ(x) s_{ν'}(y)."""
    lam = Partition(lam)
    return LSFunction(lam, k, l, _ls(lam, k, l))


def ls_in_y(lam: Sequence[int], xs: Sequence, l: int) -> Laurent:
    """LS_λ(x; y_1..y_l) with the x-block evaluated at rational points and
    the y-block kept symbolic. Peels one y-variable at a time through
    vertical strips, bottoming out at s_μ(x)."""
    xs = tuple(rat(x) for x in xs)
    k = len(xs)

    @lru_cache(maxsize=None)
    def rec(mu: Partition, m: int) -> Laurent:
        if m == 0:
            return Laurent.const(schur_eval(mu, xs), l) if len(mu) <= k else Laurent.zero(l)
        if len(mu) > 0 and mu.part(k + 1) > m:
            return Laurent.zero(l)
        out = Laurent.zero(l)
        for nu in vertical_strips_removed(mu):
            inner = rec(nu, m - 1)
            if inner:
                out = out + inner * Laurent.var(m - 1, l, mu.size - nu.size)
        return out

    return rec(Partition(lam), l)


def ls_eval(lam: Sequence[int], xs: Sequence, ys: Sequence) -> Fraction:
    """Numerical value of LS_λ at rational points."""
    return ls_in_y(lam, xs, len(ys)).evaluate(list(ys)) if ys else schur_eval(lam, xs)


def ls_rectangle(k: int, l: int, m: int) -> Laurent:
    """(∏x_i)^m ∏_{i,j}(x_i + y_j), the value of LS at the k×(l+m) rectangle."""
    if m < 0:
        raise PreconditionViolated("m must be nonnegative")
    n = k + l
    out = Laurent.monomial([m] * k + [0] * l)
    for i in range(k):
        for j in range(l):
            out = out * (Laurent.var(i, n) + Laurent.var(k + j, n))
    return out


def _swap_blocks(p: Laurent, first: int, second: int) -> Laurent:
    """Move the first block of variables behind the second."""
    return p.embed(first + second, [second + i for i in range(first)] + list(range(second)))


def interchange_sides(lam: Sequence[int], k: int, l: int) -> tuple[Laurent, Laurent]:
    """LS_λ(x; y) and LS_{λ'}(y; x)."""
    lam = Partition(lam)
    left = ls(lam, k, l).value
    right = _swap_blocks(ls(conjugate(lam), l, k).value, l, k)
    return left, right


def verify_interchange(lam: Sequence[int], k: int, l: int) -> bool:
    left, right = interchange_sides(lam, k, l)
    return left == right


def generalized_cauchy_sides(m: int, n: int, s: int, t: int, D: int = 6) -> tuple[Laurent, Laurent]:
    """Σ_λ LS_λ(α;β) LS_λ(γ;δ) and ∏(1−αγ)⁻¹ ∏(1+αδ) ∏(1+βγ) ∏(1−βδ)⁻¹
    through total degree D. Variables are ordered α, β, γ, δ."""
    V = m + n + s + t
    a0, b0, g0, d0 = 0, m, m + n, m + n + s
    allv = list(range(V))

    def mono(i, j):
        e = [0] * V
        e[i] += 1
        e[j] += 1
        return e

    factors = []
    for i in range(m):
        for j in range(s):
            factors.append(geometric_factor(V, mono(a0 + i, g0 + j), 1, D // 2))
        for j in range(t):
            factors.append(Laurent.monomial(mono(a0 + i, d0 + j)) + 1)
    for i in range(n):
        for j in range(s):
            factors.append(Laurent.monomial(mono(b0 + i, g0 + j)) + 1)
        for j in range(t):
            factors.append(geometric_factor(V, mono(b0 + i, d0 + j), 1, D // 2))
    rhs = truncated_product(factors, allv, D, V)
    lhs = Laurent.zero(V)
    for lam in partitions_up_to(D // 2):
        p1 = ls(lam, m, n).value
        p2 = ls(lam, s, t).value
        if p1 and p2:
            lhs = lhs + p1.embed(V, list(range(m + n))) * p2.embed(V, list(range(m + n, V)))
    return lhs.truncate_total_degree(allv, D), rhs


def verify_generalized_cauchy(m: int, n: int, s: int, t: int, D: int = 6) -> bool:
    lhs, rhs = generalized_cauchy_sides(m, n, s, t, D)
    return lhs == rhs


def gen_pieri_sides(lam: Sequence[int], k: int, l: int) -> list[tuple[str, Laurent, Laurent]]:
    """Both single-variable peelings of LS_λ(x_1..x_k; y_1..y_l):
    over horizontal strips in x_k and over vertical strips in y_l. Each
    entry is (peeled variable, LS_λ, peeled sum)."""
    lam = Partition(lam)
    n = k + l
    target = ls(lam, k, l).value
    out = []
    if k >= 1:
        total = Laurent.zero(n)
        for mu in horizontal_strips_removed(lam):
            inner = ls(mu, k - 1, l).value
            if inner:
                pos = list(range(k - 1)) + list(range(k, n))
                total = total + inner.embed(n, pos) * Laurent.var(k - 1, n, lam.size - mu.size)
        out.append(("x", target, total))
    if l >= 1:
        total = Laurent.zero(n)
        for mu in vertical_strips_removed(lam):
            inner = ls(mu, k, l - 1).value
            if inner:
                total = total + inner.embed(n, list(range(n - 1))) * Laurent.var(n - 1, n, lam.size - mu.size)
        out.append(("y", target, total))
    return out


def verify_gen_pieri(lam: Sequence[int], k: int, l: int) -> bool:
    return all(a == b for _, a, b in gen_pieri_sides(lam, k, l))


def xi_subsets(L: int, K: int):
    """The permutations σ with σ(1)<…<σ(L) and σ(L+1)<…<σ(L+K), as
    (first block, second block) index tuples, 0-based."""
    for first in combinations(range(L + K), L):
        second = tuple(i for i in range(L + K) if i not in first)
        yield first, second


def ls_laplace_sides(lam: Sequence[int], L: int, K: int, alphas: Sequence, gammas: Sequence) -> tuple[Fraction, Fraction]:
    """Both sides of the minor-sum expansion of LS_λ(α_1..α_{L+K}; γ)."""
    lam = Partition(lam)
    Q = len(gammas)
    if len(lam) > L + K:
        raise PreconditionViolated("λ has more than L+K parts")
    if lam.part(L) < lam.part(L + 1) + Q:
        raise PreconditionViolated("need λ_L ≥ λ_{L+1} + Q")
    alphas = [rat(a) for a in alphas]
    if len(alphas) != L + K or len(set(alphas)) != L + K:
        raise PreconditionViolated("need L+K distinct α values")
    tau = Partition([lam.part(i) + K for i in range(1, L + 1)])
    rho = Partition([lam.part(i) for i in range(L + 1, L + K + 1)])
    lhs = ls_eval(lam, alphas, gammas)
    rhs = Fraction(0)
    for first, second in xi_subsets(L, K):
        weight = Fraction(1)
        for a in first:
            for b in second:
                weight /= alphas[a] - alphas[b]
        rhs += (
            weight
            * ls_eval(tau, [alphas[a] for a in first], gammas)
            * ls_eval(rho, [alphas[b] for b in second], gammas)
        )
    return lhs, rhs


def verify_ls_laplace(lam: Sequence[int], L: int, K: int, Q: int, alphas: Sequence | None = None, gammas: Sequence | None = None) -> bool:
    if alphas is None:
        alphas = [Fraction(2 + 3 * i, 1 + i) for i in range(L + K)]
    if gammas is None:
        gammas = [Fraction(1, 3 + 2 * j) for j in range(Q)]
    if len(gammas) != Q:
        raise PreconditionViolated("need Q γ values")
    lhs, rhs = ls_laplace_sides(lam, L, K, alphas, gammas)
    return lhs == rhs


def berele_regev_sides(lam: Sequence[int], k: int, l: int) -> tuple[Laurent, Laurent]:
    """LS_λ and s_ν(x) s_{η'}(y) ∏(x_i + y_j) for λ = (l^k + ν) ∪ η."""
    lam = Partition(lam)
    if lam.part(k) < l or lam.part(k + 1) > l:
        raise PreconditionViolated("need λ_k ≥ l ≥ λ_{k+1}")
    nu = Partition(lam.part(i) - l for i in range(1, k + 1))
    eta = Partition(lam[k:])
    n = k + l
    right = (
        schur(nu, k).embed(n, list(range(k)))
        * schur(conjugate(eta), l).embed(n, list(range(k, n)))
        * ls_rectangle(k, l, 0)
    )
    return ls(lam, k, l).value, right


def verify_berele_regev(lam: Sequence[int], k: int, l: int) -> bool:
    left, right = berele_regev_sides(lam, k, l)
    return left == right


def hopf_sides(mu, nu, sigma, tau) -> tuple[int, int]:
    """Σ_λ c^λ_{μν} c^λ_{στ} and Σ c^σ_{φη} c^τ_{ψξ} c^μ_{φξ} c^ν_{ψη}."""
    mu, nu, sigma, tau = map(Partition, (mu, nu, sigma, tau))
    if mu.size + nu.size != sigma.size + tau.size:
        return 0, 0
    st = lr_expand(sigma, tau)
    lhs = sum(c * st.get(lam, 0) for lam, c in lr_expand(mu, nu).items())
    rhs = 0
    for a in range(min(mu.size, sigma.size) + 1):
        for phi in partitions_of(a):
            for eta in partitions_of(sigma.size - a):
                c1 = lr_coefficient(sigma, phi, eta)
                if not c1:
                    continue
                for xi in partitions_of(mu.size - a):
                    c3 = lr_coefficient(mu, phi, xi)
                    if not c3:
                        continue
                    for psi in partitions_of(tau.size - xi.size):
                        c2 = lr_coefficient(tau, psi, xi)
                        if c2:
                            rhs += c1 * c2 * c3 * lr_coefficient(nu, psi, eta)
    return lhs, rhs


def verify_hopf(mu, nu, sigma, tau) -> bool:
    lhs, rhs = hopf_sides(mu, nu, sigma, tau)
    return lhs == rhs
