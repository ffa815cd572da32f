"""Irreducible characters of Sp(2n), SO(2n+1), SO(2n) and O(2n) as exact
alternant ratios, their dimensions, and the identities that tie them to
Schur functions."""

from __future__ import annotations

import random
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .errors import LabelTooLong, PreconditionViolated, SingularPoint, UnsupportedGroup
from .exact_algebra import Laurent, bareiss_det, random_rationals, rat
from .groups import Family, GroupSpec, parse_family
from .partitions import (
    Partition,
    SignedPartition,
    box_complement,
    conjugate,
    enumerate_in_box,
    hook_product,
    is_even,
    partitions_of,
    partitions_up_to,
)
from .symmetric_functions import geometric_factor, lr_coefficient, schur, schur_dim, schur_eval, truncated_product


def _label(label) -> SignedPartition:
    if isinstance(label, SignedPartition):
        return label
    return SignedPartition(Partition(label), 1)


def _ratio(num: Fraction, den: Fraction) -> Fraction:
    if den == 0:
        raise SingularPoint("the denominator alternant vanishes at these points")
    return num / den


def _sp_char(lam: Partition, xs: list[Fraction]) -> Fraction:
    n = len(xs)
    a = lam.padded(n)
    num = bareiss_det([[x ** (a[i] + n - i) - x ** -(a[i] + n - i) for x in xs] for i in range(n)])
    den = bareiss_det([[x ** (n - i) - x ** -(n - i) for x in xs] for i in range(n)])
    return _ratio(num, den)


def _so_odd_char(lam: Partition, xs: list[Fraction]) -> Fraction:
    # each column of the half-integer alternants is multiplied by x_j^{1/2}
    n = len(xs)
    a = lam.padded(n)
    num = bareiss_det([[x ** (a[i] + n - i) - x ** -(a[i] + n - 1 - i) for x in xs] for i in range(n)])
    den = bareiss_det([[x ** (n - i) - x ** -(n - 1 - i) for x in xs] for i in range(n)])
    return _ratio(num, den)


def _so_even_parts(lam: Partition, xs: list[Fraction]) -> tuple[Fraction, Fraction, Fraction]:
    """The symmetric alternant, the antisymmetric alternant and the
    denominator det(x_j^{n−i} + x_j^{−(n−i)})."""
    n = len(xs)
    a = lam.padded(n)
    d1 = bareiss_det([[x ** (a[i] + n - 1 - i) + x ** -(a[i] + n - 1 - i) for x in xs] for i in range(n)])
    d2 = bareiss_det([[x ** (a[i] + n - 1 - i) - x ** -(a[i] + n - 1 - i) for x in xs] for i in range(n)])
    den = bareiss_det([[x ** (n - 1 - i) + x ** -(n - 1 - i) for x in xs] for i in range(n)])
    if den == 0:
        raise SingularPoint("the denominator alternant vanishes at these points")
    return d1, d2, den


def char_eval(group, label, points: Sequence) -> Fraction:
    """Exact character value at the torus element with eigenvalues
    x_i^{±1} (plus the fixed eigenvalue 1 for SO(2n+1)).

    For SO(2n) the label sign selects λ₊ or λ₋; for O(2n) the value is
    χ₊ + χ₋ when λ_n ≠ 0 and χ₊ otherwise. The group's rank is the
    number of points.
    """
    family = group.family if isinstance(group, GroupSpec) else parse_family(group)
    lab = _label(label)
    lam = lab.base
    xs = [rat(p) for p in points]
    n = len(xs)
    if len(lam) > n:
        raise LabelTooLong(f"label {lam.to_text()} has more than {n} parts")
    if any(x == 0 for x in xs):
        raise SingularPoint("points must be nonzero")
    if family is Family.UNITARY:
        return schur_eval(lam, xs)
    if family is Family.SYMPLECTIC:
        return _sp_char(lam, xs)
    if family is Family.SO_ODD:
        return _so_odd_char(lam, xs)
    if family is Family.SO_EVEN:
        d1, d2, den = _so_even_parts(lam, xs)
        return (d1 + lab.sign * d2) / den
    if family is Family.O_FULL:
        d1, _, den = _so_even_parts(lam, xs)
        return (2 * d1 if len(lam) == n else d1) / den
    raise UnsupportedGroup(f"no character formula for {family.value}")


# dimensions


def sp_dim_weyl(lam: Sequence[int], k: int) -> int:
    lam = Partition(lam)
    if len(lam) > k:
        return 0
    mu = [lam.part(i) + k - i for i in range(1, k + 1)]
    num = prod((mu[i] - mu[j]) * (mu[i] + mu[j] + 2) for i in range(k) for j in range(i + 1, k))
    num *= prod(m + 1 for m in mu)
    den = prod(factorial(2 * i - 1) for i in range(1, k + 1))
    return num // den


def sp_dim_hook(lam: Sequence[int], k: int) -> int:
    """∏_u (2k + c(u)) / h(u) with the symplectic content c."""
    lam = Partition(lam)
    if len(lam) > k:
        return 0
    lc = conjugate(lam)
    num = 1
    for i, j in lam.boxes():
        if i <= j:
            c = i + j - lc.part(i) - lc.part(j)
        else:
            c = lam.part(i) + lam.part(j) + 2 - i - j
        num *= 2 * k + c
    return num // hook_product(lam)


def so_even_dim_weyl(lam: Sequence[int], k: int) -> int:
    """Dimension of the single SO(2k) representation λ₊ (equal to λ₋)."""
    lam = Partition(lam)
    if len(lam) > k:
        return 0
    mu = [lam.part(i) + k - i for i in range(1, k + 1)]
    num = 2 ** (k - 1) * prod((mu[i] - mu[j]) * (mu[i] + mu[j]) for i in range(k) for j in range(i + 1, k))
    den = prod(factorial(2 * i - 2) for i in range(1, k + 1))
    return num // den


def so_even_dim_hook(lam: Sequence[int], k: int) -> int:
    """∏_u (2k + c(u)) / h(u) with the orthogonal content c. When λ_k ≠ 0
    this is dim χ₊ + dim χ₋, i.e. the O(2k) dimension."""
    lam = Partition(lam)
    if len(lam) > k:
        return 0
    lc = conjugate(lam)
    num = 1
    for i, j in lam.boxes():
        if i < j:
            c = i + j - lc.part(i) - lc.part(j) - 2
        else:
            c = lam.part(i) + lam.part(j) - i - j
        num *= 2 * k + c
    return num // hook_product(lam)


def so_odd_dim_weyl(lam: Sequence[int], k: int) -> int:
    lam = Partition(lam)
    if len(lam) > k:
        return 0
    half = Fraction(1, 2)
    m = [lam.part(i) + k - i + half for i in range(1, k + 1)]
    r = [k - i + half for i in range(1, k + 1)]
    num = prod((m[i] - m[j]) * (m[i] + m[j]) for i in range(k) for j in range(i + 1, k)) * prod(m)
    den = prod((r[i] - r[j]) * (r[i] + r[j]) for i in range(k) for j in range(i + 1, k)) * prod(r)
    value = Fraction(num) / Fraction(den)
    assert value.denominator == 1
    return int(value)


def char_dim(group, label) -> int:
    """Dimension of the representation with the given label; the rank is
    group.N."""
    g = group if isinstance(group, GroupSpec) else None
    if g is None:
        raise TypeError("char_dim needs a GroupSpec")
    lab = _label(label)
    lam, k = lab.base, g.N
    fam = g.family
    if fam is Family.UNITARY:
        return schur_dim(lam, k)
    if fam is Family.SYMPLECTIC:
        return sp_dim_hook(lam, k)
    if fam is Family.SO_ODD:
        return so_odd_dim_weyl(lam, k)
    if fam is Family.SO_EVEN:
        return so_even_dim_weyl(lam, k)
    if fam is Family.O_FULL:
        d = so_even_dim_weyl(lam, k)
        return 2 * d if len(lam) == k else d
    raise UnsupportedGroup(f"no dimension formula for {fam.value}")


# dual-pair decompositions


def dual_pair_sides(family, k: int, N: int, xs: Sequence, ts: Sequence) -> tuple[Fraction, Fraction]:
    """Both sides of ∏_{i,n}(x_i + x_i⁻¹ − t_n − t_n⁻¹) = Σ_{λ⊆N^k} (−1)^{|λ̃|} χ_λ(x) χ_λ̃(t)
    for the symplectic, even orthogonal or odd orthogonal pair."""
    fam = parse_family(family)
    xs = [rat(x) for x in xs]
    ts = [rat(t) for t in ts]
    if len(xs) != k or len(ts) != N:
        raise PreconditionViolated("need k x-points and N t-points")
    lhs = prod((x + 1 / x - t - 1 / t for x in xs for t in ts), start=Fraction(1))
    rhs = Fraction(0)
    for lam in enumerate_in_box(N, k):
        tilde = box_complement(lam, N, k)
        sign = -1 if tilde.size % 2 else 1
        if fam is Family.SYMPLECTIC:
            term = _sp_char(lam, xs) * _sp_char(tilde, ts)
        elif fam is Family.SO_ODD:
            term = _so_odd_char(lam, xs) * _so_odd_char(tilde, ts)
        elif fam is Family.SO_EVEN:
            term = sum(
                char_eval(Family.SO_EVEN, SignedPartition(lam, s), xs)
                * char_eval(Family.SO_EVEN, SignedPartition(tilde, s), ts)
                for s in (1, -1)
            )
        else:
            raise UnsupportedGroup(f"no dual pair for {fam.value}")
        rhs += sign * term
    return lhs, rhs


def verify_dual_pair(family, k: int, N: int, trials: int = 10, seed: int = 0) -> bool:
    rng = random.Random(seed)
    for _ in range(trials):
        pts = random_rationals(rng, k + N)
        try:
            lhs, rhs = dual_pair_sides(family, k, N, pts[:k], pts[k:])
        except SingularPoint:
            continue
        if lhs != rhs:
            return False
    return True


# group Cauchy identities and Littlewood's parity sums


def _pair_series(l: int, D: int, diagonal: bool) -> Laurent:
    """1/∏(1 − y_i y_j) over i<j (or i≤j) through degree D."""
    factors = []
    for i in range(l):
        for j in range(i if diagonal else i + 1, l):
            e = [0] * l
            e[i] += 1
            e[j] += 1
            factors.append(geometric_factor(l, e, 1, D // 2))
    return truncated_product(factors, range(l), D, l)


def group_cauchy_sides(family, ts: Sequence, l: int, D: int) -> tuple[Laurent, Laurent]:
    """Both sides of the group Cauchy identity as series in y_1..y_l
    through degree D, with the torus point t fixed."""
    fam = parse_family(family)
    ts = [rat(t) for t in ts]
    N = len(ts)
    if l > N:
        raise PreconditionViolated("the identity is stated for N ≥ l")
    yv = list(range(l))
    factors = []
    for j in range(l):
        e = [0] * l
        e[j] = 1
        for t in ts:
            factors.append(geometric_factor(l, e, t, D))
            factors.append(geometric_factor(l, e, 1 / t, D))
        if fam is Family.SO_ODD:
            factors.append(geometric_factor(l, e, 1, D))
    lhs = truncated_product(factors, yv, D, l)
    char_family = {Family.SYMPLECTIC: Family.SYMPLECTIC, Family.SO_EVEN: Family.O_FULL, Family.SO_ODD: Family.SO_ODD}.get(fam)
    if char_family is None:
        raise UnsupportedGroup(f"no group Cauchy identity for {fam.value}")
    total = Laurent.zero(l)
    for mu in partitions_up_to(D, l):
        total = total + schur(mu, l).scale(char_eval(char_family, mu, ts))
    rhs = (_pair_series(l, D, diagonal=fam is not Family.SYMPLECTIC) * total).truncate_total_degree(yv, D)
    return lhs, rhs


def verify_group_cauchy(family, N: int, l: int, D: int = 6, seed: int = 0) -> bool:
    if l == 0:
        return True
    rng = random.Random(seed)
    ts = random_rationals(rng, N)
    lhs, rhs = group_cauchy_sides(family, ts, l, D)
    return lhs == rhs


def _branch(lam, mu, keep) -> int:
    lam, mu = Partition(lam), Partition(mu)
    r = lam.size - mu.size
    if r < 0:
        return 0
    return sum(lr_coefficient(lam, mu, beta) for beta in partitions_of(r) if keep(beta))


def branch_gl_to_sp(lam, mu) -> int:
    """Multiplicity of χ^{Sp}_μ in s_λ: Σ over β with β' even of c^λ_{μβ}."""
    return _branch(lam, mu, lambda b: is_even(conjugate(b)))


def branch_gl_to_o(lam, mu) -> int:
    """Multiplicity of χ^{O}_μ in s_λ: Σ over even β of c^λ_{μβ}."""
    return _branch(lam, mu, is_even)


def littlewood_parity_sides(kind: str, l: int, D: int) -> tuple[Laurent, Laurent]:
    """Σ_{β' even} s_β = ∏_{i<j}(1−y_iy_j)⁻¹ ("transpose-even") or
    Σ_{β even} s_β = ∏_{i≤j}(1−y_iy_j)⁻¹ ("even"), through degree D."""
    if kind not in ("transpose-even", "even"):
        raise ValueError("kind must be 'transpose-even' or 'even'")
    keep = (lambda b: is_even(conjugate(b))) if kind == "transpose-even" else is_even
    lhs = Laurent.zero(l)
    for beta in partitions_up_to(D, l):
        if keep(beta):
            lhs = lhs + schur(beta, l)
    return lhs, _pair_series(l, D, diagonal=kind == "even")


def littlewood_parity_series(kind: str, l: int, D: int) -> bool:
    lhs, rhs = littlewood_parity_sides(kind, l, D)
    return lhs == rhs
