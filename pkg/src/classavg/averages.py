"""Closed-form Haar averages of products and ratios of characteristic
polynomials, integer moments, and the rectangular-character identities."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as cartesian
from math import factorial, prod
from typing import Callable, Sequence

from .errors import PreconditionViolated, SingularParameters, SingularPoint
from .exact_algebra import Laurent, rat, random_rationals
from .groups import Family, GroupSpec, group as make_group
from .littlewood_schur import ls_eval, ls_in_y, xi_subsets
from .partitions import (
    Partition,
    SignedPartition,
    box_complement,
    conjugate,
    enumerate_in_box,
    is_even,
    is_odd,
    odd_row_count,
    partitions_up_to,
)
from .report import Case, Report, compare
from .symmetric_functions import geometric_factor, schur, schur_dim, schur_eval, truncated_product
from .weyl_characters import char_eval, so_even_dim_hook, so_even_dim_weyl, sp_dim_hook

# E ∏ det(I + s·x g) is written natively with s = +1, except SO(2N+1) with s = −1
NATIVE_SIGN = {Family.SO_ODD: -1}


@dataclass(frozen=True)
class ProductQuery:
    """E ∏ det(I + sign·x_j g). For U(N), `inverse_side` holds α_1..α_L
    (factors det(I + α⁻¹g⁻¹)) and `xs` holds α_{L+1}..α_{L+K}."""

    group: GroupSpec
    xs: tuple = ()
    inverse_side: tuple = ()
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(rat(x) for x in self.xs))
        object.__setattr__(self, "inverse_side", tuple(rat(a) for a in self.inverse_side))
        if self.sign not in (1, -1):
            raise PreconditionViolated("sign must be +1 or -1")
        if self.inverse_side and self.group.family is not Family.UNITARY:
            raise PreconditionViolated("inverse-side parameters only apply to U(N)")


@dataclass(frozen=True)
class RatioQuery(ProductQuery):
    """ProductQuery divided by ∏ det(I − y g), or for U(N) by
    ∏ det(I − γ g) ∏ det(I − δ g⁻¹)."""

    ys: tuple = ()
    gammas: tuple = ()
    deltas: tuple = ()

    def __post_init__(self):
        super().__post_init__()
        for name in ("ys", "gammas", "deltas"):
            object.__setattr__(self, name, tuple(rat(v) for v in getattr(self, name)))
        unitary = self.group.family is Family.UNITARY
        if unitary and self.ys:
            raise PreconditionViolated("U(N) ratios take gammas and deltas, not ys")
        if not unitary and (self.gammas or self.deltas):
            raise PreconditionViolated("gammas and deltas only apply to U(N)")
        if any(abs(v) >= 1 for v in self.ys + self.gammas + self.deltas):
            raise PreconditionViolated("denominator parameters need |y| < 1")
        N = self.group.N
        if unitary and (len(self.gammas) > N or len(self.deltas) > N):
            raise PreconditionViolated("need N ≥ Q and N ≥ R")
        if not unitary and len(self.ys) > N:
            raise PreconditionViolated("need N ≥ l")


@dataclass
class AverageResult:
    value: Fraction
    group: GroupSpec
    kind: str
    params: dict
    forms: dict = field(default_factory=dict)
    method: str = "closed"


def _params(**kw) -> dict:
    return {k: [str(v) for v in vals] if isinstance(vals, (tuple, list)) else vals for k, vals in kw.items()}


def _agree(forms: dict) -> Fraction:
    vals = [v for v in forms.values() if v is not None]
    if any(v != vals[0] for v in vals):
        detail = ", ".join(f"{k}={v}" for k, v in forms.items())
        raise RuntimeError(f"closed forms disagree: {detail}")
    return vals[0]


# ε-sums


def _check_generic(xs: Sequence[Fraction], *, diagonal: bool):
    if any(x == 0 for x in xs):
        raise SingularParameters("parameters must be nonzero")
    for i in range(len(xs)):
        for j in range(i + 1, len(xs)):
            if xs[i] == xs[j] or xs[i] * xs[j] == 1:
                raise SingularParameters(
                    f"x_{i + 1} and x_{j + 1} make a term denominator vanish; perturb them"
                )
        if diagonal and xs[i] in (1, -1):
            raise SingularParameters(f"x_{i + 1} = ±1 makes a term denominator vanish")


def _eps_terms(xs: Sequence[Fraction], drop: int, *, select: int = 0, signed: bool = False, diagonal: bool = False):
    """Yield (coefficient, (x_j^{ε_j})) over ε ∈ {±1}^k. The coefficient is
    ∏_{ε_j=−1} x_j^{drop} / ∏ (1 − x_i^{ε_i} x_j^{ε_j}) over i < j (i ≤ j
    with `diagonal`), times sgn(ε) when `signed`. `select` keeps only
    sgn(ε) = select when nonzero."""
    k = len(xs)
    for eps in cartesian((1, -1), repeat=k):
        sgn = prod(eps)
        if select and sgn != select:
            continue
        xe = tuple(x if e == 1 else 1 / x for x, e in zip(xs, eps))
        c = Fraction(sgn if signed else 1)
        for x, e in zip(xs, eps):
            if e == -1:
                c *= x**drop
        for i in range(k):
            for j in range(i if diagonal else i + 1, k):
                d = 1 - xe[i] * xe[j]
                if d == 0:
                    raise SingularParameters("a term denominator vanishes; perturb the parameters")
                c /= d
        yield c, xe


def eps_sum(xs, drop: int, *, select: int = 0, signed: bool = False, diagonal: bool = False, ys=(), u=None) -> Fraction:
    """Σ_ε coefficient · ∏(1 + x^ε y) (· ∏(1 + x^ε u) when u is given)."""
    ys = [rat(y) for y in ys]
    total = Fraction(0)
    for c, xe in _eps_terms(xs, drop, select=select, signed=signed, diagonal=diagonal):
        for a in xe:
            for y in ys:
                c *= 1 + a * y
            if u is not None:
                c *= 1 + a * u
        total += c
    return total


def _y_pair_factor(ys: Sequence[Fraction], diagonal: bool) -> Fraction:
    out = Fraction(1)
    for i in range(len(ys)):
        for j in range(i if diagonal else i + 1, len(ys)):
            out /= 1 - ys[i] * ys[j]
    return out


def _y_pair_series(l: int, D: int, diagonal: bool) -> Laurent:
    factors = []
    for i in range(l):
        for j in range(i if diagonal else i + 1, l):
            e = [0] * l
            e[i] += 1
            e[j] += 1
            factors.append(geometric_factor(l, e, 1, D // 2))
    return truncated_product(factors, range(l), D, l)


def eps_sum_series(xs, drop: int, l: int, D: int, *, select: int = 0, signed: bool = False, diagonal: bool = False, y_diagonal: bool = False) -> Laurent:
    """The ε-sum with symbolic y_1..y_l, including 1/∏(1 − y_i y_j),
    truncated to total y-degree D."""
    total = Laurent.zero(l)
    for c, xe in _eps_terms(xs, drop, select=select, signed=signed, diagonal=diagonal):
        term = Laurent.const(c, l)
        for a in xe:
            for j in range(l):
                term = term * (1 + Laurent.var(j, l).scale(a))
        total = total + term
    return (total * _y_pair_series(l, D, y_diagonal)).truncate_total_degree(range(l), D)


# (drop exponent, select, signed, x-diagonal, y-diagonal) per family
def _eps_shape(family: Family, N: int):
    return {
        Family.SYMPLECTIC: (2 * N, 0, False, True, False),
        Family.SO_EVEN: (2 * N, 0, False, False, True),
        Family.O_FULL: (2 * N, 1, False, False, True),
        Family.O_MINUS: (2 * N, 0, True, False, True),
        Family.SO_ODD: (2 * N + 1, 0, True, False, True),
    }[family]


def _character_form(g: GroupSpec, xs: Sequence[Fraction]) -> Fraction | None:
    """(x_1…x_k)^N times the rectangular character attached to the group;
    None where the character's own denominator vanishes."""
    k, N = len(xs), g.N
    if k == 0:
        return Fraction(1)
    rect = Partition([N] * k)
    scale = prod(xs, start=Fraction(1)) ** N
    fam = g.family
    # with this module's labelling, (N^k)₊ has the x^{+N} alternant term;
    # the O(2N) average picks the label of sign (−1)^k
    s = -1 if k % 2 else 1
    try:
        if fam is Family.SYMPLECTIC:
            return scale * char_eval(Family.SYMPLECTIC, rect, xs)
        if fam is Family.SO_EVEN:
            return scale * char_eval(Family.O_FULL, rect, xs)
        if fam is Family.O_FULL:
            return scale * char_eval(Family.SO_EVEN, SignedPartition(rect, s), xs)
        if fam is Family.O_MINUS:
            plus = char_eval(Family.SO_EVEN, SignedPartition(rect, s), xs)
            minus = char_eval(Family.SO_EVEN, SignedPartition(rect, -s), xs)
            return scale * (plus - minus)
        if fam is Family.SO_ODD:
            return scale * prod((1 - x for x in xs), start=Fraction(1)) * char_eval(Family.SO_ODD, rect, xs)
    except SingularPoint:
        return None
    raise ValueError(fam)


# unitary Ξ-sums


def _xi_sum(alphas: Sequence[Fraction], L: int, N: int, gammas=(), deltas=()) -> Fraction:
    K = len(alphas) - L
    total = Fraction(0)
    for first, second in xi_subsets(L, K):
        term = Fraction(1)
        for k in range(K):
            term *= (alphas[L + k] / alphas[second[k]]) ** N
        for k in second:
            for l in first:
                term /= 1 - alphas[k] / alphas[l]
            for d in deltas:
                term *= 1 + d * alphas[k]
        for l in first:
            for g in gammas:
                term *= 1 + g / alphas[l]
        total += term
    for g in gammas:
        for d in deltas:
            total /= 1 - g * d
    return total


def _unitary_alphas(q: ProductQuery) -> tuple[list[Fraction], int]:
    alphas = [q.sign * a for a in q.inverse_side + q.xs]
    if any(a == 0 for a in alphas):
        raise SingularParameters("α parameters must be nonzero")
    if len(set(alphas)) != len(alphas):
        raise SingularParameters("α parameters must be pairwise distinct")
    return alphas, len(q.inverse_side)


def _native_xs(q: ProductQuery) -> list[Fraction]:
    s = q.sign * NATIVE_SIGN.get(q.group.family, 1)
    return [s * x for x in q.xs]


# public averages


def product_average(q: ProductQuery) -> AverageResult:
    """Exact E ∏ det(I + sign·x g) by the ε-sum (Ξ-sum for U(N)), checked
    against the rectangular-character form."""
    g = q.group
    params = _params(xs=q.xs, inverse_side=q.inverse_side, sign=q.sign)
    if g.family is Family.UNITARY:
        alphas, L = _unitary_alphas(q)
        forms = {
            "xi-sum": _xi_sum(alphas, L, g.N),
            "character": schur_eval([g.N] * L, alphas) / prod(alphas[:L], start=Fraction(1)) ** g.N,
        }
        return AverageResult(_agree(forms), g, "product", params, forms)
    xs = _native_xs(q)
    drop, select, signed, diag, _ = _eps_shape(g.family, g.N)
    _check_generic(xs, diagonal=diag)
    forms = {
        "eps-sum": eps_sum(xs, drop, select=select, signed=signed, diagonal=diag),
        "character": _character_form(g, xs),
    }
    return AverageResult(_agree(forms), g, "product", params, forms)


def ratio_average(q: RatioQuery) -> AverageResult:
    """Exact E[∏ det(I + sign·x g) / ∏ det(I − y g)] (unitary: with
    det(I − γg) and det(I − δg⁻¹) in the denominator)."""
    g = q.group
    if g.family is Family.UNITARY:
        params = _params(xs=q.xs, inverse_side=q.inverse_side, gammas=q.gammas, deltas=q.deltas, sign=q.sign)
        alphas, L = _unitary_alphas(q)
        if any(gm * d == 1 for gm in q.gammas for d in q.deltas):
            raise SingularParameters("γ·δ = 1")
        value = _xi_sum(alphas, L, g.N, q.gammas, q.deltas)
        return AverageResult(value, g, "ratio", params, {"xi-sum": value})
    params = _params(xs=q.xs, ys=q.ys, sign=q.sign)
    xs = _native_xs(q)
    drop, select, signed, diag, ydiag = _eps_shape(g.family, g.N)
    _check_generic(xs, diagonal=diag)
    # SO(2N+1): the numerator factors are ∏(1 − x^ε y) for det(I − x g)
    ynum = [-y for y in q.ys] if g.family is Family.SO_ODD else q.ys
    value = eps_sum(xs, drop, select=select, signed=signed, diagonal=diag, ys=ynum)
    value *= _y_pair_factor(q.ys, ydiag)
    return AverageResult(value, g, "ratio", params, {"eps-sum": value})


# moments


def _pochhammer(a: Fraction, n: int) -> Fraction:
    return prod((a + m for m in range(n)), start=Fraction(1))


def unitary_moment_product(n: int, k: int) -> Fraction:
    return prod(
        (Fraction(factorial(j) * factorial(j + 2 * k), factorial(j + k) ** 2) for j in range(n)),
        start=Fraction(1),
    )


def sp_moment_factorial(N: int, k: int) -> Fraction:
    """dim χ^{Sp(2k)}_{N^k} as a product of factorials."""
    out = Fraction(factorial(N + k), factorial(N) * factorial(k))
    for i in range(1, k + 1):
        out *= Fraction(factorial(k + 2 * N + i) * factorial(i), factorial(2 * i + 2 * N) * factorial(2 * i - 1))
    return out


def sp_moment_gamma(N: int, k: int) -> Fraction:
    """2^{2Nk} ∏_j Γ(1+N+j)Γ(1/2+k+j) / (Γ(1+N+k+j)Γ(1/2+j)) with the
    half-integer ratio written as a Pochhammer product."""
    out = Fraction(2 ** (2 * N * k))
    for j in range(1, N + 1):
        out *= Fraction(factorial(N + j), factorial(N + k + j)) * _pochhammer(Fraction(1, 2) + j, k)
    return out


def sp_moment_duplication(N: int, k: int) -> Fraction:
    """The Γ-form after the duplication formula: all factorials."""
    out = Fraction(1)
    for j in range(1, N + 1):
        out *= Fraction(
            factorial(N + j) * factorial(2 * k + 2 * j) * factorial(j),
            factorial(N + k + j) * factorial(k + j) * factorial(2 * j),
        )
    return out


def so_even_moment_gamma(N: int, k: int) -> Fraction:
    """2^{2Nk} ∏_j Γ(N+j−1)Γ(k+j−1/2) / (Γ(N+k+j−1)Γ(j−1/2))."""
    out = Fraction(2 ** (2 * N * k))
    for j in range(1, N + 1):
        out *= Fraction(factorial(N + j - 2), factorial(N + k + j - 2)) * _pochhammer(j - Fraction(1, 2), k)
    return out


def moment(g: GroupSpec, k: int) -> AverageResult:
    """E det(I − g)^k, or E |det(I − g)|^{2k} for U(N)."""
    if k < 0:
        raise PreconditionViolated("k must be a nonnegative integer")
    fam, N = g.family, g.N
    rect = [N] * k
    if fam is Family.UNITARY:
        forms = {"product": unitary_moment_product(N, k), "schur-dim": Fraction(schur_dim(rect, 2 * k))}
    elif fam is Family.SYMPLECTIC:
        forms = {
            "factorial": sp_moment_factorial(N, k),
            "gamma": sp_moment_gamma(N, k),
            "duplication": sp_moment_duplication(N, k),
            "dimension": Fraction(sp_dim_hook(rect, k)) if k else Fraction(1),
        }
    elif fam is Family.SO_EVEN:
        forms = {
            "gamma": so_even_moment_gamma(N, k),
            "dimension": Fraction(so_even_dim_hook(rect, k)) if k else Fraction(1),
        }
    elif fam is Family.O_FULL:
        if k == 0:
            forms = {"trivial": Fraction(1)}
        else:
            # det(I − g) vanishes on the reflection coset
            forms = {
                "half-so": so_even_moment_gamma(N, k) / 2,
                "dimension": Fraction(so_even_dim_weyl(rect, k)),
            }
    else:
        # O⁻(2N) and SO(2N+1) elements have eigenvalue 1
        forms = {"vanishing": Fraction(1 if k == 0 else 0)}
    return AverageResult(_agree(forms), g, "moment", {"N": N, "k": k}, forms)


# box sums


def schur_box_sum(width: int, k: int, filter: str = "all", u=None, r: int | None = None) -> Laurent:
    """Σ s_λ(x_1..x_k) over the filtered k × width box, weighted by
    u^{r(λ)} (odd-row count) when u is given."""
    total = Laurent.zero(k)
    for lam in enumerate_in_box(width, k, filter, r):
        term = schur(lam, k)
        if u is not None:
            term = term.scale(rat(u) ** odd_row_count(lam))
        total = total + term
    return total


def schur_box_sum_eval(width: int, k: int, xs, filter: str = "all", u=None, r: int | None = None) -> Fraction:
    xs = [rat(x) for x in xs]
    total = Fraction(0)
    for lam in enumerate_in_box(width, k, filter, r):
        term = schur_eval(lam, xs)
        if u is not None:
            term *= rat(u) ** odd_row_count(lam)
        total += term
    return total


def ls_strip_shapes(width: int, k: int, l: int, D: int):
    """Partitions with λ_1 ≤ width, λ_{k+1} ≤ l and at most D boxes below
    row k: every shape that can contribute to LS sums through y-degree D."""
    tails = [t for t in partitions_up_to(D) if not t or t[0] <= min(l, width)]
    for head in enumerate_in_box(width, k):
        if len(head) < k:
            yield head
            continue
        for t in tails:
            if not t or t[0] <= head[-1]:
                yield Partition(tuple(head) + tuple(t))


def ls_box_sum_series(width: int, xs, l: int, D: int, keep: Callable[[Partition], bool]) -> Laurent:
    """Σ LS_λ(x; y_1..y_l) over shapes passing `keep` with λ_1 ≤ width,
    x numeric, truncated to total y-degree D."""
    xs = [rat(x) for x in xs]
    k = len(xs)
    total = Laurent.zero(l)
    for lam in ls_strip_shapes(width, k, l, D):
        if keep(lam):
            total = total + ls_in_y(lam, xs, l)
    return total.truncate_total_degree(range(l), D)


def ls_weighted_sum_series(width: int, xs, l: int, D: int, u) -> Laurent:
    """Σ_{λ_1 ≤ width} u^{r(λ)} LS_λ(x; y) through total y-degree D."""
    xs = [rat(x) for x in xs]
    u = rat(u)
    total = Laurent.zero(l)
    for lam in ls_strip_shapes(width, len(xs), l, D):
        total = total + ls_in_y(lam, xs, l).scale(u ** odd_row_count(lam))
    return total.truncate_total_degree(range(l), D)


def ls_weighted_rhs_series(xs, N: int, l: int, D: int, u) -> Laurent:
    """Σ_ε x^{N(1−ε)} ∏(1 + x^ε y)(1 + x^ε u) / ∏_{i≤j}(1 − x^ε x^ε),
    divided by ∏_j (1 − u y_j) ∏_{i<j} (1 − y_i y_j), as a y-series."""
    u = rat(u)
    total = Laurent.zero(l)
    for c, xe in _eps_terms([rat(x) for x in xs], 2 * N, diagonal=True):
        term = Laurent.const(c, l)
        for a in xe:
            term = term.scale(1 + a * u)
            for j in range(l):
                term = term * (1 + Laurent.var(j, l).scale(a))
        total = total + term
    singles = [geometric_factor(l, [int(i == j) for i in range(l)], u, D) for j in range(l)]
    denominator = truncated_product(singles, range(l), D, l) * _y_pair_series(l, D, False)
    return (total * denominator).truncate_total_degree(range(l), D)


# rectangular identities


def _odd_columns(lam: Partition) -> bool:
    return bool(lam) and is_odd(conjugate(lam))


def _odd_columns_full(width: int):
    return lambda lam: _odd_columns(lam) and lam[0] == width


def _even_columns(lam: Partition) -> bool:
    return is_even(conjugate(lam))


def _timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def _sp_scale_char(N: int, xs, lam) -> Fraction:
    return prod(xs, start=Fraction(1)) ** N * char_eval(Family.SYMPLECTIC, lam, xs)


def scalar_rectangular_cases(k: int, N: int, xs: Sequence[Fraction], u: Fraction) -> list[Case]:
    """The scalar box-sum identities at one point, including both readings
    of the odd-column orthogonal sum."""
    xs = [rat(x) for x in xs]
    W = 2 * N
    p = {"k": k, "N": N, "xs": [str(x) for x in xs]}
    cases = []

    lhs, t = _timed(lambda: schur_box_sum_eval(W, k, xs, "even-rows"))
    rhs = _sp_scale_char(N, xs, [N] * k)
    eps = eps_sum(xs, W, diagonal=True)
    cases.append(compare("sp-even-rows", p, lhs, rhs, elapsed=t))
    cases.append(compare("sp-even-rows-eps", p, lhs, eps))

    for r in range(k + 1):
        label = [N] * (k - r) + [N - 1] * r
        lhs = schur_box_sum_eval(W, k, xs, "odd-rows-count", r=r)
        cases.append(compare("sp-odd-row-count", {**p, "r": r}, lhs, _sp_scale_char(N, xs, [v for v in label if v])))

    lhs = schur_box_sum_eval(W, k, xs, "all", u=u)
    cases.append(compare("sp-weighted-box", {**p, "u": str(u)}, lhs, eps_sum(xs, W, diagonal=True, u=u)))

    lhs = schur_box_sum_eval(W, k, xs, "even-columns")
    o_full = GroupSpec(Family.O_FULL, N)
    cases.append(compare("o-even-columns", p, lhs, eps_sum(xs, W, select=1)))
    cases.append(compare("o-even-columns-character", p, lhs, _character_form(o_full, xs)))

    odd_rhs = eps_sum(xs, W, select=-1)
    literal = schur_box_sum_eval(W, k, xs, "odd-columns-literal")
    cases.append(
        compare("o-odd-columns-literal", p, literal, odd_rhs, expect_fail=True, note="λ₁ ≤ 2N with λ′ odd, as printed")
    )
    corrected = schur_box_sum_eval(W, k, xs, "odd-columns-corrected")
    cases.append(compare("o-odd-columns-corrected", p, corrected, odd_rhs, note="λ₁ = 2N with λ′ odd"))
    return cases


def ls_rectangular_cases(k: int, N: int, l: int, xs: Sequence[Fraction], ys: Sequence[Fraction], u: Fraction, D: int = 6) -> list[Case]:
    """The Littlewood–Schur box sums for Sp and O; y is symbolic through
    degree D except in the finite u-weighted sum, evaluated at ys."""
    if l > N:
        raise PreconditionViolated("the LS identities need N ≥ l")
    xs = [rat(x) for x in xs]
    ys = [rat(y) for y in ys][:l]
    W = 2 * N
    p = {"k": k, "N": N, "l": l, "D": D, "xs": [str(x) for x in xs]}
    cases = []

    lhs, t = _timed(lambda: ls_box_sum_series(W, xs, l, D, is_even))
    rhs = eps_sum_series(xs, W, l, D, diagonal=True, y_diagonal=False)
    cases.append(compare("ls-sp-even", p, lhs, rhs, elapsed=t))

    wp = {**p, "u": str(u)}
    lhs = sum((ls_eval(lam, xs, ys) * u ** odd_row_count(lam) for lam in enumerate_in_box(W, k)), Fraction(0))
    rhs = eps_sum(xs, W, diagonal=True, ys=ys, u=u)
    cases.append(
        compare("ls-sp-weighted-literal", {**wp, "ys": [str(y) for y in ys]}, lhs, rhs, expect_fail=True, note="λ ⊆ (2N)^k, as printed")
    )
    lhs = ls_weighted_sum_series(W, xs, l, D, u)
    rhs = ls_weighted_rhs_series(xs, N, l, D, u)
    cases.append(
        compare("ls-sp-weighted-corrected", wp, lhs, rhs, note="all λ with λ₁ ≤ 2N; right side over ∏(1 − u y_j) ∏_{i<j}(1 − y_i y_j)")
    )

    lhs, t = _timed(lambda: ls_box_sum_series(W, xs, l, D, _even_columns))
    rhs = eps_sum_series(xs, W, l, D, select=1, y_diagonal=True)
    cases.append(compare("ls-o-even", p, lhs, rhs, elapsed=t))

    odd_rhs = eps_sum_series(xs, W, l, D, select=-1, y_diagonal=True)
    lhs = ls_box_sum_series(W, xs, l, D, _odd_columns)
    cases.append(compare("ls-o-odd-literal", p, lhs, odd_rhs, expect_fail=True, note="λ₁ ≤ 2N with λ′ odd, as printed"))
    lhs = ls_box_sum_series(W, xs, l, D, _odd_columns_full(W))
    cases.append(compare("ls-o-odd-corrected", p, lhs, odd_rhs, note="λ₁ = 2N with λ′ odd"))
    return cases


def alternant_sides(family, k: int, N: int, xs, ys, *, literal: bool = False) -> tuple[Fraction, Fraction]:
    """Both sides of Σ_{λ⊆N^k} χ_λ(x) s_λ̃(y) = Σ_ε x^{−Nε} ∏(1 + x^ε y)/∏(…)
    for Sp(2k), O(2k), and the signed SO(2k+1) variant.

    The corrected orthogonal forms use χ₊ + χ₋ for every O(2k) label (so
    labels with λ_k = 0 count twice) and ∏(1 − x^ε y) on the SO(2k+1)
    side; `literal` keeps the irreducible O(2k) character and ∏(1 + x^ε y).
    """
    fam = make_group(family, max(k, 1)).family
    xs = [rat(x) for x in xs]
    ys = [rat(y) for y in ys]
    lhs = Fraction(0)
    for lam in enumerate_in_box(N, k):
        tilde = box_complement(lam, N, k)
        sy = schur_eval(tilde, ys)
        if not sy:
            continue
        if fam is Family.SO_ODD:
            sy *= -1 if tilde.size % 2 else 1
        if fam is Family.O_FULL and not literal:
            chi = sum(char_eval(Family.SO_EVEN, SignedPartition(lam, s), xs) for s in (1, -1))
        else:
            chi = char_eval(fam, lam, xs)
        lhs += chi * sy
    px = prod(xs, start=Fraction(1))
    if fam is Family.SYMPLECTIC:
        rhs = eps_sum(xs, 2 * N, diagonal=True, ys=ys) / px**N
    elif fam is Family.O_FULL:
        rhs = eps_sum(xs, 2 * N, ys=ys) / px**N
    elif fam is Family.SO_ODD:
        yr = ys if literal else [-y for y in ys]
        rhs = eps_sum(xs, 2 * N + 1, signed=True, ys=yr) / px**N / prod((1 - x for x in xs), start=Fraction(1))
    else:
        raise PreconditionViolated(f"no alternant identity for {fam.value}")
    return lhs, rhs


def verify_rectangular_identities(k: int, N: int, point_sets: Sequence[Sequence] | None = None, *, ls: bool = True, l_max: int = 2, D: int = 6, seed: int = 0) -> Report:
    """Evaluate every rectangular identity at the given x-points (random
    generic rationals by default) and collect pass/fail per instance."""
    rng = random.Random(seed)
    if point_sets is None:
        point_sets = [random_rationals(rng, k, small=True)]
    report = Report("rect", settings={"k": k, "N": N, "D": D, "seed": seed})
    u = Fraction(2, 5)
    for xs in point_sets:
        for case in scalar_rectangular_cases(k, N, xs, u):
            report.add(case)
        if ls:
            for l in range(1, min(l_max, N) + 1):
                ys = random_rationals(rng, l, small=True)
                for case in ls_rectangular_cases(k, N, l, xs, ys, u, D):
                    report.add(case)
        for l in range(0, min(l_max, N) + 1):
            ys = random_rationals(rng, l, small=True)
            p = {"k": k, "N": N, "l": l, "xs": [str(x) for x in xs], "ys": [str(y) for y in ys]}
            report.add(compare("alts-sp", p, *alternant_sides(Family.SYMPLECTIC, k, N, xs, ys)))
            for fam, name in ((Family.O_FULL, "alts-o"), (Family.SO_ODD, "alts-so-odd")):
                report.add(compare(f"{name}-literal", p, *alternant_sides(fam, k, N, xs, ys, literal=True), expect_fail=True))
                report.add(compare(f"{name}-corrected", p, *alternant_sides(fam, k, N, xs, ys)))
    return report
