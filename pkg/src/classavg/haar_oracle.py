"""Independent Haar-average backends: exact constant-term integration,
Gauss–Legendre quadrature over the eigenvalue densities, rejection-sampled
eigenvalue Monte Carlo and a Haar orthogonal matrix sampler."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np

from .errors import TooLarge, UnsupportedGroup
from .exact_algebra import Laurent, rat
from .groups import Family, GroupSpec

DENSITY_FAMILIES = (Family.UNITARY, Family.SYMPLECTIC, Family.SO_EVEN, Family.SO_ODD)
CT_FAMILIES = DENSITY_FAMILIES + (Family.O_MINUS, Family.O_FULL)
MAX_CT_WORK = 5 * 10**7


@dataclass(frozen=True)
class RatioSeries:
    """Truncated expansion of 1/det factors, in powers of a bookkeeping
    variable s that marks the total degree in the denominator parameters.

    Each eigenvalue variable t carries ∏_p 1/(1 − p·t) ∏_q 1/(1 − q/t);
    `fixed` lists parameters y contributing a scalar 1/(1 − y) (the
    eigenvalue 1 of SO(2N+1)). Terms of total degree above D are dropped.
    """

    pos: tuple[Fraction, ...]
    neg: tuple[Fraction, ...]
    fixed: tuple[Fraction, ...] = ()
    D: int = 30


@dataclass(frozen=True)
class ClassFunction:
    """Integrand on the maximal torus: `body` is a Laurent polynomial in
    t_1..t_N that already includes any fixed-eigenvalue factors, optionally
    multiplied by a truncated ratio series."""

    group: GroupSpec
    body: Laurent
    series: RatioSeries | None = None
    companion: "ClassFunction | None" = None

    def __post_init__(self):
        if self.body.nvars != torus_rank(self.group):
            raise ValueError("body must have one variable per free eigenvalue angle")
        if self.group.family is Family.O_FULL and self.companion is None:
            raise ValueError("an O(2N) integrand needs its O-(2N) companion")


def torus_rank(group: GroupSpec) -> int:
    """Number of free eigenvalue pairs. An element of O⁻(2N) has the fixed
    eigenvalues ±1 and N−1 free pairs; O(2N) integrands are stored as their
    SO(2N) part plus an O⁻(2N) companion."""
    return group.N - 1 if group.family is Family.O_MINUS else group.N


def _minus_part(group: GroupSpec) -> GroupSpec:
    return GroupSpec(Family.O_MINUS, group.N)


# integrand builders


def _var(i: int, n: int, p: int = 1) -> Laurent:
    return Laurent.var(i, n, p)


def char_poly_body(group: GroupSpec, xs: Sequence, sign: int = 1) -> Laurent:
    """∏_j det(I + sign·x_j g) restricted to the torus. For O(2N) this is
    the SO(2N) part."""
    if group.family is Family.O_FULL:
        group = GroupSpec(Family.SO_EVEN, group.N)
    N = torus_rank(group)
    out = Laurent.one(N)
    for x in xs:
        a = sign * rat(x)
        for n in range(N):
            out = out * (1 + _var(n, N).scale(a))
            if group.family is not Family.UNITARY:
                out = out * (1 + _var(n, N, -1).scale(a))
        if group.family is Family.SO_ODD:
            out = out.scale(1 + a)
        elif group.family is Family.O_MINUS:
            out = out.scale((1 + a) * (1 - a))
    return out


def char_poly_integrand(group: GroupSpec, xs: Sequence, sign: int = 1) -> ClassFunction:
    """∏_j det(I + sign·x_j g) as a class function on any supported group."""
    companion = None
    if group.family is Family.O_FULL:
        companion = char_poly_integrand(_minus_part(group), xs, sign)
    return ClassFunction(group, char_poly_body(group, xs, sign), None, companion)


def unitary_product_body(N: int, inverse_side: Sequence, direct_side: Sequence) -> Laurent:
    """∏_l det(I + α_l⁻¹ g⁻¹) ∏_k det(I + α_{L+k} g) on the U(N) torus."""
    out = Laurent.one(N)
    for a in inverse_side:
        inv = 1 / rat(a)
        for n in range(N):
            out = out * (1 + _var(n, N, -1).scale(inv))
    for a in direct_side:
        for n in range(N):
            out = out * (1 + _var(n, N).scale(rat(a)))
    return out


def moment_body(group: GroupSpec, k: int) -> Laurent:
    """det(I − g)^k, or |det(I − g)|^{2k} for the unitary group."""
    N = group.N
    if group.family is Family.UNITARY:
        base = Laurent.one(N)
        for n in range(N):
            base = base * (1 - _var(n, N)) * (1 - _var(n, N, -1))
        return base**k
    return char_poly_body(group, [1] * k, sign=-1)


def moment_integrand(group: GroupSpec, k: int) -> ClassFunction:
    companion = None
    if group.family is Family.O_FULL:
        companion = moment_integrand(_minus_part(group), k)
    return ClassFunction(group, moment_body(group, k), None, companion)


def truncated_ratio_integrand(group: GroupSpec, xs: Sequence = (), ys: Sequence = (), D: int = 30, *, gammas: Sequence = (), deltas: Sequence = (), inverse_side: Sequence = (), sign: int = 1) -> ClassFunction:
    """Numerator characteristic polynomials times the degree-D truncation
    of the inverse characteristic polynomials.

    Unitary: numerator ∏ det(I + α⁻¹g⁻¹)(inverse_side) ∏ det(I + αg)(xs),
    denominators det(I − γg) and det(I − δg⁻¹). Other groups: numerator
    ∏ det(I + sign·x g) and denominators det(I − y g).
    """
    companion = None
    if group.family is Family.UNITARY:
        body = unitary_product_body(group.N, inverse_side, xs)
        series = RatioSeries(tuple(map(rat, gammas)), tuple(map(rat, deltas)), (), D)
    else:
        body = char_poly_body(group, xs, sign)
        ys = tuple(map(rat, ys))
        fixed = ()
        if group.family is Family.SO_ODD:
            fixed = ys
        elif group.family is Family.O_MINUS:
            fixed = ys + tuple(-y for y in ys)
        elif group.family is Family.O_FULL:
            companion = truncated_ratio_integrand(_minus_part(group), xs, ys, D, sign=sign)
        series = RatioSeries(ys, ys, fixed, D)
    if not (series.pos or series.neg or series.fixed):
        series = None
    return ClassFunction(group, body, series, companion)


# exact constant-term integration


def _torus_data(group: GroupSpec) -> tuple[Family, int, int]:
    """(weight family, rank, Weyl order) of the torus integration; O⁻(2N)
    integrates like Sp(2N−2) once its fixed eigenvalues ±1 are in the body."""
    if group.family is Family.O_MINUS:
        n = group.N - 1
        return Family.SYMPLECTIC, n, 2**n * math.factorial(n)
    if group.family is Family.O_FULL:
        group = GroupSpec(Family.SO_EVEN, group.N)
    return group.family, group.N, group.weyl_order


@lru_cache(maxsize=None)
def weyl_weight(family: Family, N: int) -> Laurent:
    """∏ over roots α of (1 − e^α) for the group's root system."""
    w = Laurent.one(N)
    t = lambda i, p=1: _var(i, N, p)
    for i in range(N):
        if family is Family.SYMPLECTIC:
            w = w * (1 - t(i, 2)) * (1 - t(i, -2))
        elif family is Family.SO_ODD:
            w = w * (1 - t(i)) * (1 - t(i, -1))
        for j in range(i + 1, N):
            ratio = t(i) * t(j, -1)
            w = w * (1 - ratio) * (1 - t(j) * t(i, -1))
            if family is not Family.UNITARY:
                w = w * (1 - t(i) * t(j)) * (1 - t(i, -1) * t(j, -1))
    return w


def _series_table(pos: Sequence[Fraction], neg: Sequence[Fraction], D: int) -> dict[int, list]:
    """Coefficients of ∏_p 1/(1 − s p t) ∏_q 1/(1 − s q/t): maps the t-exponent
    c to the list of s^m coefficients, m ≤ D."""
    table: dict[int, list] = {0: [Fraction(1)] + [Fraction(0)] * D}
    for p, direction in [(p, 1) for p in pos] + [(q, -1) for q in neg]:
        new: dict[int, list] = {}
        powers = [p**a for a in range(D + 1)]
        for c, coeffs in table.items():
            for m, v in enumerate(coeffs):
                if not v:
                    continue
                for a in range(D - m + 1):
                    row = new.setdefault(c + direction * a, [Fraction(0)] * (D + 1))
                    row[m + a] += v * powers[a]
        table = new
    return table


def _scalar_series(params: Sequence[Fraction], D: int) -> list:
    out = [Fraction(1)] + [Fraction(0)] * D
    for y in params:
        for m in range(1, D + 1):
            out[m] += y * out[m - 1]
    return out


def _mul_trunc(a: list, b: list, D: int) -> list:
    out = [Fraction(0)] * (D + 1)
    for i, x in enumerate(a):
        if x:
            for j in range(D + 1 - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def _ct_with_series(F: Laurent, series: RatioSeries) -> Fraction:
    D = series.D
    N = F.nvars
    if N == 0:
        c = F.constant_term()
        return c * sum(_scalar_series(series.fixed, D), Fraction(0))
    table = _series_table(series.pos, series.neg, D)
    level: dict[tuple, list] = {}
    for e, c in F.terms.items():
        row = table.get(-e[-1])
        if row is None:
            continue
        poly = [c * v for v in row]
        key = e[:-1]
        acc = level.get(key)
        level[key] = poly if acc is None else [x + y for x, y in zip(acc, poly)]
    for n in range(N - 2, -1, -1):
        nxt: dict[tuple, list] = {}
        for key, poly in level.items():
            row = table.get(-key[-1])
            if row is None:
                continue
            prod_ = _mul_trunc(poly, row, D)
            k2 = key[:-1]
            acc = nxt.get(k2)
            nxt[k2] = prod_ if acc is None else [x + y for x, y in zip(acc, prod_)]
        level = nxt
    total = level.get(())
    if total is None:
        return Fraction(0)
    total = _mul_trunc(total, _scalar_series(series.fixed, D), D)
    return sum(total, Fraction(0))


def _check_ct_group(group: GroupSpec):
    if group.family not in CT_FAMILIES:
        raise UnsupportedGroup(f"{group.name}: no constant-term form")


def ct_average(f: ClassFunction, validate: bool = True) -> Fraction:
    """Exact Haar average (1/|W|)·CT[f · weight]. O(2N) averages its
    SO(2N) part and its O⁻(2N) companion with equal weight."""
    g = f.group
    _check_ct_group(g)
    if g.family is Family.O_FULL:
        so = ClassFunction(GroupSpec(Family.SO_EVEN, g.N), f.body, f.series)
        return (ct_average(so, validate) + ct_average(f.companion, validate)) / 2
    family, n, order = _torus_data(g)
    if validate and 1 <= n <= 3:
        validate_weight(family, n)
    w = weyl_weight(family, n)
    if f.series is None:
        wt = w.terms
        total = Fraction(0)
        for e, c in f.body.terms.items():
            v = wt.get(tuple(-x for x in e))
            if v:
                total += c * v
        return total / order
    if len(f.body) * len(w) > MAX_CT_WORK:
        raise TooLarge("integrand expansion too large for exact integration")
    return _ct_with_series(f.body * w, f.series) / order


def ratio_tail_bound(f: ClassFunction) -> float:
    """Bound on |average of the full ratio − average of its degree-D
    truncation|: ‖body·weight‖₁/|W| · Σ_{m>D} C(m+M−1, M−1) ρ^m, with M the
    number of geometric factors and ρ the largest |parameter| (< 1)."""
    s = f.series
    if s is None:
        return 0.0
    g = f.group
    if g.family is Family.O_FULL:
        so = ClassFunction(GroupSpec(Family.SO_EVEN, g.N), f.body, f.series)
        return (ratio_tail_bound(so) + ratio_tail_bound(f.companion)) / 2
    family, n, order = _torus_data(g)
    params = list(s.pos) + list(s.neg) + list(s.fixed)
    rho = float(max(abs(p) for p in params))
    M = n * (len(s.pos) + len(s.neg)) + len(s.fixed)
    norm = sum(abs(float(c)) for c in (f.body * weyl_weight(family, n)).terms.values())
    tail, m = 0.0, s.D + 1
    term = math.comb(m + M - 1, M - 1) * rho**m
    while term > 1e-30 * max(tail, 1e-300) and m < s.D + 10000:
        tail += term
        m += 1
        term = math.comb(m + M - 1, M - 1) * rho**m
    return norm * tail / order


# densities and quadrature


def density(group: GroupSpec, theta: np.ndarray) -> np.ndarray:
    """Normalized eigenvalue-angle density; theta has shape (..., N). Angles
    range over [0, 2π) for U(N) and [0, π] otherwise."""
    fam, N = group.family, group.N
    th = np.asarray(theta, dtype=float)
    c = np.cos(th)
    pair = np.ones(th.shape[:-1])
    for i in range(N):
        for j in range(i + 1, N):
            if fam is Family.UNITARY:
                pair = pair * np.abs(np.exp(1j * th[..., i]) - np.exp(1j * th[..., j])) ** 2
            else:
                pair = pair * (c[..., i] - c[..., j]) ** 2
    if fam is Family.UNITARY:
        return pair / (math.factorial(N) * (2 * math.pi) ** N)
    if fam is Family.SYMPLECTIC:
        return 2 ** (N * N) / (math.pi**N * math.factorial(N)) * pair * np.prod(np.sin(th) ** 2, axis=-1)
    if fam is Family.SO_EVEN:
        return 2 ** ((N - 1) ** 2) / (math.pi**N * math.factorial(N)) * pair
    if fam is Family.SO_ODD:
        return 2 ** (N * N) / (math.pi**N * math.factorial(N)) * pair * np.prod(np.sin(th / 2) ** 2, axis=-1)
    raise UnsupportedGroup(f"no eigenvalue density for {group.name}")


def _density_bound(group: GroupSpec) -> float:
    """Upper bound of the unnormalized density (pair factors ≤ 4, sines ≤ 1)."""
    N = group.N
    return 4.0 ** (N * (N - 1) // 2)


def _unnormalized_density(group: GroupSpec, theta: np.ndarray) -> np.ndarray:
    fam, N = group.family, group.N
    c = np.cos(theta)
    out = np.ones(theta.shape[:-1])
    for i in range(N):
        for j in range(i + 1, N):
            if fam is Family.UNITARY:
                out = out * np.abs(np.exp(1j * theta[..., i]) - np.exp(1j * theta[..., j])) ** 2
            else:
                out = out * (c[..., i] - c[..., j]) ** 2
    if fam is Family.SYMPLECTIC:
        out = out * np.prod(np.sin(theta) ** 2, axis=-1)
    elif fam is Family.SO_ODD:
        out = out * np.prod(np.sin(theta / 2) ** 2, axis=-1)
    return out


def angle_domain(group: GroupSpec) -> float:
    return 2 * math.pi if group.family is Family.UNITARY else math.pi


def evaluate_on_angles(f: ClassFunction, theta: np.ndarray) -> np.ndarray:
    """Value of the class function at t_n = e^{iθ_n}; the ratio series is
    replaced by the untruncated product it approximates."""
    th = np.asarray(theta, dtype=float)
    z = np.exp(1j * th)
    total = np.zeros(th.shape[:-1], dtype=complex)
    for e, c in f.body.terms.items():
        total += float(c) * np.exp(1j * (th @ np.asarray(e, dtype=float)))
    s = f.series
    if s is not None:
        for p in s.pos:
            total = total / np.prod(1 - float(p) * z, axis=-1)
        for q in s.neg:
            total = total / np.prod(1 - float(q) / z, axis=-1)
        for y in s.fixed:
            total = total / (1 - float(y))
    return total


def _as_angle_function(f) -> Callable[[np.ndarray], np.ndarray]:
    if isinstance(f, ClassFunction):
        return lambda th: evaluate_on_angles(f, th)
    return f


def quad_average(group: GroupSpec, f, order: int = 40) -> float:
    """Tensor-product Gauss–Legendre estimate of the Haar average; f is a
    ClassFunction or a callable on an (..., N) array of angles."""
    if group.family not in DENSITY_FAMILIES:
        raise UnsupportedGroup(f"no eigenvalue density for {group.name}")
    if order < 2:
        raise ValueError("quadrature order must be at least 2")
    if group.N > 3:
        raise TooLarge("quadrature is limited to N ≤ 3")
    nodes, weights = np.polynomial.legendre.leggauss(order)
    L = angle_domain(group)
    x = (nodes + 1) * L / 2
    w = weights * L / 2
    N = group.N
    grids = np.meshgrid(*([x] * N), indexing="ij")
    theta = np.stack(grids, axis=-1).reshape(-1, N)
    wgrid = np.meshgrid(*([w] * N), indexing="ij")
    wts = np.prod(np.stack(wgrid, axis=-1).reshape(-1, N), axis=-1)
    vals = np.asarray(_as_angle_function(f)(theta))
    return float(np.real(np.sum(wts * density(group, theta) * vals)))


@lru_cache(maxsize=None)
def validate_weight(family: Family, N: int, order: int = 24, tol: float = 1e-9) -> bool:
    """Check the algebraic Weyl weight against the trigonometric density:
    both must give the same averages for a few symmetric test integrands."""
    g = GroupSpec(family, N)
    p1 = Laurent.zero(N)
    for n in range(N):
        p1 = p1 + _var(n, N)
        if family is not Family.UNITARY:
            p1 = p1 + _var(n, N, -1)
    tests = [Laurent.one(N), p1 * p1, p1**3 + p1 * p1 * 2 + 1]
    if family is Family.UNITARY:
        conj = p1.invert_variables()
        tests = [Laurent.one(N), p1 * conj, (p1 * conj) ** 2]
    for body in tests:
        exact = ct_average(ClassFunction(g, body), validate=False)
        approx = quad_average(g, ClassFunction(g, body), order)
        if abs(float(exact) - approx) > tol:
            raise RuntimeError(
                f"Weyl weight for {g.name} disagrees with its density: {exact} vs {approx}"
            )
    return True


# Monte Carlo


CHUNK = 200_000


def _mean_stderr(values: np.ndarray) -> tuple[float, float]:
    v = np.real(np.asarray(values))
    n = len(v)
    mean = float(np.mean(v))
    if n < 2 or np.all(v == v[0]):
        return mean, 0.0
    return mean, float(np.std(v, ddof=1) / math.sqrt(n))


def sample_angles(group: GroupSpec, samples: int, seed: int) -> np.ndarray:
    """Rejection sampling from the eigenvalue density with a uniform
    envelope; chunk i draws from the stream seeded by (seed, i)."""
    if group.family not in DENSITY_FAMILIES:
        raise UnsupportedGroup(f"no eigenvalue density for {group.name}")
    N, L, bound = group.N, angle_domain(group), _density_bound(group)
    out: list[np.ndarray] = []
    have, chunk = 0, 0
    while have < samples:
        rng = np.random.default_rng([seed, chunk])
        theta = rng.uniform(0.0, L, size=(CHUNK, N))
        u = rng.uniform(0.0, bound, size=CHUNK)
        acc = theta[u < _unnormalized_density(group, theta)]
        out.append(acc)
        have += len(acc)
        chunk += 1
    return np.concatenate(out)[:samples]


def mc_eigen_average(group: GroupSpec, f, samples: int = 10**6, seed: int = 0) -> tuple[float, float]:
    theta = sample_angles(group, samples, seed)
    return _mean_stderr(_as_angle_function(f)(theta))


def haar_orthogonal(dim: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed orthogonal matrices: QR of Gaussian matrices with
    the signs fixed so that R has a positive diagonal."""
    z = rng.standard_normal((count, dim, dim))
    q, r = np.linalg.qr(z)
    d = np.sign(np.diagonal(r, axis1=-2, axis2=-1))
    d[d == 0] = 1
    return q * d[:, None, :]


def mc_matrix_average(dim: int, det_sign: int | None, f: Callable[[np.ndarray], np.ndarray], samples: int = 10**6, seed: int = 0) -> tuple[float, float]:
    """Average of f(eigenvalues) over O(dim) (det_sign None), SO(dim)
    (det_sign +1) or the reflection coset O⁻(dim) (det_sign −1).

    Samples of the wrong determinant are moved to the requested coset by a
    fixed reflection, which preserves Haar measure."""
    if dim > 8:
        raise TooLarge("matrix sampler is limited to dim ≤ 8")
    values = []
    done, chunk = 0, 0
    while done < samples:
        n = min(CHUNK, samples - done)
        rng = np.random.default_rng([seed, chunk])
        g = haar_orthogonal(dim, n, rng)
        if det_sign is not None:
            wrong = np.sign(np.linalg.det(g)) != det_sign
            g[wrong, :, 0] *= -1
        eig = np.linalg.eigvals(g)
        values.append(np.real(np.asarray(f(eig))))
        done += n
        chunk += 1
    return _mean_stderr(np.concatenate(values))
