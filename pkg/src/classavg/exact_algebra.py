"""Exact rationals, sparse Laurent polynomials and exact determinants.

Coefficients are Python ``int`` or ``fractions.Fraction``; exponents are
tuples of signed integers. Every value is immutable once built.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational as _RationalABC
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadRowSet,
    NonSquare,
    VariableCountMismatch,
    ZeroAtNegativeExponent,
)

Scalar = int | Fraction


def rat(value) -> Fraction:
    """Parse an int, Fraction or "p/q" string into a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"not an exact rational: {value!r}")


def rat_str(value) -> str:
    """Canonical text form "p/q", with "/q" omitted when q = 1."""
    q = rat(value)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


class Laurent:
    """Sparse multivariate Laurent polynomial with exact rational coefficients."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, Scalar] | None = None):
        self.nvars = nvars
        clean = {}
        if terms:
            for exp, c in terms.items():
                if c:
                    if len(exp) != nvars:
                        raise VariableCountMismatch(
                            f"exponent {exp} has length {len(exp)}, expected {nvars}"
                        )
                    clean[tuple(exp)] = _normalize(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "Laurent":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def const(cls, c, nvars: int) -> "Laurent":
        return cls._raw(nvars, {(0,) * nvars: _normalize(rat(c))} if c else {})

    @classmethod
    def zero(cls, nvars: int) -> "Laurent":
        return cls._raw(nvars, {})

    @classmethod
    def one(cls, nvars: int) -> "Laurent":
        return cls._raw(nvars, {(0,) * nvars: 1})

    @classmethod
    def var(cls, i: int, nvars: int, power: int = 1) -> "Laurent":
        exp = [0] * nvars
        exp[i] = power
        return cls._raw(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff=1) -> "Laurent":
        return cls(len(exp), {tuple(exp): rat(coeff)})

    # helpers
    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            if other.nvars != self.nvars:
                raise VariableCountMismatch(
                    f"variable counts differ: {self.nvars} vs {other.nvars}"
                )
            return other
        if _is_scalar(other):
            return Laurent.const(other, self.nvars)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Laurent._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c) -> "Laurent":
        c = _normalize(rat(c))
        if not c:
            return Laurent.zero(self.nvars)
        return Laurent._raw(self.nvars, {e: _normalize(v * c) for e, v in self.terms.items()})

    def __mul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                out[e] = get(e, 0) + ca * cb
        return Laurent._raw(
            self.nvars, {e: _normalize(c) for e, c in out.items() if c}
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self.scale(Fraction(1) / rat(other))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomial")
        result = Laurent.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Laurent):
            return self.nvars == other.nvars and self.terms == other.terms
        if _is_scalar(other):
            return self.terms == ({(0,) * self.nvars: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # inspection
    def coefficient(self, exp: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exp), 0)

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, 0)

    def sorted_terms(self) -> list[tuple[tuple, Scalar]]:
        return sorted(self.terms.items())

    def degree_in(self, i: int) -> tuple[int, int]:
        """Minimum and maximum exponent of variable i (0, 0 when zero)."""
        if not self.terms:
            return (0, 0)
        vals = [e[i] for e in self.terms]
        return (min(vals), max(vals))

    def total_degree(self, vars: Iterable[int] | None = None) -> int:
        idx = range(self.nvars) if vars is None else list(vars)
        return max((sum(e[i] for i in idx) for e in self.terms), default=0)

    def has_negative_exponents(self) -> bool:
        return any(x < 0 for e in self.terms for x in e)

    # transformations
    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise VariableCountMismatch(
                f"point has {len(point)} coordinates, polynomial has {self.nvars} variables"
            )
        pt = [rat(p) for p in point]
        for i, p in enumerate(pt):
            if p == 0 and any(e[i] < 0 for e in self.terms):
                raise ZeroAtNegativeExponent(f"variable {i} is 0 but has a negative exponent")
        total = Fraction(0)
        powers: list[dict] = [dict() for _ in pt]
        for e, c in self.terms.items():
            term = Fraction(c)
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    v = cache.get(k)
                    if v is None:
                        v = pt[i] ** k
                        cache[k] = v
                    term *= v
            total += term
        return total

    def evaluate_partial(self, assignment: Mapping[int, Fraction]) -> "Laurent":
        """Substitute rational values for some variables; the result keeps
        all variable slots (substituted ones get exponent 0)."""
        out: dict = {}
        vals = {i: rat(v) for i, v in assignment.items()}
        for e, c in self.terms.items():
            coeff = Fraction(c)
            new = list(e)
            for i, v in vals.items():
                if e[i]:
                    if v == 0 and e[i] < 0:
                        raise ZeroAtNegativeExponent(f"variable {i} is 0")
                    coeff *= v ** e[i]
                    new[i] = 0
            key = tuple(new)
            out[key] = out.get(key, 0) + coeff
        return Laurent(self.nvars, out)

    def truncate_total_degree(self, vars: Iterable[int], D: int) -> "Laurent":
        if D < 0:
            raise ValueError("D must be nonnegative")
        idx = list(vars)
        return Laurent._raw(
            self.nvars,
            {e: c for e, c in self.terms.items() if sum(e[i] for i in idx) <= D},
        )

    def embed(self, nvars: int, positions: Sequence[int]) -> "Laurent":
        """Re-home variable i at slot positions[i] of an nvars-variable ring."""
        if len(positions) != self.nvars:
            raise VariableCountMismatch("one position per variable is required")
        out = {}
        for e, c in self.terms.items():
            new = [0] * nvars
            for i, k in zip(positions, e):
                new[i] += k
            out[tuple(new)] = out.get(tuple(new), 0) + c
        return Laurent(nvars, out)

    def permute(self, perm: Sequence[int]) -> "Laurent":
        """Variable i is renamed to variable perm[i]."""
        return self.embed(self.nvars, perm)

    def invert_variables(self, vars: Iterable[int] | None = None) -> "Laurent":
        """Substitute x_i -> 1/x_i for the selected variables."""
        idx = set(range(self.nvars) if vars is None else vars)
        return Laurent._raw(
            self.nvars,
            {
                tuple(-k if i in idx else k for i, k in enumerate(e)): c
                for e, c in self.terms.items()
            },
        )

    def scale_variables(self, factors: Sequence) -> "Laurent":
        """Substitute x_i -> factors[i]·x_i."""
        fs = [rat(f) for f in factors]
        out = {}
        for e, c in self.terms.items():
            v = Fraction(c)
            for f, k in zip(fs, e):
                if k:
                    v *= f ** k
            out[e] = v
        return Laurent(self.nvars, out)

    # text
    def to_text(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            cs = rat_str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_record(self) -> list:
        """Sorted term list [[exponents], "p/q"] used by the CLI output."""
        return [[list(e), rat_str(c)] for e, c in self.sorted_terms()]

    def __repr__(self):
        return f"Laurent({self.nvars}, {self.to_text()})"


def variables(n: int) -> list[Laurent]:
    return [Laurent.var(i, n) for i in range(n)]


def poly_add(p: Laurent, q: Laurent) -> Laurent:
    return p + q


def poly_sub(p: Laurent, q: Laurent) -> Laurent:
    return p - q


def poly_mul(p: Laurent, q: Laurent) -> Laurent:
    return p * q


def poly_scale(p: Laurent, c) -> Laurent:
    return p.scale(c)


def poly_eval(p: Laurent, point: Sequence) -> Fraction:
    return p.evaluate(point)


def constant_term(p: Laurent) -> Scalar:
    return p.constant_term()


def truncate_total_degree(p: Laurent, vars: Iterable[int], D: int) -> Laurent:
    return p.truncate_total_degree(vars, D)


def product(factors: Iterable, nvars: int | None = None):
    """Product of Laurent polynomials or scalars."""
    result = None
    for f in factors:
        result = f if result is None else result * f
    if result is None:
        return 1 if nvars is None else Laurent.one(nvars)
    return result


# determinants


def _check_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    if any(len(row) != n for row in m):
        raise NonSquare(f"matrix is not square: {n} rows, row lengths {[len(r) for r in m]}")
    return n


def bareiss_det(m: Sequence[Sequence]) -> Fraction:
    """Fraction-free Gaussian elimination; exact over the rationals."""
    n = _check_square(m)
    if n == 0:
        return Fraction(1)
    # clear denominators row by row so the elimination runs over integers
    rows = []
    scale = Fraction(1)
    for row in m:
        fr = [rat(x) for x in row]
        d = math.lcm(*(x.denominator for x in fr))
        rows.append([int(x * d) for x in fr])
        scale /= d
    a = rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1] * scale


def minor_expansion_det(m: Sequence[Sequence]):
    """Memoized first-row Laplace expansion; works over any commutative ring
    whose elements support +, -, *."""
    n = _check_square(m)
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def det_cols(row: int, cols: tuple):
        if row == n - 1:
            return m[row][cols[0]]
        total = None
        for pos, c in enumerate(cols):
            entry = m[row][c]
            if _entry_is_zero(entry):
                continue
            rest = det_cols(row + 1, cols[:pos] + cols[pos + 1 :])
            if _entry_is_zero(rest):
                continue
            term = entry * rest
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        return 0 if total is None else total

    return det_cols(0, tuple(range(n)))


def _entry_is_zero(x) -> bool:
    return (not x) if not isinstance(x, Laurent) else x.is_zero()


def determinant(m: Sequence[Sequence]):
    """Exact determinant: Bareiss for scalar entries, memoized minor
    expansion when any entry is a Laurent polynomial."""
    _check_square(m)
    if all(_is_scalar(x) for row in m for x in row):
        return bareiss_det(m)
    nvars = {x.nvars for row in m for x in row if isinstance(x, Laurent)}
    if len(nvars) > 1:
        raise VariableCountMismatch(f"entries use different variable counts {sorted(nvars)}")
    (nv,) = nvars
    lifted = [[x if isinstance(x, Laurent) else Laurent.const(x, nv) for x in row] for row in m]
    result = minor_expansion_det(lifted)
    return result if isinstance(result, Laurent) else Laurent.const(result, nv)


def submatrix(m: Sequence[Sequence], rows: Sequence[int], cols: Sequence[int]) -> list[list]:
    return [[m[r][c] for c in cols] for r in rows]


def laplace_terms(m: Sequence[Sequence], rows: Sequence[int]) -> list[tuple]:
    """Signed Laplace expansion along a row set.

    Returns (columns, minor, signed complementary minor) triples, with the
    column subsets listed in increasing lexicographic order. Rows and
    columns are 0-based.
    """
    n = _check_square(m)
    rows = list(rows)
    if len(set(rows)) != len(rows) or any(not 0 <= r < n for r in rows):
        raise BadRowSet(f"invalid row set {rows} for a {n}x{n} matrix")
    rows = sorted(rows)
    other_rows = [r for r in range(n) if r not in rows]
    row_sum = sum(r + 1 for r in rows)
    out = []
    for cols in combinations(range(n), len(rows)):
        other_cols = [c for c in range(n) if c not in cols]
        minor = determinant(submatrix(m, rows, cols)) if rows else 1
        comp = determinant(submatrix(m, other_rows, other_cols)) if other_rows else 1
        sign = -1 if (row_sum + sum(c + 1 for c in cols)) % 2 else 1
        out.append((cols, minor, comp if sign > 0 else -comp))
    return out


def random_rationals(rng, count: int, *, max_num: int = 9, max_den: int = 7, small: bool = False) -> list[Fraction]:
    """Pairwise distinct nonzero rationals with x_i·x_j ≠ 1 and x_i ≠ ±1,
    drawn from `rng` (a random.Random). With small=True all values lie in
    (−1/2, 1/2)."""
    out: list[Fraction] = []
    while len(out) < count:
        den = rng.randint(2 if small else 1, max_den + (5 if small else 0))
        num = rng.randint(1, max(1, den // 2 - (0 if den % 2 else 1)) if small else max_num)
        x = Fraction(num * rng.choice((1, -1)), den)
        if small and abs(x) >= Fraction(1, 2):
            continue
        if x in (0, 1, -1) or x in out or any(x * y == 1 for y in out):
            continue
        out.append(x)
    return out
