"""Integer partitions and the combinatorics of their Young diagrams.

Boxes are addressed 1-based as (row i, column j), matching the usual
hook and content conventions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DoesNotFitBox


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; trailing zeros are dropped."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("-", "", "()", "0"):
            return cls()
        return cls(int(p) for p in text.strip("()[]").replace(" ", "").split(",") if p)

    @property
    def length(self) -> int:
        return len(self)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """1-based part, 0 beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for i, row in enumerate(self, start=1):
            for j in range(1, row + 1):
                yield (i, j)

    def contains(self, other: Sequence[int]) -> bool:
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def to_text(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self):
        return f"Partition({self.to_text()})"


@dataclass(frozen=True)
class SignedPartition:
    """Label of an SO(2n) character: the sign picks λ₊ or λ₋ when λ_n ≠ 0."""

    base: Partition
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "base", Partition(self.base))

    def normalized(self, n: int) -> "SignedPartition":
        """Force sign +1 when the label does not reach the last row."""
        if len(self.base) < n:
            return SignedPartition(self.base, 1)
        return self


def conjugate(lam: Sequence[int]) -> Partition:
    lam = list(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def part_sum(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    n = max(len(lam), len(mu))
    a = list(lam) + [0] * (n - len(lam))
    b = list(mu) + [0] * (n - len(mu))
    return Partition(x + y for x, y in zip(a, b))


def part_union(lam: Sequence[int], mu: Sequence[int]) -> Partition:
    return Partition(sorted(list(lam) + list(mu), reverse=True))


def hook_lengths(lam: Sequence[int]) -> dict[tuple[int, int], int]:
    lam = Partition(lam)
    lc = conjugate(lam)
    return {(i, j): lam.part(i) + lc.part(j) - i - j + 1 for i, j in lam.boxes()}


def contents(lam: Sequence[int]) -> dict[tuple[int, int], int]:
    return {(i, j): j - i for i, j in Partition(lam).boxes()}


def hook_product(lam: Sequence[int]) -> int:
    out = 1
    for h in hook_lengths(lam).values():
        out *= h
    return out


def is_horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """λ/μ has at most one box per column: μ ⊆ λ and λ_{i+1} ≤ μ_i."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return False
    return all(lam.part(i + 1) <= mu.part(i) for i in range(1, len(lam) + 1))


def is_vertical_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """λ/μ has at most one box per row."""
    lam, mu = Partition(lam), Partition(mu)
    if not lam.contains(mu):
        return False
    return all(lam.part(i) - mu.part(i) <= 1 for i in range(1, len(lam) + 1))


def horizontal_strips_removed(lam: Sequence[int]) -> Iterator[Partition]:
    """All μ with λ/μ a horizontal strip (including μ = λ)."""
    lam = Partition(lam)
    n = len(lam)
    ranges = [range(lam.part(i + 1), lam.part(i) + 1) for i in range(1, n + 1)]

    def rec(i: int, acc: list[int]):
        if i == n:
            yield Partition(acc)
            return
        for v in ranges[i]:
            yield from rec(i + 1, acc + [v])

    yield from rec(0, [])


def vertical_strips_removed(lam: Sequence[int]) -> Iterator[Partition]:
    """All μ with λ/μ a vertical strip (including μ = λ)."""
    for nu in horizontal_strips_removed(conjugate(lam)):
        yield conjugate(nu)


def horizontal_strips_added(mu: Sequence[int], r: int) -> list[Partition]:
    """All λ ⊇ μ with λ/μ a horizontal strip of size r."""
    mu = Partition(mu)
    n = len(mu) + 1
    out = []

    def rec(i: int, left: int, acc: list[int]):
        if i == n:
            if left == 0:
                out.append(Partition(acc))
            return
        cap = left if i == 0 else min(left, mu.part(i) - mu.part(i + 1))
        for add in range(cap, -1, -1):
            rec(i + 1, left - add, acc + [mu.part(i + 1) + add])

    rec(0, r, [])
    return out


def vertical_strips_added(mu: Sequence[int], r: int) -> list[Partition]:
    return [conjugate(p) for p in horizontal_strips_added(conjugate(mu), r)]


def box_complement(lam: Sequence[int], N: int, k: int) -> Partition:
    """λ̃ = (k − λ'_N, …, k − λ'_1) for λ inside the k-row, N-column box."""
    lam = Partition(lam)
    if len(lam) > k or lam.part(1) > N:
        raise DoesNotFitBox(f"{lam.to_text()} does not fit in {k} rows of width {N}")
    lc = conjugate(lam)
    return Partition(k - lc.part(j) for j in range(N, 0, -1))


def odd_row_count(lam: Sequence[int]) -> int:
    return sum(1 for p in lam if p % 2)


def is_even(lam: Sequence[int]) -> bool:
    """All parts even; the empty partition counts as even."""
    return all(p % 2 == 0 for p in lam)


def is_odd(lam: Sequence[int]) -> bool:
    """All parts odd. Vacuously true for the empty partition; sums over odd
    partitions exclude it explicitly."""
    return all(p % 2 == 1 for p in lam)


@lru_cache(maxsize=None)
def _box(width: int, k: int) -> tuple[Partition, ...]:
    out: list[Partition] = []

    def rec(rows_left: int, cap: int, acc: list[int]):
        if rows_left == 0:
            out.append(Partition(acc))
            return
        for v in range(cap, -1, -1):
            if v == 0:
                out.append(Partition(acc))
                return
            rec(rows_left - 1, v, acc + [v])

    rec(k, width, [])
    return tuple(sorted(set(out), reverse=True))


FILTERS = (
    "all",
    "even-rows",
    "even-columns",
    "odd-columns-literal",
    "odd-columns-corrected",
    "odd-rows-count",
)


def box_filter(name: str, width: int, r: int | None = None) -> Callable[[Partition], bool]:
    """Predicate for enumerate_in_box; `width` is the box width."""
    if name == "all":
        return lambda lam: True
    if name == "even-rows":
        return is_even
    if name == "even-columns":
        return lambda lam: is_even(conjugate(lam))
    if name == "odd-columns-literal":
        return lambda lam: bool(lam) and is_odd(conjugate(lam))
    if name == "odd-columns-corrected":
        return lambda lam: bool(lam) and lam[0] == width and is_odd(conjugate(lam))
    if name == "odd-rows-count":
        if r is None:
            raise ValueError("the odd-rows-count filter needs r")
        return lambda lam: odd_row_count(lam) == r
    raise ValueError(f"unknown filter {name!r}; choose from {FILTERS}")


def enumerate_in_box(width: int, k: int, filter: str = "all", r: int | None = None) -> list[Partition]:
    """Partitions with at most k rows and parts at most `width`, in
    lexicographically descending order, passing the named filter."""
    keep = box_filter(filter, width, r)
    return [lam for lam in _box(width, k) if keep(lam)]


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> tuple[Partition, ...]:
    """Partitions of n (optionally bounded), lexicographically descending."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        return (Partition(),)
    if max_len == 0:
        return ()
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, max_len - 1):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_up_to(n: int, max_len: int | None = None) -> list[Partition]:
    return [p for m in range(n + 1) for p in partitions_of(m, None, max_len)]
