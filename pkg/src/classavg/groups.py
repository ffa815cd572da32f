"""Group descriptors shared by the character, average and oracle modules."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial

from .errors import UnsupportedGroup


class Family(str, Enum):
    UNITARY = "u"
    SYMPLECTIC = "sp"
    SO_EVEN = "so-even"
    SO_ODD = "so-odd"
    O_FULL = "o"
    O_MINUS = "o-minus"


_ALIASES = {
    "u": Family.UNITARY,
    "unitary": Family.UNITARY,
    "sp": Family.SYMPLECTIC,
    "symplectic": Family.SYMPLECTIC,
    "so-even": Family.SO_EVEN,
    "so": Family.SO_EVEN,
    "soeven": Family.SO_EVEN,
    "so-odd": Family.SO_ODD,
    "soodd": Family.SO_ODD,
    "o": Family.O_FULL,
    "ofull": Family.O_FULL,
    "o-minus": Family.O_MINUS,
    "ominus": Family.O_MINUS,
}


@dataclass(frozen=True)
class GroupSpec:
    """A compact classical group; N is the half-rank (number of free
    eigenvalue angles)."""

    family: Family
    N: int

    def __post_init__(self):
        object.__setattr__(self, "family", parse_family(self.family))
        if self.N < 1:
            raise ValueError("N must be a positive integer")

    @property
    def matrix_size(self) -> int:
        if self.family is Family.UNITARY:
            return self.N
        if self.family is Family.SO_ODD:
            return 2 * self.N + 1
        return 2 * self.N

    @property
    def weyl_order(self) -> int:
        """Order of the Weyl group; defined for U, Sp, SO even and SO odd."""
        f = factorial(self.N)
        if self.family is Family.UNITARY:
            return f
        if self.family in (Family.SYMPLECTIC, Family.SO_ODD):
            return 2**self.N * f
        if self.family is Family.SO_EVEN:
            return 2 ** (self.N - 1) * f
        raise UnsupportedGroup(f"{self.name} has no Weyl-group form here")

    @property
    def name(self) -> str:
        n = self.N
        return {
            Family.UNITARY: f"U({n})",
            Family.SYMPLECTIC: f"Sp({2 * n})",
            Family.SO_EVEN: f"SO({2 * n})",
            Family.SO_ODD: f"SO({2 * n + 1})",
            Family.O_FULL: f"O({2 * n})",
            Family.O_MINUS: f"O-({2 * n})",
        }[self.family]


def parse_family(value) -> Family:
    if isinstance(value, Family):
        return value
    key = str(value).strip().lower().replace("_", "-")
    if key in _ALIASES:
        return _ALIASES[key]
    raise UnsupportedGroup(f"unknown group family {value!r}")


def group(family, N: int) -> GroupSpec:
    return GroupSpec(parse_family(family), N)
