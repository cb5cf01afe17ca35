"""Split vector bundles on the projective line.

By Grothendieck's theorem every bundle on P^1 is a sum of line bundles
O(d_1) + ... + O(d_n), so a bundle is stored as its sorted degree tuple.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True, order=True)
class SplitBundle:
    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int]):
        degs = tuple(sorted(int(d) for d in degrees))
        if not degs:
            raise ValueError("a bundle needs rank >= 1")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def line(cls, d: int) -> "SplitBundle":
        return cls((d,))

    @classmethod
    def trivial(cls, n: int) -> "SplitBundle":
        return cls((0,) * n)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def __add__(self, other: "SplitBundle") -> "SplitBundle":
        return direct_sum(self, other)

    def __mul__(self, other: "SplitBundle") -> "SplitBundle":
        return tensor(self, other)

    def __iter__(self):
        return iter(self.degrees)

    def __len__(self):
        return len(self.degrees)

    def __str__(self):
        return format_bundle(self)

    def __repr__(self):
        return f"SplitBundle({list(self.degrees)})"

    def remove(self, other: "SplitBundle") -> "SplitBundle":
        """Multiset difference; ``other`` must be a sub-multiset of summands."""
        left = Counter(self.degrees)
        left.subtract(other.degrees)
        if any(v < 0 for v in left.values()):
            raise ValueError(f"{other} is not a summand of {self}")
        return SplitBundle(left.elements())

    def contains(self, other: "SplitBundle") -> bool:
        have = Counter(self.degrees)
        return all(have[d] >= c for d, c in Counter(other.degrees).items())


def format_bundle(e: SplitBundle) -> str:
    return "+".join("O" if d == 0 else f"O({d})" for d in e.degrees)


def direct_sum(e: SplitBundle, f: SplitBundle) -> SplitBundle:
    return SplitBundle(e.degrees + f.degrees)


def tensor(e: SplitBundle, f: SplitBundle) -> SplitBundle:
    return SplitBundle(a + b for a in e.degrees for b in f.degrees)


def dual(e: SplitBundle) -> SplitBundle:
    return SplitBundle(-d for d in e.degrees)


def twist(e: SplitBundle, m: int) -> SplitBundle:
    return SplitBundle(d + m for d in e.degrees)


def det(e: SplitBundle) -> int:
    return sum(e.degrees)


def h0(e: SplitBundle) -> int:
    return sum(max(0, d + 1) for d in e.degrees)


def h1(e: SplitBundle) -> int:
    return sum(max(0, -d - 1) for d in e.degrees)


def euler_characteristic(e: SplitBundle) -> int:
    return h0(e) - h1(e)


def ext1_dim(quotient: SplitBundle, sub: SplitBundle) -> int:
    """dim Ext^1(quotient, sub) = h^1(sub (x) quotient^dual)."""
    return sum(max(0, f - e - 1) for e in sub.degrees for f in quotient.degrees)


def globally_generated(e: SplitBundle) -> bool:
    return all(d >= 0 for d in e.degrees)


def min_gg_twist(e: SplitBundle) -> int:
    """Least ``m >= 0`` with ``e(m)`` and ``det(e)(m)`` both globally generated."""
    return max(0, -e.degrees[0], -det(e))
