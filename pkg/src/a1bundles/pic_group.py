"""Finitely generated abelian groups in invariant-factor form.

These stand in for Picard groups of curves.  A group is ``Z^r x Z/m1 x ... x Z/mk``
with ``m1 | m2 | ... | mk`` and every ``mi >= 2``; an element is an integer
vector with the torsion coordinates reduced into ``[0, mi)``.

>>> G = PicGroup.parse("Z x Z/5")
>>> G.element(1, 4) + G.element(-1, 3)
PicElement('Z x Z/5', (0, 2))
>>> G.divisible_by(G.element(4, 2), 3) is None
True
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


class GroupMismatchError(ValueError):
    """Raised when elements of two different groups are combined."""


@dataclass(frozen=True)
class PicGroup:
    free_rank: int = 1
    torsion_invariants: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        inv = tuple(int(m) for m in self.torsion_invariants)
        object.__setattr__(self, "torsion_invariants", inv)
        for m in inv:
            if m < 2:
                raise ValueError(f"torsion invariant {m} is < 2")
        for m, m_next in zip(inv, inv[1:]):
            if m_next % m:
                raise ValueError(f"invariants not in divisibility order: {m} does not divide {m_next}")

    @classmethod
    def parse(cls, text: str) -> "PicGroup":
        """Read a descriptor such as ``Z``, ``Z^2 x Z/4``, ``Z/2 x Z/6`` or ``0``."""
        text = text.strip()
        if text in ("0", "1", "trivial"):
            return cls(0, ())
        free = 0
        tors = []
        for part in re.split(r"\s*[x×]\s*", text):
            m = re.fullmatch(r"Z(?:\^(\d+))?", part)
            if m:
                free += int(m.group(1) or 1)
                continue
            m = re.fullmatch(r"Z/(\d+)", part)
            if m:
                tors.append(int(m.group(1)))
                continue
            raise ValueError(f"bad group descriptor component {part!r} in {text!r}")
        return cls(free, tuple(tors))

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{m}" for m in self.torsion_invariants)
        return " x ".join(parts) if parts else "0"

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion_invariants)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> Optional[int]:
        """Group order, or None for infinite groups."""
        if not self.is_finite:
            return None
        return math.prod(self.torsion_invariants)

    def element(self, *coords: int) -> "PicElement":
        if len(coords) == 1 and not isinstance(coords[0], int):
            coords = tuple(coords[0])
        if len(coords) != self.ngens:
            raise ValueError(f"{self} needs {self.ngens} coordinates, got {len(coords)}")
        return PicElement(self, tuple(int(c) for c in coords))

    def parse_element(self, text: str) -> "PicElement":
        """Read a comma-separated literal like ``1,4`` in declared component order."""
        text = text.strip()
        coords = [int(c) for c in text.split(",")] if text else []
        return self.element(*coords)

    def zero(self) -> "PicElement":
        return PicElement(self, (0,) * self.ngens)

    def elements(self) -> Iterator["PicElement"]:
        """All elements of a finite group."""
        if not self.is_finite:
            raise ValueError(f"{self} is infinite")
        for coords in itertools.product(*(range(m) for m in self.torsion_invariants)):
            yield PicElement(self, coords)

    def divisible_by(self, e: "PicElement", k: int) -> Optional["PicElement"]:
        return divisible_by(e, k)


@dataclass(frozen=True)
class PicElement:
    group: PicGroup
    coords: tuple[int, ...]

    def __post_init__(self):
        g = self.group
        if len(self.coords) != g.ngens:
            raise ValueError("coordinate vector has wrong length")
        free = self.coords[: g.free_rank]
        tors = tuple(c % m for c, m in zip(self.coords[g.free_rank:], g.torsion_invariants))
        object.__setattr__(self, "coords", tuple(free) + tors)

    @property
    def free_part(self) -> tuple[int, ...]:
        return self.coords[: self.group.free_rank]

    @property
    def torsion_part(self) -> tuple[int, ...]:
        return self.coords[self.group.free_rank:]

    def _check(self, other: "PicElement"):
        if not isinstance(other, PicElement):
            return NotImplemented
        if other.group != self.group:
            raise GroupMismatchError(f"cannot combine elements of {self.group} and {other.group}")

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return PicElement(self.group, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return PicElement(self.group, tuple(-a for a in self.coords))

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        return PicElement(self.group, tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        return ",".join(str(c) for c in self.coords)

    def __repr__(self):
        return f"PicElement({str(self.group)!r}, {self.coords})"


def add(a: PicElement, b: PicElement) -> PicElement:
    return a + b


def scale(k: int, a: PicElement) -> PicElement:
    return k * a


def divisible_by(e: PicElement, k: int) -> Optional[PicElement]:
    """Return some ``x`` with ``k * x == e``, or None if no such ``x`` exists.

    Each cyclic component is handled on its own: a free coordinate needs
    ``k | e_i``; a ``Z/m`` coordinate needs ``gcd(k, m) | e_i``.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    g = e.group
    out = []
    for c in e.free_part:
        if c % k:
            return None
        out.append(c // k)
    for c, m in zip(e.torsion_part, g.torsion_invariants):
        d = math.gcd(k, m)
        if c % d:
            return None
        mod = m // d
        # k/d is a unit mod m/d; any lift of the solution mod m/d works
        out.append((c // d) * pow(k // d, -1, mod) % mod if mod > 1 else 0)
    x = PicElement(g, tuple(out))
    assert k * x == e
    return x


def parse_group(text: str) -> PicGroup:
    return PicGroup.parse(text)


def as_element(group: PicGroup, value) -> PicElement:
    """Coerce an int, a coordinate sequence or an element into ``group``."""
    if isinstance(value, PicElement):
        if value.group != group:
            raise GroupMismatchError(f"{value!r} is not in {group}")
        return value
    if isinstance(value, int):
        return group.element(value)
    if isinstance(value, str):
        return group.parse_element(value)
    if isinstance(value, Sequence):
        return group.element(*value)
    raise TypeError(f"cannot interpret {value!r} as an element of {group}")


Z = PicGroup(1, ())
