"""Laurent polynomials and matrices over Q, in the variable ``t``."""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Scalar = Union[int, Fraction]


class LaurentPoly:
    """Finitely supported map ``exponent -> Fraction`` with no stored zeros."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Union[Mapping[int, Scalar], Scalar, None] = None):
        if coeffs is None:
            coeffs = {}
        elif not isinstance(coeffs, Mapping):
            coeffs = {0: coeffs}
        self._c = {int(k): Fraction(v) for k, v in coeffs.items() if v != 0}

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "LaurentPoly":
        return cls({exp: coeff})

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def items(self):
        return sorted(self._c.items())

    def __getitem__(self, exp: int) -> Fraction:
        return self._c.get(exp, Fraction(0))

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def min_exp(self) -> int:
        return min(self._c)

    def max_exp(self) -> int:
        return max(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def is_polynomial(self) -> bool:
        """Lies in Q[t]."""
        return all(k >= 0 for k in self._c)

    def is_polynomial_in_inverse(self) -> bool:
        """Lies in Q[t^-1]."""
        return all(k <= 0 for k in self._c)

    @staticmethod
    def _coerce(x) -> "LaurentPoly":
        return x if isinstance(x, LaurentPoly) else LaurentPoly(x)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[int, Fraction] = {}
        for (a, x), (b, y) in itertools.product(self._c.items(), other._c.items()):
            out[a + b] = out.get(a + b, 0) + x * y
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            ((e, c),) = self._c.items()
            return LaurentPoly({e * k: Fraction(1) / c ** (-k)})
        out = LaurentPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by ``t^m``."""
        return LaurentPoly({k + m: v for k, v in self._c.items()})

    def substitute_inverse(self) -> "LaurentPoly":
        """``p(t) -> p(t^-1)``."""
        return LaurentPoly({-k: v for k, v in self._c.items()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)!r})"


def format_poly(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k, v in sorted(p.coeffs.items()):
        sign = "-" if v < 0 else "+"
        a = abs(v)
        if k == 0:
            body = str(a)
        else:
            var = "t" if k == 1 else f"t^{k}"
            body = var if a == 1 else f"{a} {var}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class LaurentMatrix:
    """Square matrix of Laurent polynomials whose determinant is a unit ``c t^k``.

    Interpreted as a transition cocycle on the two-chart cover of P^1: a global
    section is a pair ``f0`` in Q[t]^n, ``finf`` in Q[t^-1]^n with ``f0 = M finf``.
    """

    __slots__ = ("rows", "_det")

    def __init__(self, rows: Sequence[Sequence], check: bool = True):
        rows = tuple(tuple(LaurentPoly._coerce(x) for x in r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("transition matrix must be square and nonempty")
        self.rows = rows
        self._det = None
        if check:
            d = self.det()
            if not d.is_monomial():
                raise NotACocycleError(f"determinant {d} is not a nonzero monomial")

    @classmethod
    def diagonal(cls, degrees: Iterable[int]) -> "LaurentMatrix":
        degs = list(degrees)
        n = len(degs)
        return cls([[LaurentPoly.monomial(degs[i]) if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> "LaurentMatrix":
        return cls.diagonal([0] * n)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def det(self) -> LaurentPoly:
        if self._det is None:
            self._det = _det([list(r) for r in self.rows])
        return self._det

    def det_exponent(self) -> int:
        return self.det().min_exp()

    def exponent_range(self) -> tuple[int, int]:
        exps = [k for r in self.rows for p in r for k in p.coeffs]
        return min(exps), max(exps)

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        n = self.size
        if other.size != n:
            raise ValueError("size mismatch")
        rows = [
            [sum((self.rows[i][k] * other.rows[k][j] for k in range(n)), LaurentPoly()) for j in range(n)]
            for i in range(n)
        ]
        return LaurentMatrix(rows)

    def scale(self, c: LaurentPoly) -> "LaurentMatrix":
        return LaurentMatrix([[c * x for x in r] for r in self.rows])

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix([list(col) for col in zip(*self.rows)])

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __str__(self):
        return format_matrix(self)

    def __repr__(self):
        return f"LaurentMatrix({format_matrix(self)!r})"


class NotACocycleError(ValueError):
    """The matrix is not invertible over Q[t, t^-1]."""


def format_matrix(m: LaurentMatrix) -> str:
    return "; ".join(", ".join(format_poly(p) for p in r) for r in m.rows)


def _det(a: list[list[LaurentPoly]]) -> LaurentPoly:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = LaurentPoly()
    for j in range(n):
        if a[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in a[1:]]
        term = a[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def rational_rank(rows: list[list[Fraction]]) -> int:
    """Rank of a rational matrix by Gaussian elimination (rows are consumed)."""
    if not rows:
        return 0
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        inv = 1 / p[c]
        for r in range(rank + 1, len(rows)):
            f = rows[r][c]
            if f:
                f *= inv
                row = rows[r]
                for k in range(c, ncols):
                    if p[k]:
                        row[k] -= f * p[k]
        rank += 1
        if rank == len(rows):
            break
    return rank
