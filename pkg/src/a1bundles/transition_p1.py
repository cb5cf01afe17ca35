"""Transition cocycles on P^1: extension bundles, one-parameter families and
recovery of the splitting type from an arbitrary Laurent matrix.

Conventions
-----------
* P^1 is covered by ``U0 = Spec Q[t]`` and ``Uinf = Spec Q[t^-1]``.
* A transition matrix ``M`` writes the frame over ``Uinf`` in the frame over
  ``U0``: a global section is ``f0 = M(t) finf(t^-1)`` with both sides
  polynomial on their chart.  ``O(d)`` has cocycle ``t^d``.
* Changing trivializations replaces ``M`` by ``A(t) M B(t^-1)`` with
  ``A`` in GL_n(Q[t]) and ``B`` in GL_n(Q[t^-1]); the splitting type is
  the diagonal ``diag(t^a_i)`` in that double coset.
* The Cech basis of ``H^1(O(d))`` is ``t^j`` for ``d+1 <= j <= -1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence, Union

from .bundle_p1 import SplitBundle, direct_sum, ext1_dim
from .laurent import LaurentMatrix, LaurentPoly, NotACocycleError, Scalar

__all__ = [
    "ExtClass",
    "build_extension",
    "family",
    "splitting_type",
    "section_dimension",
    "section_degree_bound",
    "twist_matrix",
    "NotACocycleError",
]


@dataclass(frozen=True)
class ExtClass:
    """An element of Ext^1(quotient, sub) in Cech coordinates.

    ``coefficients[r]`` multiplies ``basis()[r] = (i, j, k)``: the monomial
    ``t^k`` in ``H^1(O(sub[i] - quotient[j]))``.  Within a pair ``(i, j)`` the
    exponents run ``-1, -2, ...``.
    """

    sub: SplitBundle
    quotient: SplitBundle
    coefficients: tuple[Fraction, ...]

    def __init__(self, sub, quotient, coefficients: Union[Sequence[Scalar], Mapping] = ()):
        sub = sub if isinstance(sub, SplitBundle) else SplitBundle(sub)
        quotient = quotient if isinstance(quotient, SplitBundle) else SplitBundle(quotient)
        object.__setattr__(self, "sub", sub)
        object.__setattr__(self, "quotient", quotient)
        basis = ext_basis(sub, quotient)
        if isinstance(coefficients, Mapping):
            index = {b: r for r, b in enumerate(basis)}
            coeffs = [Fraction(0)] * len(basis)
            for key, c in coefficients.items():
                if key not in index:
                    raise ValueError(f"coefficient index {key} outside the Cech basis of Ext^1")
                coeffs[index[key]] = Fraction(c)
        else:
            coeffs = [Fraction(c) for c in coefficients]
            if not coeffs:
                coeffs = [Fraction(0)] * len(basis)
            if len(coeffs) != len(basis):
                raise ValueError(
                    f"Ext^1({quotient}, {sub}) has dimension {len(basis)}, got {len(coeffs)} coefficients"
                )
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def basis(self) -> list[tuple[int, int, int]]:
        return ext_basis(self.sub, self.quotient)

    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def scaled(self, lam: Scalar) -> "ExtClass":
        lam = Fraction(lam)
        return ExtClass(self.sub, self.quotient, [lam * c for c in self.coefficients])


def ext_basis(sub: SplitBundle, quotient: SplitBundle) -> list[tuple[int, int, int]]:
    out = []
    for i, e in enumerate(sub.degrees):
        for j, f in enumerate(quotient.degrees):
            out.extend((i, j, k) for k in range(-1, e - f, -1))
    assert len(out) == ext1_dim(quotient, sub)
    return out


def build_extension(c: ExtClass) -> LaurentMatrix:
    """Upper block-triangular cocycle of the extension 0 -> sub -> E -> quotient -> 0."""
    r, s = c.sub.rank, c.quotient.rank
    n = r + s
    rows = [[LaurentPoly() for _ in range(n)] for _ in range(n)]
    for i, e in enumerate(c.sub.degrees):
        rows[i][i] = LaurentPoly.monomial(e)
    for j, f in enumerate(c.quotient.degrees):
        rows[r + j][r + j] = LaurentPoly.monomial(f)
    for (i, j, k), coeff in zip(c.basis(), c.coefficients):
        if coeff:
            f = c.quotient.degrees[j]
            rows[i][r + j] = rows[i][r + j] + LaurentPoly.monomial(f + k, coeff)
    return LaurentMatrix(rows)


def family(c: ExtClass, lam: Scalar) -> LaurentMatrix:
    """Fiber at ``lam`` of the line through 0 and ``c`` in Ext^1."""
    return build_extension(c.scaled(lam))


def twist_matrix(M: LaurentMatrix, m: int) -> LaurentMatrix:
    return M.scale(LaurentPoly.monomial(m))


def section_degree_bound(M: LaurentMatrix, m: int = 0) -> int:
    """Upper bound on the t^-1-degree of ``finf`` for a section of ``t^m M``.

    From ``finf = adj(M') f0 / det(M')`` with ``f0`` in Q[t]: the adjugate has
    exponents >= (n-1)*lo', so ``finf`` has exponents >= (n-1)*lo' - k'.
    """
    n = M.size
    lo, _ = M.exponent_range()
    k = M.det_exponent()
    return (k + n * m) - (n - 1) * (lo + m)


def section_dimension(M: LaurentMatrix, m: int = 0, degree_bound: int | None = None) -> int:
    """``h^0`` of the bundle with cocycle ``t^m M``, by exact linear algebra.

    Unknowns are the coefficients of ``finf = sum_j v_j t^-j``; the equations
    say every negative power of ``t`` in ``t^m M finf`` cancels.
    """
    n = M.size
    lo, hi = M.exponent_range()
    if hi + m < 0:
        return 0
    D = section_degree_bound(M, m) if degree_bound is None else degree_bound
    if D < 0:
        return 0
    nunk = n * (D + 1)
    eqs: dict[tuple[int, int], dict[int, int]] = {}
    for r in range(n):
        # rescaling a row of M rescales its equations, so clear denominators
        den = math.lcm(*(Fraction(c).denominator for p in M.rows[r] for c in p.coeffs.values()))
        for i in range(n):
            for e, coeff in M.rows[r][i].coeffs.items():
                coeff = int(coeff * den)
                for j in range(D + 1):
                    power = e + m - j
                    if power < 0:
                        row = eqs.setdefault((r, power), {})
                        col = i * (D + 1) + j
                        row[col] = row.get(col, 0) + coeff
    return nunk - _sparse_rank(list(eqs.values()))


def _sparse_rank(rows: list[dict[int, Fraction]]) -> int:
    """Rank of a sparse rational matrix given as a list of ``{col: value}`` rows.

    Rows are scaled to primitive integer vectors and eliminated
    fraction-free, which is exact and much cheaper than ``Fraction``
    arithmetic.
    """
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = _primitive(row)
        while row:
            c = min(row)
            p = pivots.get(c)
            if p is None:
                pivots[c] = row
                break
            a, b = p[c], row[c]
            out = {k: a * v for k, v in row.items()}
            for k, v in p.items():
                nv = out.get(k, 0) - b * v
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            row = _primitive(out)
    return len(pivots)


def _primitive(row: dict) -> dict[int, int]:
    row = {k: v for k, v in row.items() if v}
    if not row:
        return row
    if not all(type(v) is int for v in row.values()):
        den = math.lcm(*(Fraction(v).denominator for v in row.values()))
        row = {k: int(v * den) for k, v in row.items()}
    g = math.gcd(*row.values())
    return {k: v // g for k, v in row.items()} if g > 1 else row


def splitting_type(M: LaurentMatrix) -> SplitBundle:
    """The degrees ``a_i`` with ``M ~ diag(t^a_i)``.

    Uses the profile ``s(m) = h0(t^m M) = sum max(0, a_i + m + 1)``: its first
    difference ``g(m)`` counts the ``a_i >= -m`` and the second difference
    picks out the multiplicity of ``-m``.  Every ``a_i <= hi`` (no sections
    once all exponents are negative), so the sweep starts at ``m = -hi``; it
    stops when n-1 degrees are known and the last comes from ``sum a_i = k``.
    """
    n = M.size
    d = M.det()
    if not d.is_monomial():
        raise NotACocycleError(f"determinant {d} is not a nonzero monomial")
    k = d.min_exp()
    if n == 1:
        return SplitBundle((k,))
    _, hi = M.exponent_range()
    found: list[int] = []
    m = -hi
    prev_s = 0
    prev_g = 0
    while len(found) < n - 1:
        s = section_dimension(M, m)
        g = s - prev_s
        found.extend([-m] * (g - prev_g))
        prev_s, prev_g = s, g
        m += 1
    if len(found) == n - 1:
        found.append(k - sum(found))
    assert len(found) == n and sum(found) == k
    return SplitBundle(found)
