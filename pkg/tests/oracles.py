"""Independent oracles used by the tests.

None of these call into the code paths they check: ranks come from sympy,
cohomology from an explicit truncated Cech complex, group facts from
enumeration.
"""

from __future__ import annotations

import itertools

import sympy


def cech_line_bundle(d: int, window: int | None = None) -> tuple[int, int]:
    """(h0, h1) of O(d) on P^1 from the Cech differential.

    C^0 = Q[t] + Q[t^-1] and C^1 = Q[t, t^-1]; (f, g) maps to f - t^d g(t^-1).
    Both charts are truncated at ``window`` monomials, wide enough that the
    image covers every exponent outside the true cokernel.
    """
    W = window if window is not None else abs(d) + 3
    lo, hi = d - W, W
    rows = hi - lo + 1
    cols = []
    for k in range(W + 1):  # f = t^k
        col = [0] * rows
        col[k - lo] = 1
        cols.append(col)
    for k in range(W + 1):  # g = s^k, contributes -t^(d-k)
        col = [0] * rows
        col[d - k - lo] = -1
        cols.append(col)
    M = sympy.Matrix(cols).T
    r = M.rank()
    return M.cols - r, rows - r


def cech_h0(degrees) -> int:
    return sum(cech_line_bundle(d)[0] for d in degrees)


def cech_h1(degrees) -> int:
    return sum(cech_line_bundle(d)[1] for d in degrees)


def cech_ext1(quotient, sub) -> int:
    return sum(cech_line_bundle(e - f)[1] for e in sub for f in quotient)


def brute_section_count(rows, m: int, bound: int = 12) -> int:
    """h0 of the cocycle ``t^m * rows`` with sections truncated at ``bound``.

    ``rows`` is a matrix of dicts ``{exponent: coeff}``.  Unknowns are the
    coefficients of finf in Q[t^-1] up to degree ``bound``; a section must make
    every negative power of t vanish.  Rank by sympy.
    """
    n = len(rows)
    unknowns = [(i, j) for i in range(n) for j in range(bound + 1)]
    eqs: dict[tuple[int, int], dict[int, int]] = {}
    for r in range(n):
        for i in range(n):
            for e, c in rows[r][i].items():
                for j in range(bound + 1):
                    p = e + m - j
                    if p < 0:
                        eqs.setdefault((r, p), {})
                        col = unknowns.index((i, j))
                        eqs[(r, p)][col] = eqs[(r, p)].get(col, 0) + sympy.Rational(c)
    if not eqs:
        return len(unknowns)
    A = sympy.zeros(len(eqs), len(unknowns))
    for row, d in enumerate(eqs.values()):
        for col, v in d.items():
            A[row, col] = v
    return len(unknowns) - A.rank()


def profile(degrees, m: int) -> int:
    return sum(max(0, a + m + 1) for a in degrees)


def torsion_elements(invariants):
    return list(itertools.product(*(range(m) for m in invariants)))


def brute_divisible(e, k, invariants):
    """Solutions x of k*x = e in a finite group, by enumeration."""
    return [
        x
        for x in torsion_elements(invariants)
        if all((k * xi - ei) % m == 0 for xi, ei, m in zip(x, e, invariants))
    ]


def sympy_normal_form(poly_terms, n: int, a: int) -> dict[tuple[int, int], int]:
    """Normal form of ``sum c x^i z^j`` modulo ``(x^2, z^(n+1) + a x z^n)``.

    Groebner reduction with z > x in lex order, so the remainder lies on the
    basis ``x^i z^j`` with ``i <= 1`` and ``j <= n``.
    """
    z, x = sympy.symbols("z x")
    G = sympy.groebner([x**2, z ** (n + 1) + a * x * z**n], z, x, order="lex")
    p = sum(c * x**i * z**j for (i, j), c in poly_terms.items())
    _, r = G.reduce(sympy.expand(p))
    out = {}
    for (zj, xi), c in sympy.Poly(r, z, x).terms():
        if c:
            out[(xi, zj)] = int(c)
    return out


def sympy_relation_in_ideal(images, n1: int, a1: int, n2: int, a2: int) -> bool:
    """Do the relations of ring 1 map to zero in ring 2 under ``images``?

    ``images = ((p, q), (r, s))`` sends x to p x + q z and z to r x + s z.
    """
    z, x = sympy.symbols("z x")
    (p, q), (r, s) = images
    fx, fz = p * x + q * z, r * x + s * z
    G = sympy.groebner([x**2, z ** (n2 + 1) + a2 * x * z**n2], z, x, order="lex")
    rels = [fx**2, fz ** (n1 + 1) + a1 * fx * fz**n1]
    return all(G.reduce(sympy.expand(e))[1] == 0 for e in rels)
