"""Random test data: unimodular factors and perturbed diagonal cocycles."""

from __future__ import annotations

import random

from a1bundles.laurent import LaurentMatrix, LaurentPoly


def random_poly(rng: random.Random, degree: int, inverse: bool) -> LaurentPoly:
    sign = -1 if inverse else 1
    return LaurentPoly({sign * k: rng.randint(-3, 3) for k in range(degree + 1)})


def random_unimodular(rng: random.Random, n: int, inverse: bool) -> LaurentMatrix:
    """Product lower-unipotent * upper-unipotent * signs over Q[t] or Q[t^-1].

    Triangular factors have entries of degree <= 1, so entries of the product
    have degree <= 2 and the determinant is +-1.
    """
    lower = [[LaurentPoly(1) if i == j else (random_poly(rng, 1, inverse) if i > j else LaurentPoly()) for j in range(n)] for i in range(n)]
    upper = [[LaurentPoly(1) if i == j else (random_poly(rng, 1, inverse) if i < j else LaurentPoly()) for j in range(n)] for i in range(n)]
    signs = LaurentMatrix([[LaurentPoly(rng.choice([1, -1])) if i == j else LaurentPoly() for j in range(n)] for i in range(n)])
    return LaurentMatrix(lower) @ LaurentMatrix(upper) @ signs


def perturbed_diagonal(rng: random.Random, degrees) -> LaurentMatrix:
    """``U(t) diag(t^d) V(t^-1)``: same bundle, scrambled cocycle."""
    n = len(degrees)
    U = random_unimodular(rng, n, inverse=False)
    V = random_unimodular(rng, n, inverse=True)
    return U @ LaurentMatrix.diagonal(degrees) @ V
