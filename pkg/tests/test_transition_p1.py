import itertools
import random
from fractions import Fraction

import pytest

from a1bundles.bundle_p1 import SplitBundle, twist
from a1bundles.laurent import LaurentMatrix, LaurentPoly, NotACocycleError
from a1bundles.transition_p1 import (
    ExtClass,
    build_extension,
    family,
    section_dimension,
    splitting_type,
    twist_matrix,
)

from generators import perturbed_diagonal, random_unimodular
from oracles import brute_section_count, profile

B = SplitBundle
t = LaurentPoly.monomial


def mat(rows):
    return LaurentMatrix(rows)


def as_dicts(M: LaurentMatrix):
    return [[p.coeffs for p in row] for row in M.rows]


# ---------------------------------------------------------------- build


def test_build_extension_examples():
    c = ExtClass(B([-1]), B([1]), [1])
    assert build_extension(c) == mat([[t(-1), 1], [0, t(1)]])
    c = ExtClass(B([0]), B([3]), [1, 0])
    assert c.basis() == [(0, 0, -1), (0, 0, -2)]
    assert build_extension(c) == mat([[1, t(2)], [0, t(3)]])


@pytest.mark.parametrize("sub, quot", [([-1], [1]), ([0, 2], [3]), ([-2], [1, 4]), ([1, 1], [0, -1])])
def test_zero_class_is_split(sub, quot):
    c = ExtClass(B(sub), B(quot))
    assert build_extension(c) == LaurentMatrix.diagonal(sorted(sub) + sorted(quot))


def test_class_index_outside_basis():
    with pytest.raises(ValueError, match="outside"):
        ExtClass(B([0]), B([3]), {(0, 0, -3): 1})
    with pytest.raises(ValueError):
        ExtClass(B([0]), B([3]), [1])


def test_family_examples():
    c = ExtClass(B([-1]), B([1]), [1])
    assert family(c, 0) == LaurentMatrix.diagonal([-1, 1])
    assert family(c, 1) == mat([[t(-1), 1], [0, t(1)]])
    assert family(c, 2) == mat([[t(-1), 2], [0, t(1)]])


# ---------------------------------------------------------- splitting type


def test_splitting_type_examples():
    assert splitting_type(LaurentMatrix.diagonal([2, -3])) == B([-3, 2])
    assert splitting_type(mat([[t(-1), 1], [0, t(1)]])) == B([0, 0])
    assert splitting_type(mat([[t(-1), 0], [0, t(1)]])) == B([-1, 1])


def test_nonsplit_example_by_brute_force_profile():
    rows = [[{-1: 1}, {0: 1}], [{}, {1: 1}]]
    for m in range(-4, 4):
        assert brute_section_count(rows, m) == profile([0, 0], m)
    # the split bundle {-1, 1} would have a section after twisting by -1
    assert profile([-1, 1], -1) == 1
    assert brute_section_count(rows, -1) == 0


def test_not_a_cocycle():
    with pytest.raises(NotACocycleError):
        mat([[1, 1], [1, t(1)]])


def test_twist_matrix():
    assert twist_matrix(LaurentMatrix.diagonal([-1, 1]), 1) == LaurentMatrix.diagonal([0, 2])
    M = mat([[t(-1), 3], [0, t(2)]])
    assert twist_matrix(M, 0) == M
    for m in (-2, 1, 3):
        assert splitting_type(twist_matrix(M, m)) == twist(splitting_type(M), m)


def test_round_trip_diagonal():
    for r in range(1, 4):
        for degs in itertools.combinations_with_replacement(range(-3, 4), r):
            assert splitting_type(LaurentMatrix.diagonal(degs)) == B(degs)


def test_section_dimension_matches_brute_force():
    rng = random.Random(7)
    for _ in range(15):
        degs = [rng.randint(-2, 2) for _ in range(2)]
        M = perturbed_diagonal(rng, degs)
        for m in range(-3, 3):
            assert section_dimension(M, m) == brute_section_count(as_dicts(M), m, bound=16)


def test_factorization_invariance():
    rng = random.Random(2024)
    for _ in range(60):
        n = rng.choice([2, 3])
        degs = [rng.randint(-3, 3) for _ in range(n)]
        M = perturbed_diagonal(rng, degs)
        st = splitting_type(M)
        assert st == B(degs)
        assert sum(st.degrees) == M.det_exponent()


def test_left_inverse_factor_does_not_preserve_type():
    # Q[t^-1] changes of frame act on the right only
    U = mat([[1, t(-1)], [0, 1]])
    M = U @ LaurentMatrix.diagonal([-1, 1])
    assert splitting_type(M) != B([-1, 1])


def test_unimodular_generator():
    rng = random.Random(1)
    for inverse in (False, True):
        U = random_unimodular(rng, 3, inverse)
        assert U.det() in (LaurentPoly(1), LaurentPoly(-1))
        lo, hi = U.exponent_range()
        assert (lo >= -2 and hi <= 0) if inverse else (lo >= 0 and hi <= 2)


# ---------------------------------------------------------------- fibers


@pytest.mark.parametrize("lam", [1, -1, 2, Fraction(1, 2)])
def test_fiber_dichotomy(lam):
    c = ExtClass(B([-1]), B([1]), [1])
    assert splitting_type(family(c, 0)) == B([-1, 1])
    assert splitting_type(family(c, lam)) == B([0, 0])


@pytest.mark.parametrize("a, b", [(-3, 4), (-2, 2), (0, 5), (-4, -1), (1, 6)])
def test_monomial_classes_give_predicted_types(a, b):
    # [[t^a, t^c], [0, t^b]] with a < c < b has type {c, a + b - c}
    for c in range(a + 1, b):
        ext = ExtClass(B([a]), B([b]), {(0, 0, c - b): 1})
        assert splitting_type(build_extension(ext)) == B([c, a + b - c])


def test_rank3_extension():
    c = ExtClass(B([-2]), B([0, 1]), {(0, 0, -1): 1, (0, 1, -2): Fraction(3, 2)})
    M = build_extension(c)
    st = splitting_type(M)
    assert st.rank == 3 and sum(st.degrees) == -1
    assert splitting_type(family(c, 0)) == B([-2, 0, 1])
