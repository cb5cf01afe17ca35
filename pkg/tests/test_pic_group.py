import pytest
from hypothesis import given, strategies as st

from a1bundles.pic_group import GroupMismatchError, PicGroup, Z, add, divisible_by, scale

from oracles import brute_divisible, torsion_elements


def test_add_examples():
    assert add(Z.element(2), Z.element(3)) == Z.element(5)
    G4 = PicGroup(0, (4,))
    assert add(G4.element(3), G4.element(3)) == G4.element(2)
    G = PicGroup.parse("Z x Z/5")
    assert add(G.element(1, 4), G.element(-1, 3)) == G.element(0, 2)


def test_add_mismatch():
    with pytest.raises(GroupMismatchError):
        add(Z.element(1), PicGroup(0, (4,)).element(1))


def test_scale_examples():
    assert scale(3, Z.element(2)) == Z.element(6)
    assert scale(2, PicGroup(0, (4,)).element(3)) == PicGroup(0, (4,)).element(2)
    G = PicGroup.parse("Z^2 x Z/6")
    assert scale(0, G.element(3, -1, 5)) == G.zero()


def test_divisible_examples():
    assert divisible_by(Z.element(6), 3) == Z.element(2)
    assert divisible_by(PicGroup(0, (4,)).element(1), 2) is None
    G = PicGroup.parse("Z x Z/5")
    assert divisible_by(G.element(4, 2), 3) is None
    # the torsion coordinate alone is solvable (x = 4), the free one is not
    assert brute_divisible((2,), 3, (5,)) == [(4,)]


def test_torsion_reduced_on_construction():
    G = PicGroup(1, (3, 6))
    assert G.element(7, -1, 13).coords == (7, 2, 1)


@pytest.mark.parametrize(
    "text, free, tors",
    [("Z", 1, ()), ("Z x Z/5", 1, (5,)), ("Z^3 x Z/2 x Z/4", 3, (2, 4)), ("Z/2 x Z/6", 0, (2, 6)), ("0", 0, ())],
)
def test_parse_descriptor(text, free, tors):
    G = PicGroup.parse(text)
    assert (G.free_rank, G.torsion_invariants) == (free, tors)
    assert PicGroup.parse(str(G)) == G


@pytest.mark.parametrize("bad", ["Z/4 x Z/6", "Z/1", "Q", "Z x"])
def test_bad_descriptors(bad):
    with pytest.raises(ValueError):
        PicGroup.parse(bad)


def test_element_literal():
    G = PicGroup.parse("Z x Z/5")
    assert G.parse_element("1, 9") == G.element(1, 4)
    with pytest.raises(ValueError):
        G.parse_element("1")


def _divchain(ms):
    out = []
    for m in ms:
        out.append(m * out[-1] if out else m)
    return out


groups = st.builds(
    lambda r, ms: PicGroup(r, tuple(_divchain(ms))),
    st.integers(0, 2),
    st.lists(st.sampled_from([2, 3, 4]), max_size=2),
)


@given(st.data())
def test_scale_then_divide_roundtrip(data):
    G = data.draw(groups)
    x = G.element(*data.draw(st.lists(st.integers(-50, 50), min_size=G.ngens, max_size=G.ngens)))
    k = data.draw(st.integers(1, 15))
    w = divisible_by(scale(k, x), k)
    assert w is not None
    assert scale(k, w) == scale(k, x)


@given(st.data())
def test_divide_by_one_is_identity(data):
    G = data.draw(groups)
    x = G.element(*data.draw(st.lists(st.integers(-50, 50), min_size=G.ngens, max_size=G.ngens)))
    assert divisible_by(x, 1) == x


@pytest.mark.parametrize("invariants", [(2,), (12,), (2, 4), (3, 9), (2, 2, 4), (5, 10), (200,), (2, 6, 12)])
def test_divisible_matches_enumeration(invariants):
    G = PicGroup(0, invariants)
    assert G.order() <= 200
    for e in torsion_elements(invariants):
        for k in range(1, 13):
            got = divisible_by(G.element(*e), k)
            sols = brute_divisible(e, k, invariants)
            assert (got is None) == (not sols)
            if got is not None:
                assert got.coords in sols
