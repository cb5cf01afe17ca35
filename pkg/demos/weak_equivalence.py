"""Projective bundles P(O^n + O(a)) over P^1 and their Chow rings.

The divisibility test n+1 | a-b is printed next to the search for a graded
ring isomorphism.  The two agree on most pairs.  Where only a+b is divisible,
the ring search still finds a sign-reversing map.
"""

from a1bundles.chow import ProjBundleRing, compare_criteria, find_graded_iso, reduce

R = ProjBundleRing(2, 1)
print(R, " zeta^3 =", reduce(R.zeta ** 3, R), " x*zeta^3 =", reduce(R.x * R.zeta ** 3, R))

for n in (1, 2, 3):
    print(f"\nn = {n}: rows a, columns b in [-3, 3]   (W weak-equivalent, r ring iso only)")
    for a in range(-3, 4):
        cells = []
        for b in range(-3, 4):
            c = compare_criteria(n, a, b)
            cells.append("W" if c["weak_equivalent"] else ("r" if c["chow_isomorphic"] else "."))
        print(f"  {a:>2}  " + " ".join(cells))

w = find_graded_iso(ProjBundleRing(2, 1), ProjBundleRing(2, 2))
print("\nPB(n=2, a=1) -> PB(n=2, a=2):", w)
