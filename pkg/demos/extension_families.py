"""One-parameter families of extensions and how their fibers split.

The class 1 in Ext^1(O(1), O(-1)) gives the family [[t^-1, lam], [0, t]].
At lam = 0 it is the split bundle O(-1) + O(1); at any other lam it is O + O.
That jump is exactly a direct concordance.
"""

from fractions import Fraction

from a1bundles import SplitBundle, format_bundle
from a1bundles.bundle_p1 import ext1_dim
from a1bundles.laurent import format_matrix
from a1bundles.transition_p1 import ExtClass, build_extension, family, splitting_type

sub, quot = SplitBundle([-1]), SplitBundle([1])
print("dim Ext^1(O(1), O(-1)) =", ext1_dim(quot, sub))
c = ExtClass(sub, quot, [1])
for lam in (0, 1, -1, 2, Fraction(1, 2)):
    M = family(c, lam)
    print(f"  lam={str(lam):>4}  {format_matrix(M):<16} {format_bundle(splitting_type(M))}")

# a bigger Ext group: extensions of O(3) by O(-2) realise every middle type
sub, quot = SplitBundle([-2]), SplitBundle([3])
print()
print("dim Ext^1(O(3), O(-2)) =", ext1_dim(quot, sub))
seen = {}
for c in range(-1, 3):
    ext = ExtClass(sub, quot, {(0, 0, c - 3): 1})
    seen[c] = splitting_type(build_extension(ext))
    print(f"  class t^{c - 3}: {format_bundle(seen[c])}")

# a generic combination lands on the most balanced type
ext = ExtClass(sub, quot, [1, 2, 3, 4])
print("  generic class:", format_bundle(splitting_type(build_extension(ext))))
