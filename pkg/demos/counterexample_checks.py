"""The algebraic checks behind the P^1-bundle example over P^2.

P(O + O(-1) + O(1)) and P(O^3) are concordant as bundles but not isomorphic
as projective bundles.  Three finite checks carry the argument.
"""

import json

from a1bundles.chow import ProjBundleRing, enumerate_graded_isos, verify_theorem_count

for report in verify_theorem_count():
    print(f"{report['check']}: {'pass' if report['pass'] else 'FAIL'}")
    print("   ", json.dumps(report["witnesses"])[:160])

print("\nautomorphisms of Z[x,y]/(x^2, y^3) with entries in [-3, 3]:")
for w in enumerate_graded_isos(ProjBundleRing(2, 0), ProjBundleRing(2, 0), 3):
    print("   ", w)

# for n = 1 the square-zero relation no longer pins x down
print("\nsame count for n = 1:", len(enumerate_graded_isos(ProjBundleRing(1, 0), ProjBundleRing(1, 0), 3)))
