"""Walk through a concordance certificate for O(-1) + O + O(1).

Every split bundle on P^1 is concordant to O^(n-1) + det.  The certificate
below spells out why for one bundle, move by move, and then replays it.
"""

from a1bundles import SplitBundle, format_bundle
from a1bundles.concordance import (
    CongruenceMove,
    ConcordanceCertificate,
    canonical_form,
    concordant,
    generate_certificate,
    verify_certificate,
)


def describe(mv, indent="  "):
    head = f"{indent}{mv.kind}: {format_bundle(mv.source)} -> {format_bundle(mv.target)}"
    if isinstance(mv, CongruenceMove):
        print(f"{head}  (carrying {format_bundle(mv.common)})")
        describe(mv.inner, indent + "    ")
    elif mv.kind == "extension":
        print(f"{head}  sub {format_bundle(mv.sub)}, quotient {format_bundle(mv.quotient)}, m={mv.m}")
    else:
        print(f"{head}  m={mv.m}, L=O({mv.line})")


E = SplitBundle([-1, 0, 1])
print(f"E = {format_bundle(E)}, canonical form {format_bundle(canonical_form(E))}")
cert = generate_certificate(E)
for mv in cert.moves:
    describe(mv)
print("replay:", verify_certificate(cert))

# the certificate survives a trip through JSON
again = ConcordanceCertificate.from_json(cert.to_json(indent=1))
print("JSON round trip equal:", again == cert)

# tamper with the chain: drop the last move
broken = ConcordanceCertificate(cert.endpoints, cert.moves[:-1])
print("truncated chain:", verify_certificate(broken))

# the decision itself needs only rank and determinant
for f in ([0, 0, 0], [-2, 1, 1], [0, 0, 1], [0, 0]):
    F = SplitBundle(f)
    print(f"  {format_bundle(E)} ~ {format_bundle(F)}? {concordant(E, F)}")
