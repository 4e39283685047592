#!/usr/bin/env python3
"""Finite fields living inside cyclotomic rings.

GF(4) is isomorphic to a 4-element subring of GF(2)[x]/(x^3 - 1): the idea
behind the whole redundant-representation approach.  This script finds that
subring by closure, locates its multiplicative identity, and multiplies
GF(4) elements through the ring.
"""

from cyclomul import CycloElement, GroundField, OpCount, mul_direct
from cyclomul.oracle import subring_closure, subring_identity

gf = GroundField(2)

closure = subring_closure([CycloElement(gf, (1, 1, 0))])
print("closure of {(1,1,0)} under + and *:")
for e in sorted(closure, key=lambda e: e.coords):
    print(f"  {e.coords}")
identity = subring_identity(closure)
print(f"multiplicative identity: {identity.coords}")
print()

# A concrete isomorphism with GF(4) = {0, 1, g, g+1}, g^2 = g + 1:
#   0 -> (0,0,0)   1 -> (0,1,1)   g -> (1,1,0)   g+1 -> (1,0,1)
names = {
    (0, 0, 0): "0",
    (0, 1, 1): "1",
    (1, 1, 0): "g",
    (1, 0, 1): "g+1",
}
ctx = OpCount()
print("multiplication table of the subring (as GF(4) elements):")
elems = sorted(closure, key=lambda e: e.coords)
header = "        " + "  ".join(f"{names[e.coords]:>4}" for e in elems)
print(header)
for x in elems:
    row = [f"{names[mul_direct(x, y, ctx).coords]:>4}" for y in elems]
    print(f"  {names[x.coords]:>4}  " + "  ".join(row))

# g * (g+1) = g^2 + g = 1 in GF(4); check it through the ring.
g = CycloElement(gf, (1, 1, 0))
g1 = CycloElement(gf, (1, 0, 1))
assert mul_direct(g, g1, ctx) == identity
print()
print("g * (g+1) lands on the subring identity, as it must in GF(4).")
