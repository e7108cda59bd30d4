"""
The Hopf-Stiefel condition, computed twice
==========================================

Binomial parity (Lucas' theorem) against the truncated polynomial ring
Z/2[x1, x2]/(x1^r, x2^s).
"""

from sos_obstruct import TruncatedPoly, hopf_stiefel_excluded, hopf_stiefel_via_ring
from sos_obstruct.classical import hopf_stiefel_witness

r, s = 11, 15
for n in range(14, 19):
    k = hopf_stiefel_witness(r, s, n)
    print(f"[{r},{s},{n}]  parity: {hopf_stiefel_excluded(r, s, n)!s:5}  ring: {hopf_stiefel_via_ring(r, s, n)!s:5}  odd C(n,k) at k={k}")

# the surviving monomials of (x1 + x2)^15 in the truncated ring
power = TruncatedPoly.x1_plus_x2(r, s) ** 15
print("(x1+x2)^15 =", " + ".join(f"x1^{i} x2^{j}" for i, j in power.terms()))

# powers of two are invisible to this condition: (x1 + x2)^16 = x1^16 + x2^16
print("(x1+x2)^16 in the (16,16) ring is zero:", not TruncatedPoly.x1_plus_x2(16, 16) ** 16)
