"""
Hermite forms and membership certificates
=========================================

The linear algebra underneath the BP<2> test, on a small example.
"""

from sos_obstruct import IntegerMatrix, hnf, lattice_contains
from sos_obstruct.linalg import separating_functional, verify_separating_functional

m = IntegerMatrix.from_rows([[4, 6, 2], [2, 5, 7], [6, 1, 3]])
form = hnf(m)
print("h =", form.h.tolist())
print("u =", form.u.tolist(), " det(u) =", form.u.det())
assert form.u @ m == form.h

# a member: the certificate holds coefficients reproducing the vector
v = m.left_apply([3, -1, 2])
cert = lattice_contains(m, v)
print(v, cert.kind, cert.coefficients, m.left_apply(cert.coefficients))

# a non-member: a residual, plus a rational functional that is integral on the
# lattice but not on the vector
w = (1, 0, 0)
cert = lattice_contains(m, w)
y = separating_functional(m, w)
print(w, cert.kind, "residual", cert.residual, "functional", [str(c) for c in y])
print("functional verifies:", verify_separating_functional(m, w, y))
