"""
Ruling out a formula of type [11, 15, 17]
==========================================

Walks through the BP<2> test for one triple by hand, then lets ``check``
do the same thing through the implication cone.
"""

from sos_obstruct import Triple, bp2_test, check, make_profile, relation_matrix, target_vector
from sos_obstruct.io import format_matrix, format_vector

# [11, 15, 17] = [2a+1, 2b+1, 2m-1] with a = 5, b = 7, m = 9
profile = make_profile(5, 7, 9)
print("profile:", profile, " d =", profile.d)

# Relations among the generators w_0..w_3, one row per relation
rel = relation_matrix(profile)
print(format_matrix(rel.matrix.entries))

# Coefficients of the expansion of (X1 - X2)^9 on the surviving monomials
target = target_vector(profile)
print("target:", format_vector(target.entries))

# If a formula existed, the target would be an integer combination of the rows
verdict = bp2_test(profile)
print("verdict:", verdict.status)
membership = verdict.certificate.membership
print("residual after reducing against the Hermite form:", format_vector(membership.residual))

# A formula of type [11, 15, k] with k <= 17 would give one of type [11, 15, 17]
for k in (13, 15, 16, 17):
    report = check(Triple(11, 15, k))
    print(f"[11,15,{k}]:", report.overall.status, "via", report.overall.condition, "at", report.overall.witness_triple)
