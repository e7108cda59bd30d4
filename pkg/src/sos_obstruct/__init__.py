"""Exact obstruction checks for sums-of-squares formulas of type [r, s, n]."""

__version__ = "0.1.0"

from .classical import (
    TruncatedPoly,
    hopf_stiefel_excluded,
    hopf_stiefel_via_ring,
    hurwitz_radon_rho,
)
from .engine import Caps, Report, ScanRow, ScanTable, check, implication_cone, scan
from .linalg import (
    HermiteForm,
    IntegerMatrix,
    MembershipCertificate,
    binomial,
    hnf,
    lattice_contains,
)
from .relations import (
    Inapplicable,
    Profile,
    RelationMatrix,
    TargetVector,
    bp2_test,
    make_profile,
    relation_matrix,
    target_vector,
)
from .verdict import ParityWitness, Triple, Verdict

__all__ = [
    "Caps",
    "HermiteForm",
    "Inapplicable",
    "IntegerMatrix",
    "MembershipCertificate",
    "ParityWitness",
    "Profile",
    "RelationMatrix",
    "Report",
    "ScanRow",
    "ScanTable",
    "TargetVector",
    "Triple",
    "TruncatedPoly",
    "Verdict",
    "binomial",
    "bp2_test",
    "check",
    "hnf",
    "hopf_stiefel_excluded",
    "hopf_stiefel_via_ring",
    "hurwitz_radon_rho",
    "implication_cone",
    "lattice_contains",
    "make_profile",
    "relation_matrix",
    "scan",
    "target_vector",
]
