"""Triples, verdicts and the certificates they carry."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .linalg import MembershipCertificate, binomial

BP2 = "bp2"
HOPF_STIEFEL = "hopf_stiefel"
CONDITIONS = (BP2, HOPF_STIEFEL)

EXCLUDED = "excluded"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True, order=True)
class Triple:
    r: int
    s: int
    n: int

    def __post_init__(self) -> None:
        if min(self.r, self.s, self.n) < 1:
            raise ValueError(f"triple entries must be positive, got [{self.r},{self.s},{self.n}]")

    def swapped(self) -> "Triple":
        return Triple(self.s, self.r, self.n)

    def __str__(self) -> str:
        return f"[{self.r},{self.s},{self.n}]"


@dataclass(frozen=True)
class ParityWitness:
    """C(n, k) is odd for some n - s < k < r."""

    n: int
    k: int

    def verify(self, t: Triple) -> bool:
        return t.n == self.n and t.n - t.s < self.k < t.r and binomial(self.n, self.k) % 2 == 1


@dataclass(frozen=True)
class Bp2Certificate:
    """Non-membership (or membership) of the target in the relation lattice."""

    a: int
    b: int
    m: int
    matrix: tuple[tuple[int, ...], ...]
    target: tuple[int, ...]
    membership: MembershipCertificate


Certificate = Union[Bp2Certificate, ParityWitness]


@dataclass(frozen=True)
class Verdict:
    status: str
    condition: str | None = None
    witness_triple: Triple | None = None
    certificate: Certificate | None = None

    def __post_init__(self) -> None:
        if self.status not in (EXCLUDED, INCONCLUSIVE):
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == EXCLUDED and None in (self.condition, self.witness_triple, self.certificate):
            raise ValueError("an excluded verdict needs a condition, a witness triple and a certificate")

    @property
    def excluded(self) -> bool:
        return self.status == EXCLUDED


INCONCLUSIVE_VERDICT = Verdict(INCONCLUSIVE)
