"""The BP<2> relation matrix and the alternating binomial target vector.

For a triple [2a+1, 2b+1, 2m-1] with max(a, b) < m <= a+b, the degree-2m
group of RP^{2a} x RP^{2b} is generated by w_0, ..., w_d (d = a+b-m) where
w_j = X1^(a-j) X2^(m-a+j). Column j of every matrix and vector here is the
coefficient of w_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .linalg import HermiteForm, IntegerMatrix, binomial, hnf, in_span, lattice_contains
from .verdict import BP2, EXCLUDED, INCONCLUSIVE, Bp2Certificate, Triple, Verdict


@dataclass(frozen=True)
class Profile:
    a: int
    b: int
    m: int

    @property
    def d(self) -> int:
        return self.a + self.b - self.m

    @property
    def e(self) -> int:
        # smallest e with 2e >= n for n = 2m - 1
        n = 2 * self.m - 1
        return (n + 1) // 2

    @property
    def triple(self) -> tuple[int, int, int]:
        return 2 * self.a + 1, 2 * self.b + 1, 2 * self.m - 1


@dataclass(frozen=True)
class Inapplicable:
    reason: str  # "m_too_small" or "m_too_large"
    a: int
    b: int
    m: int

    @property
    def message(self) -> str:
        if self.reason == "m_too_small":
            return f"max{{a,b}} < m violated (max{{{self.a},{self.b}}} = {max(self.a, self.b)}, m = {self.m})"
        return f"m ≤ a+b violated (m = {self.m}, a+b = {self.a + self.b})"


def make_profile(a: int, b: int, m: int) -> Profile | Inapplicable:
    if a < 0 or b < 0 or m < 1:
        raise ValueError(f"need a, b >= 0 and m >= 1, got ({a}, {b}, {m})")
    if m <= max(a, b):
        return Inapplicable("m_too_small", a, b, m)
    if m > a + b:
        return Inapplicable("m_too_large", a, b, m)
    return Profile(a, b, m)


@dataclass(frozen=True)
class RelationMatrix:
    profile: Profile
    matrix: IntegerMatrix

    def generator(self, j: int) -> tuple[int, int]:
        """Exponents (of X1, X2) of the generator carried by column j."""
        p = self.profile
        return p.a - j, p.m - p.a + j


@dataclass(frozen=True)
class TargetVector:
    profile: Profile
    entries: tuple[int, ...]


def first_diagonal_row(d: int) -> int:
    """Index of the first relation of type 2^(d+1-i) w_i = 0."""
    return d + 1 - (d + 1) // 3


@lru_cache(maxsize=None)
def _relation_rows(d: int) -> IntegerMatrix:
    size = d + 1
    rows = [[0] * size for _ in range(size)]
    rows[0][0] = 2
    split = first_diagonal_row(d)
    for i in range(1, split):
        c = (i - 1) // 2
        power = 2 ** ((i + 2) // 2)
        for t in range(d - i + 1):
            rows[i][i + t] = power * binomial(c + t, c)
    for i in range(max(split, 1), size):
        rows[i][i] = 2 ** (d + 1 - i)
    return IntegerMatrix.from_rows(rows)


@lru_cache(maxsize=None)
def relation_form(d: int) -> HermiteForm:
    """HNF of the relation matrix; it depends on d alone."""
    return hnf(_relation_rows(d))


def relation_matrix(p: Profile) -> RelationMatrix:
    return RelationMatrix(p, _relation_rows(p.d))


def target_vector(p: Profile) -> TargetVector:
    """Coefficients of (X1 - X2)^m on w_0..w_d."""
    entries = tuple((-1) ** (p.a - j) * binomial(p.m, p.a - j) for j in range(p.d + 1))
    return TargetVector(p, entries)


def bp2_test(p: Profile, target: Sequence[int] | None = None) -> Verdict:
    """Excluded when the target vector is outside the relation lattice.

    The verdict carries the membership certificate either way. ``target``
    overrides the computed vector; used to probe the test itself.
    """
    v = tuple(target) if target is not None else target_vector(p).entries
    matrix = _relation_rows(p.d)
    membership = lattice_contains(matrix, v, form=relation_form(p.d))
    cert = Bp2Certificate(p.a, p.b, p.m, matrix.entries, v, membership)
    status = INCONCLUSIVE if membership.is_member else EXCLUDED
    return Verdict(status, BP2, Triple(*p.triple), cert)


@lru_cache(maxsize=None)
def bp2_excludes(a: int, b: int, m: int) -> bool:
    """Fast boolean form of bp2_test for sweeps; False outside the window."""
    p = make_profile(a, b, m)
    if isinstance(p, Inapplicable):
        return False
    return not in_span(relation_form(p.d), target_vector(p).entries)
