"""Hopf-Stiefel parity condition and the Hurwitz-Radon function.

The parity condition is implemented twice on purpose: once with Lucas'
theorem on binomial coefficients, once by multiplying out (x1 + x2)^n in
Z/2[x1, x2]/(x1^r, x2^s). The two share no code.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def hopf_stiefel_witness(r: int, s: int, n: int) -> int | None:
    """Smallest k with n - s < k < r and C(n, k) odd, or None."""
    if min(r, s, n) < 1:
        raise ValueError(f"need positive r, s, n, got ({r}, {s}, {n})")
    for k in range(max(0, n - s + 1), min(r, n + 1)):
        # Lucas: C(n, k) is odd iff the bits of k are a subset of those of n
        if k & n == k:
            return k
    return None


def hopf_stiefel_excluded(r: int, s: int, n: int) -> bool:
    """True when some C(n, k) with n - s < k < r is odd."""
    return hopf_stiefel_witness(r, s, n) is not None


@dataclass(frozen=True)
class TruncatedPoly:
    """Element of Z/2[x1, x2]/(x1^r_bound, x2^s_bound).

    ``coeffs`` is a bit grid packed into one int: monomial x1^i x2^j sits at
    bit i * stride + j with stride = 2 * s_bound, so that the x2-degrees of a
    product never spill into the next row before truncation.
    """

    r_bound: int
    s_bound: int
    coeffs: int = 0

    def __post_init__(self) -> None:
        if self.r_bound < 1 or self.s_bound < 1:
            raise ValueError("bounds must be positive")
        object.__setattr__(self, "coeffs", self.coeffs & _grid_mask(self.r_bound, self.s_bound))

    @property
    def stride(self) -> int:
        return 2 * self.s_bound

    @classmethod
    def zero(cls, r_bound: int, s_bound: int) -> "TruncatedPoly":
        return cls(r_bound, s_bound, 0)

    @classmethod
    def monomial(cls, r_bound: int, s_bound: int, i: int, j: int) -> "TruncatedPoly":
        if i >= r_bound or j >= s_bound:
            return cls.zero(r_bound, s_bound)
        return cls(r_bound, s_bound, 1 << (i * 2 * s_bound + j))

    @classmethod
    def one(cls, r_bound: int, s_bound: int) -> "TruncatedPoly":
        return cls.monomial(r_bound, s_bound, 0, 0)

    @classmethod
    def x1_plus_x2(cls, r_bound: int, s_bound: int) -> "TruncatedPoly":
        return cls.monomial(r_bound, s_bound, 1, 0) + cls.monomial(r_bound, s_bound, 0, 1)

    def _check(self, other: "TruncatedPoly") -> None:
        if (self.r_bound, self.s_bound) != (other.r_bound, other.s_bound):
            raise ValueError("elements of different truncated rings")

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check(other)
        return TruncatedPoly(self.r_bound, self.s_bound, self.coeffs ^ other.coeffs)

    def __mul__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if bin(a).count("1") < bin(b).count("1"):
            a, b = b, a
        out = 0
        while b:
            low = b & -b
            out ^= a << (low.bit_length() - 1)
            b ^= low
        # the constructor masks away x1^i with i >= r_bound and x2^j with j >= s_bound
        return TruncatedPoly(self.r_bound, self.s_bound, out)

    def __pow__(self, n: int) -> "TruncatedPoly":
        acc = TruncatedPoly.one(self.r_bound, self.s_bound)
        for _ in range(n):
            acc = acc * self
        return acc

    def __bool__(self) -> bool:
        return self.coeffs != 0

    def coefficient(self, i: int, j: int) -> int:
        if i >= self.r_bound or j >= self.s_bound:
            return 0
        return (self.coeffs >> (i * self.stride + j)) & 1

    def terms(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.r_bound) for j in range(self.s_bound) if self.coefficient(i, j)]


@lru_cache(maxsize=None)
def _grid_mask(r_bound: int, s_bound: int) -> int:
    row = (1 << s_bound) - 1
    stride = 2 * s_bound
    mask = 0
    for i in range(r_bound):
        mask |= row << (i * stride)
    return mask


def hopf_stiefel_via_ring(r: int, s: int, n: int) -> bool:
    """True when (x1 + x2)^n is nonzero in Z/2[x1, x2]/(x1^r, x2^s)."""
    if min(r, s, n) < 1:
        raise ValueError(f"need positive r, s, n, got ({r}, {s}, {n})")
    linear = TruncatedPoly.x1_plus_x2(r, s)
    power = TruncatedPoly.one(r, s)
    for _ in range(n):
        power = power * linear
        if not power:
            return False
    return True


def ring_exclusions(r: int, s: int, n_max: int) -> list[bool]:
    """Entry n says whether (x1 + x2)^n is nonzero in the (r, s) ring, n = 0..n_max."""
    linear = TruncatedPoly.x1_plus_x2(r, s)
    power = TruncatedPoly.one(r, s)
    out = [True]
    for _ in range(n_max):
        power = power * linear
        out.append(bool(power))
    return out


def hurwitz_radon_rho(n: int) -> int:
    """rho(2^(4a+b) * odd) = 8a + 2^b, for 0 <= b <= 3.

    Standard Hurwitz-Radon number: the largest r admitting a formula of
    type [r, n, n].
    """
    if n < 1:
        raise ValueError(f"rho needs n >= 1, got {n}")
    twos = (n & -n).bit_length() - 1
    a, b = divmod(twos, 4)
    return 8 * a + 2**b
