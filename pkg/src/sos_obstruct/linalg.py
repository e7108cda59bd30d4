"""Exact integer linear algebra: Hermite normal form and lattice membership.

Everything here runs on Python ints, so there is no overflow and no rounding.
Lattices are row spans.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 for k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    acc = 1
    for i in range(1, k + 1):
        acc = acc * (n - k + i) // i
    return acc


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, rem = divmod(a, b)
        a, b = b, rem
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


@dataclass(frozen=True)
class IntegerMatrix:
    """Dense row-major matrix of arbitrary-precision integers."""

    entries: tuple[tuple[int, ...], ...]
    cols: int = field(default=-1)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        width = len(rows[0]) if rows else max(self.cols, 0)
        if self.cols >= 0 and rows and self.cols != width:
            raise ValueError("declared column count does not match the rows")
        if any(len(row) != width for row in rows):
            raise ValueError("ragged rows")
        object.__setattr__(self, "cols", width)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntegerMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, size: int) -> "IntegerMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(tuple((0,) * cols for _ in range(rows)), cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(tuple(zip(*self.entries)), self.rows)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return IntegerMatrix(
            tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.entries),
            other.cols,
        )

    def left_apply(self, x: Sequence[int]) -> tuple[int, ...]:
        """The row vector x·M."""
        if len(x) != self.rows:
            raise ValueError(f"vector of length {len(x)} cannot multiply {self.shape}")
        out = [0] * self.cols
        for coeff, row in zip(x, self.entries):
            if coeff:
                for j, entry in enumerate(row):
                    out[j] += coeff * entry
        return tuple(out)

    def det(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        n = self.rows
        if n != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if n == 0:
            return 1
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]], cols: int = -1) -> "IntegerMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in data), cols)


@dataclass(frozen=True)
class HermiteForm:
    """Row Hermite normal form h of a matrix M together with u·M = h."""

    h: IntegerMatrix
    u: IntegerMatrix
    pivots: tuple[tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def hnf(m: IntegerMatrix) -> HermiteForm:
    """Row-style Hermite normal form with the unimodular transform.

    Pivots are positive, entries above a pivot lie in [0, pivot), zero rows
    sink to the bottom. Row operations are mirrored on an identity block so
    that ``u @ m == h`` holds exactly.
    """
    if m.rows == 0:
        raise ValueError("hnf of an empty matrix")
    nrows, ncols = m.shape
    a = m.tolist()
    u = IntegerMatrix.identity(nrows).tolist()
    pivots: list[tuple[int, int]] = []
    top = 0

    for col in range(ncols):
        if top == nrows:
            break
        for i in range(top + 1, nrows):
            below = a[i][col]
            if below == 0:
                continue
            pivot = a[top][col]
            if pivot == 0:
                a[top], a[i] = a[i], a[top]
                u[top], u[i] = u[i], u[top]
                continue
            g, x, y = xgcd(pivot, below)
            p, q = pivot // g, below // g
            # [[x, y], [-q, p]] has determinant 1
            a[top], a[i] = _combine(a[top], a[i], x, y, -q, p)
            u[top], u[i] = _combine(u[top], u[i], x, y, -q, p)
        pivot = a[top][col]
        if pivot == 0:
            continue
        if pivot < 0:
            a[top] = [-v for v in a[top]]
            u[top] = [-v for v in u[top]]
            pivot = -pivot
        for i in range(top):
            f = a[i][col] // pivot
            if f:
                a[i] = [v - f * w for v, w in zip(a[i], a[top])]
                u[i] = [v - f * w for v, w in zip(u[i], u[top])]
        pivots.append((top, col))
        top += 1

    return HermiteForm(IntegerMatrix.from_rows(a), IntegerMatrix.from_rows(u), tuple(pivots))


def _combine(r1, r2, x, y, z, w):
    return (
        [x * s + y * t for s, t in zip(r1, r2)],
        [z * s + w * t for s, t in zip(r1, r2)],
    )


def is_hnf(h: IntegerMatrix) -> bool:
    """Shape check for row Hermite normal form."""
    last = -1
    zero_seen = False
    for i, row in enumerate(h.entries):
        lead = next((j for j, v in enumerate(row) if v), None)
        if lead is None:
            zero_seen = True
            continue
        if zero_seen or lead <= last or row[lead] <= 0:
            return False
        if any(not 0 <= h[k, lead] < row[lead] for k in range(i)):
            return False
        last = lead
    return True


@dataclass(frozen=True)
class MembershipCertificate:
    """Witness for a lattice membership decision.

    ``member``: ``coefficients`` satisfy x·M = v.
    ``non_member``: ``residual`` is nonzero and reduced against the HNF rows,
    and ``coefficients`` satisfy x·M = v - residual.
    """

    kind: str
    coefficients: tuple[int, ...] | None = None
    residual: tuple[int, ...] | None = None

    @property
    def is_member(self) -> bool:
        return self.kind == "member"

    def verify(self, m: IntegerMatrix, v: Sequence[int]) -> bool:
        v = tuple(v)
        if self.kind == "member":
            return self.coefficients is not None and m.left_apply(self.coefficients) == v
        if self.kind != "non_member" or self.residual is None or not any(self.residual):
            return False
        if self.coefficients is not None:
            combo = m.left_apply(self.coefficients)
            if tuple(a - b for a, b in zip(v, combo)) != self.residual:
                return False
        form = hnf(m)
        return _reduce(form, self.residual)[1] == self.residual

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        out["coefficients"] = None if self.coefficients is None else [str(x) for x in self.coefficients]
        out["residual"] = None if self.residual is None else [str(x) for x in self.residual]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MembershipCertificate":
        def vec(key):
            raw = data.get(key)
            return None if raw is None else tuple(int(x) for x in raw)

        return cls(data["kind"], vec("coefficients"), vec("residual"))


def _reduce(form: HermiteForm, v: Sequence[int]) -> tuple[list[int], tuple[int, ...]]:
    """Floor-reduce v through the pivots; return (quotients, residual)."""
    res = list(v)
    h = form.h.entries
    quotients = []
    for i, col in form.pivots:
        q = res[col] // h[i][col]
        quotients.append(q)
        if q:
            res = [a - q * b for a, b in zip(res, h[i])]
    return quotients, tuple(res)


def in_span(form: HermiteForm, v: Sequence[int]) -> bool:
    """Bare membership test against a precomputed HNF."""
    return not any(_reduce(form, v)[1])


def lattice_contains(
    m: IntegerMatrix, v: Sequence[int], form: HermiteForm | None = None
) -> MembershipCertificate:
    """Decide whether v lies in the integer row span of m.

    ``form`` may carry a precomputed ``hnf(m)``.
    """
    v = tuple(int(x) for x in v)
    if len(v) != m.cols:
        raise ValueError(f"vector has length {len(v)}, matrix has {m.cols} columns")
    if form is None:
        form = hnf(m)
    quotients, residual = _reduce(form, v)
    coeffs = [0] * m.rows
    for q, (i, _) in zip(quotients, form.pivots):
        if q:
            for j, t in enumerate(form.u.row(i)):
                coeffs[j] += q * t
    if any(residual):
        return MembershipCertificate("non_member", tuple(coeffs), residual)
    return MembershipCertificate("member", tuple(coeffs), None)


def separating_functional(m: IntegerMatrix, v: Sequence[int]) -> tuple[Fraction, ...]:
    """Rational y with M·y integral and v·y not an integer.

    Such a y exists exactly when v is outside the row lattice, and checking
    it needs nothing beyond rational dot products. Raises ValueError when v
    is a member.
    """
    v = tuple(int(x) for x in v)
    form = hnf(m)
    if in_span(form, v):
        raise ValueError("vector lies in the lattice; no separating functional exists")
    h = form.h.entries
    pivots = form.pivots
    ncols = m.cols

    # rational coordinates of v along the HNF rows, read off the pivot columns
    lam: list[Fraction] = []
    rest = [Fraction(x) for x in v]
    for i, col in pivots:
        c = rest[col] / h[i][col]
        lam.append(c)
        if c:
            rest = [a - c * b for a, b in zip(rest, h[i])]

    if any(rest):
        # v leaves the rational span: project the leftover off the row space
        basis = [[Fraction(x) for x in h[i]] for i, _ in pivots]
        ortho: list[list[Fraction]] = []
        for b in basis:
            w = list(b)
            for o in ortho:
                coef = _dot(w, o) / _dot(o, o)
                w = [a - coef * c for a, c in zip(w, o)]
            ortho.append(w)
        y = list(rest)
        for o in ortho:
            coef = _dot(y, o) / _dot(o, o)
            y = [a - coef * c for a, c in zip(y, o)]
        scale = 2 * _dot(y, v)
        return tuple(a / scale for a in y)

    target = next(k for k, c in enumerate(lam) if c.denominator != 1)
    # solve h_k · y = [k == target] on the pivot columns by back substitution
    y = [Fraction(0)] * ncols
    for k in range(len(pivots) - 1, -1, -1):
        i, col = pivots[k]
        rhs = Fraction(int(k == target)) - sum(
            (h[i][c] * y[c] for _, c in pivots[k + 1 :]), Fraction(0)
        )
        y[col] = rhs / h[i][col]
    return tuple(y)


def verify_separating_functional(
    m: IntegerMatrix, v: Sequence[int], y: Sequence[Fraction]
) -> bool:
    if len(y) != m.cols:
        return False
    if any(_dot(row, y).denominator != 1 for row in m.entries):
        return False
    return _dot(v, y).denominator != 1


def _dot(a, b) -> Fraction:
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))
