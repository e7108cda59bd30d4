"""Implication cone search, per-condition reports and frontier scans.

A formula of type [r, s, n] yields formulas of every type [r', s', n'] with
r' <= r, s' <= s and n' >= n (set variables to zero, append zero terms), so
excluding any such consequence excludes the query.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator

from . import __version__
from .classical import hopf_stiefel_excluded, hopf_stiefel_witness
from .relations import Inapplicable, bp2_excludes, bp2_test, make_profile
from .verdict import (
    BP2,
    CONDITIONS,
    EXCLUDED,
    HOPF_STIEFEL,
    INCONCLUSIVE_VERDICT,
    ParityWitness,
    Triple,
    Verdict,
)

SCHEMA_VERSION = "1"
VERSIONS = f"sos_obstruct/{__version__} report-schema/{SCHEMA_VERSION}"


@dataclass(frozen=True)
class Caps:
    """Search bounds for the implication cone.

    With ``n_max`` unset each candidate (r', s', n') is limited to
    n' <= r' + s'; both conditions are silent beyond that.
    """

    n_max: int | None = None

    def limit(self, r: int, s: int) -> int:
        return r + s if self.n_max is None else self.n_max

    def to_json(self) -> dict:
        return {"n_max": None if self.n_max is None else str(self.n_max)}

    @property
    def label(self) -> str:
        return "r+s" if self.n_max is None else str(self.n_max)


DEFAULT_CAPS = Caps()


def implication_cone(t: Triple, caps: Caps = DEFAULT_CAPS) -> Iterator[Triple]:
    """Triples whose exclusion would exclude ``t``, strongest first.

    Ordered by n' descending, then r' + s' descending, then r' descending.
    The query itself is always included.
    """
    if caps.n_max is None:
        if t.n > t.r + t.s:
            yield t
        for n in range(t.r + t.s, t.n - 1, -1):
            yield from _layer(t, n, floor=n)
        return
    if t.n > caps.n_max:
        yield t
    for n in range(caps.n_max, t.n - 1, -1):
        yield from _layer(t, n, floor=2)


def _layer(t: Triple, n: int, floor: int) -> Iterator[Triple]:
    for total in range(t.r + t.s, max(floor, 2) - 1, -1):
        for r in range(min(t.r, total - 1), max(1, total - t.s) - 1, -1):
            yield Triple(r, total - r, n)


def _odd_in_window(c: Triple) -> bool:
    return c.r % 2 == 1 and c.s % 2 == 1 and c.n % 2 == 1


def _bp2_at(c: Triple) -> Verdict | None:
    if not _odd_in_window(c):
        return None
    a, b, m = (c.r - 1) // 2, (c.s - 1) // 2, (c.n + 1) // 2
    if not bp2_excludes(a, b, m):
        return None
    p = make_profile(a, b, m)
    return bp2_test(p)


def _hopf_stiefel_at(c: Triple) -> Verdict | None:
    k = hopf_stiefel_witness(c.r, c.s, c.n)
    if k is None:
        return None
    return Verdict(EXCLUDED, HOPF_STIEFEL, c, ParityWitness(c.n, k))


_TESTS: dict[str, Callable[[Triple], Verdict | None]] = {
    BP2: _bp2_at,
    HOPF_STIEFEL: _hopf_stiefel_at,
}


@dataclass(frozen=True)
class Report:
    query: Triple
    per_condition: dict[str, Verdict]
    overall: Verdict
    caps: Caps = DEFAULT_CAPS
    versions: str = field(default=VERSIONS)

    @property
    def excluded(self) -> bool:
        return self.overall.excluded


def check(t: Triple, caps: Caps = DEFAULT_CAPS) -> Report:
    """Walk the cone and record the first exclusion found by each condition.

    The overall verdict is the first excluding condition in the order
    bp2, hopf_stiefel.
    """
    found: dict[str, Verdict] = {}
    for c in implication_cone(t, caps):
        for name in CONDITIONS:
            if name not in found:
                verdict = _TESTS[name](c)
                if verdict is not None:
                    found[name] = verdict
        if len(found) == len(CONDITIONS):
            break
    per_condition = {name: found.get(name, INCONCLUSIVE_VERDICT) for name in CONDITIONS}
    overall = next((found[name] for name in CONDITIONS if name in found), INCONCLUSIVE_VERDICT)
    return Report(t, per_condition, overall, caps)


def verify_verdict(v: Verdict) -> bool:
    """Re-check a verdict's certificate with arithmetic independent of the search."""
    from .linalg import IntegerMatrix
    from .relations import relation_matrix, target_vector

    if not v.excluded:
        return True
    if isinstance(v.certificate, ParityWitness):
        return v.condition == HOPF_STIEFEL and v.certificate.verify(v.witness_triple)
    cert = v.certificate
    p = make_profile(cert.a, cert.b, cert.m)
    if isinstance(p, Inapplicable) or Triple(*p.triple) != v.witness_triple:
        return False
    matrix = IntegerMatrix(cert.matrix)
    if matrix != relation_matrix(p).matrix or cert.target != target_vector(p).entries:
        return False
    return cert.membership.kind == "non_member" and cert.membership.verify(matrix, cert.target)


# ---------------------------------------------------------------------------
# scans


@dataclass(frozen=True)
class ScanRow:
    r: int
    s: int
    hopf_stiefel: int | None
    bp2: int | None

    @property
    def strongest(self) -> str | None:
        """Condition with the larger frontier; ties go to hopf_stiefel."""
        hs, bp = self.hopf_stiefel or 0, self.bp2 or 0
        if hs == 0 and bp == 0:
            return None
        return BP2 if bp > hs else HOPF_STIEFEL

    def frontier(self, condition: str) -> int | None:
        return self.bp2 if condition == BP2 else self.hopf_stiefel


@dataclass(frozen=True)
class ScanTable:
    r_max: int
    s_max: int
    caps: Caps
    rows: tuple[ScanRow, ...]


@lru_cache(maxsize=None)
def _bp2_direct_max(a: int, b: int, n_cap: int | None) -> int:
    """Largest 2m-1 excluded by bp2 at exactly (2a+1, 2b+1), or 0."""
    for m in range(a + b, max(a, b), -1):
        n = 2 * m - 1
        if n_cap is not None and n > n_cap:
            continue
        if bp2_excludes(a, b, m):
            return n
    return 0


def raw_frontiers(r: int, s: int, caps: Caps = DEFAULT_CAPS) -> dict[str, int]:
    """Largest n (0 if none) that check excludes at (r, s), per condition.

    This counts trivial exclusions with n < max(r, s) as well.
    """
    # Hopf-Stiefel is already monotone: shrinking r, s or n only loses exclusions
    hs = next((n for n in range(caps.limit(r, s), 0, -1) if hopf_stiefel_excluded(r, s, n)), 0)
    bp = 0
    for a in range((r - 1) // 2 + 1):
        for b in range((s - 1) // 2 + 1):
            bp = max(bp, _bp2_direct_max(a, b, caps.n_max))
    return {HOPF_STIEFEL: hs, BP2: bp}


def scan_cell(r: int, s: int, caps: Caps = DEFAULT_CAPS) -> ScanRow:
    """Frontiers for one (r, s): the largest n >= max(r, s) that check excludes.

    No formula has n < max(r, s), so frontiers below that are reported as None.
    """
    raw = raw_frontiers(r, s, caps)
    floor = max(r, s)
    hs, bp = raw[HOPF_STIEFEL], raw[BP2]
    return ScanRow(r, s, hs if hs >= floor else None, bp if bp >= floor else None)


def scan_cells(r_max: int, s_max: int) -> list[tuple[int, int]]:
    if r_max < 1 or s_max < 1:
        raise ValueError("scan bounds must be positive")
    return [(r, s) for r in range(1, r_max + 1) for s in range(r, s_max + 1)]


def _scan_row_block(args: tuple[int, tuple[int, ...], Caps]) -> list[ScanRow]:
    r, ss, caps = args
    return [scan_cell(r, s, caps) for s in ss]


def scan(
    r_max: int,
    s_max: int,
    caps: Caps = DEFAULT_CAPS,
    jobs: int = 1,
    known: dict[tuple[int, int], ScanRow] | None = None,
    on_row: Callable[[ScanRow], None] | None = None,
) -> ScanTable:
    """Frontier table over r <= r_max, s <= s_max with r <= s.

    ``known`` supplies rows computed earlier (a cache); ``on_row`` sees every
    freshly computed row in the calling process. Output order is fixed, so
    parallel and sequential runs agree.
    """
    known = dict(known or {})
    todo: dict[int, list[int]] = {}
    for r, s in scan_cells(r_max, s_max):
        if (r, s) not in known:
            todo.setdefault(r, []).append(s)
    blocks = [(r, tuple(ss), caps) for r, ss in sorted(todo.items())]

    if jobs > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            # largest rows are slowest; schedule them first
            order = sorted(range(len(blocks)), key=lambda i: -blocks[i][0])
            results = pool.map(_scan_row_block, [blocks[i] for i in order])
            for rows in results:
                _collect(rows, known, on_row)
    else:
        for block in blocks:
            _collect(_scan_row_block(block), known, on_row)

    rows = tuple(known[cell] for cell in scan_cells(r_max, s_max))
    return ScanTable(r_max, s_max, caps, rows)


def _collect(rows, known, on_row) -> None:
    for row in rows:
        known[(row.r, row.s)] = row
        if on_row is not None:
            on_row(row)
