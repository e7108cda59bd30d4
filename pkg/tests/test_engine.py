import pytest

from sos_obstruct.classical import hopf_stiefel_excluded, hurwitz_radon_rho
from sos_obstruct.engine import Caps, check, implication_cone, raw_frontiers, scan, scan_cell, verify_verdict
from sos_obstruct.linalg import IntegerMatrix
from sos_obstruct.relations import bp2_excludes
from sos_obstruct.verdict import ParityWitness, Triple, Verdict


def T(r, s, n):
    return Triple(r, s, n)


# cone


def test_cone_reaches_larger_n():
    assert T(11, 15, 17) in set(implication_cone(T(11, 15, 16)))


def test_cone_is_reflexive():
    for t in [T(1, 1, 5), T(3, 4, 5), T(11, 15, 16), T(2, 2, 40)]:
        assert t in set(implication_cone(t))


def test_cone_tiny_triple_only_query():
    assert list(implication_cone(T(1, 1, 5))) == [T(1, 1, 5)]


@pytest.mark.parametrize("t", [T(5, 7, 6), T(6, 3, 2), T(4, 4, 9), T(1, 8, 3)])
def test_cone_brute_force(t):
    got = list(implication_cone(t))
    assert len(got) == len(set(got))
    expected = {
        T(r, s, n)
        for r in range(1, t.r + 1)
        for s in range(1, t.s + 1)
        for n in range(t.n, t.r + t.s + 1)
        if n <= r + s
    } | {t}
    assert set(got) == expected
    keys = [(-c.n, -(c.r + c.s), -c.r) for c in got]
    assert keys == sorted(keys)


def test_cone_with_explicit_cap():
    got = list(implication_cone(T(3, 3, 4), Caps(n_max=9)))
    assert max(c.n for c in got) == 9
    assert T(1, 1, 9) in got
    assert all(c.n >= 4 for c in got)


# check


def test_check_11_15_17():
    rep = check(T(11, 15, 17))
    assert rep.overall.status == "excluded"
    assert rep.overall.condition == "bp2"
    assert rep.overall.witness_triple == T(11, 15, 17)
    cert = rep.overall.certificate
    assert cert.target == (-126, 126, -84, 36)
    assert cert.membership.kind == "non_member"
    assert cert.membership.verify(IntegerMatrix(cert.matrix), cert.target)
    assert rep.per_condition["hopf_stiefel"].status == "inconclusive"


def test_check_11_15_15():
    rep = check(T(11, 15, 15))
    hs = rep.per_condition["hopf_stiefel"]
    assert hs.status == "excluded" and hs.witness_triple == T(11, 15, 15)
    bp = rep.per_condition["bp2"]
    assert bp.status == "excluded" and bp.witness_triple == T(11, 15, 17)
    assert rep.overall.status == "excluded"


def test_check_hurwitz_radon_control():
    assert hurwitz_radon_rho(16) == 9
    rep = check(T(9, 16, 16))
    assert rep.overall.status == "inconclusive"
    assert all(v.status == "inconclusive" for v in rep.per_condition.values())


def test_report_invariant():
    for t in [T(11, 15, 17), T(3, 3, 3), T(9, 16, 16), T(2, 7, 5)]:
        rep = check(t)
        assert rep.overall.excluded == any(v.excluded for v in rep.per_condition.values())
        for v in rep.per_condition.values():
            assert verify_verdict(v)


def test_check_is_deterministic():
    assert check(T(13, 17, 19)) == check(T(13, 17, 19))


def test_check_symmetric():
    for r in range(1, 14):
        for s in range(1, 14):
            for n in range(max(r, s), r + s):
                assert check(T(r, s, n)).overall.status == check(T(s, r, n)).overall.status


def test_verdict_requires_certificate():
    with pytest.raises(ValueError):
        Verdict("excluded", "bp2", T(1, 1, 1), None)
    with pytest.raises(ValueError):
        Verdict("maybe")


def test_forged_parity_witness_rejected():
    bogus = Verdict("excluded", "hopf_stiefel", T(11, 15, 16), ParityWitness(16, 4))
    assert not verify_verdict(bogus)


def test_triple_must_be_positive():
    with pytest.raises(ValueError):
        Triple(0, 5, 5)


# scan


def _frontier_by_check(r, s, condition):
    hits = [n for n in range(max(r, s), r + s + 1) if check(T(r, s, n)).per_condition[condition].excluded]
    return max(hits) if hits else None


def test_scan_cell_matches_check_definition():
    for r in range(1, 12):
        for s in range(r, 12):
            row = scan_cell(r, s)
            assert row.hopf_stiefel == _frontier_by_check(r, s, "hopf_stiefel"), (r, s)
            assert row.bp2 == _frontier_by_check(r, s, "bp2"), (r, s)


def test_scan_row_11_15():
    row = scan_cell(11, 15)
    assert (row.hopf_stiefel, row.bp2, row.strongest) == (15, 17, "bp2")


@pytest.mark.parametrize("s", [1, 2, 7, 30])
def test_scan_r_equals_one(s):
    row = scan_cell(1, s)
    assert (row.hopf_stiefel, row.bp2, row.strongest) == (None, None, None)


def test_raw_frontier_monotone_in_s():
    for r in range(1, 22):
        for s in range(1, 24, 2):
            lo, hi = raw_frontiers(r, s), raw_frontiers(r, s + 2)
            assert lo["bp2"] <= hi["bp2"]
            assert lo["hopf_stiefel"] <= hi["hopf_stiefel"]


def test_scan_bp2_frontier_monotone_where_reported():
    # a reported frontier can only vanish at s + 2 when it falls below the new floor
    by_cell = {(row.r, row.s): row for row in scan(21, 23).rows}
    for (r, s), row in by_cell.items():
        nxt = by_cell.get((r, s + 2))
        if s % 2 == 1 and nxt is not None and (row.bp2 or 0) >= s + 2:
            assert row.bp2 <= nxt.bp2


def test_raw_frontier_matches_check():
    for r in range(1, 10):
        for s in range(1, 10):
            raw = raw_frontiers(r, s)
            for cond in ("bp2", "hopf_stiefel"):
                hits = [n for n in range(1, r + s + 1) if check(T(r, s, n)).per_condition[cond].excluded]
                assert raw[cond] == max(hits, default=0)


def test_scan_parallel_matches_sequential():
    assert scan(17, 19, jobs=1) == scan(17, 19, jobs=3)


def test_scan_respects_cap():
    row = scan_cell(11, 15, Caps(n_max=16))
    assert row.bp2 == 15 and row.hopf_stiefel == 15


def test_scan_uses_known_rows():
    fake = {(1, 1): scan_cell(1, 1)}
    seen = []
    table = scan(2, 2, known=fake, on_row=seen.append)
    assert [(r.r, r.s) for r in seen] == [(1, 2), (2, 2)]
    assert [(r.r, r.s) for r in table.rows] == [(1, 1), (1, 2), (2, 2)]


def test_scan_rejects_bad_bounds():
    with pytest.raises(ValueError):
        scan(0, 3)


def test_bp2_excludes_outside_window_is_false():
    assert not bp2_excludes(5, 7, 13)
    assert hopf_stiefel_excluded(11, 15, 15)
