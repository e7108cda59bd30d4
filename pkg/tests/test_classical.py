import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import lucas_parity, pascal_row, rho_table
from sos_obstruct.classical import (
    TruncatedPoly,
    hopf_stiefel_excluded,
    hopf_stiefel_via_ring,
    hopf_stiefel_witness,
    hurwitz_radon_rho,
    ring_exclusions,
)

positive = st.integers(1, 40)


def test_hopf_stiefel_11_15_15():
    assert hopf_stiefel_excluded(11, 15, 15)
    assert hopf_stiefel_via_ring(11, 15, 15)


def test_hopf_stiefel_empty_range():
    assert not hopf_stiefel_excluded(1, 1, 1)
    assert not hopf_stiefel_via_ring(1, 1, 1)


@pytest.mark.parametrize("n", [16, 17])
def test_hopf_stiefel_stops_at_15(n):
    # brute force: C(n, k) parity from Pascal's triangle for every k in range
    row = pascal_row(n)
    assert not any(row[k] % 2 for k in range(n - 15 + 1, 11))
    assert not hopf_stiefel_excluded(11, 15, n)
    assert not hopf_stiefel_via_ring(11, 15, n)


def test_witness_is_odd_binomial():
    k = hopf_stiefel_witness(11, 15, 15)
    assert 0 < k < 11 and pascal_row(15)[k] % 2 == 1


@pytest.mark.parametrize("r, s", [(3, 4), (5, 5), (1, 9), (12, 7)])
def test_ring_degree_bound(r, s):
    for n in range(r + s - 1, r + s + 6):
        assert not hopf_stiefel_via_ring(r, s, n)


@pytest.mark.parametrize("bad", [(0, 1, 1), (1, 0, 1), (1, 1, 0)])
def test_rejects_nonpositive(bad):
    with pytest.raises(ValueError):
        hopf_stiefel_excluded(*bad)
    with pytest.raises(ValueError):
        hopf_stiefel_via_ring(*bad)


def test_random_triples_agree():
    rng = random.Random(1234)
    for _ in range(400):
        r, s, n = rng.randint(1, 64), rng.randint(1, 64), rng.randint(1, 128)
        assert hopf_stiefel_excluded(r, s, n) == hopf_stiefel_via_ring(r, s, n)


@given(positive, positive, st.integers(1, 80))
def test_symmetry(r, s, n):
    assert hopf_stiefel_excluded(r, s, n) == hopf_stiefel_excluded(s, r, n)


@given(positive, positive, st.integers(1, 80))
def test_parity_matches_digitwise_lucas(r, s, n):
    expected = any(lucas_parity(n, k) for k in range(max(0, n - s + 1), min(r, n + 1)))
    assert hopf_stiefel_excluded(r, s, n) == expected


@given(st.integers(1, 20), st.integers(1, 20), st.integers(1, 50))
def test_monotone_in_n(r, s, n):
    if not hopf_stiefel_via_ring(r, s, n):
        assert not hopf_stiefel_via_ring(r, s, n + 1)


def test_ring_exclusions_match_single_calls():
    table = ring_exclusions(7, 9, 20)
    assert table[1:] == [hopf_stiefel_via_ring(7, 9, n) for n in range(1, 21)]


# truncated ring arithmetic


def test_monomials_beyond_bounds_vanish():
    assert not TruncatedPoly.monomial(3, 4, 3, 0)
    assert not TruncatedPoly.monomial(3, 4, 0, 4)
    x1 = TruncatedPoly.monomial(3, 4, 1, 0)
    assert not x1 * x1 * x1
    assert (x1 * x1).terms() == [(2, 0)]


def test_characteristic_two():
    p = TruncatedPoly.x1_plus_x2(5, 5)
    assert not (p + p)
    # (x1 + x2)^2 = x1^2 + x2^2 mod 2
    assert (p * p).terms() == [(0, 2), (2, 0)]


@given(st.integers(1, 9), st.integers(1, 9), st.data())
def test_multiplication_matches_naive(r, s, data):
    terms = st.lists(st.tuples(st.integers(0, r - 1), st.integers(0, s - 1)), max_size=8)
    ta, tb = data.draw(terms), data.draw(terms)

    def build(ts):
        out = TruncatedPoly.zero(r, s)
        for i, j in ts:
            out = out + TruncatedPoly.monomial(r, s, i, j)
        return out

    expected = {(i, j) for (i, j), c in _mod2_product(ta, tb).items() if c and i < r and j < s}
    assert set((build(ta) * build(tb)).terms()) == expected


def _mod2_product(ta, tb):
    out = {}
    for i, j in ta:
        for k, l in tb:
            out[(i + k, j + l)] = out.get((i + k, j + l), 0) ^ 1
    return out


def test_mismatched_rings():
    with pytest.raises(ValueError):
        TruncatedPoly.one(2, 3) * TruncatedPoly.one(3, 2)


def test_power_operator():
    p = TruncatedPoly.x1_plus_x2(11, 15)
    assert bool(p**15) == hopf_stiefel_excluded(11, 15, 15)


# Hurwitz-Radon


@pytest.mark.parametrize("n", [1, 2, 4, 8])
def test_rho_composition_algebras(n):
    assert hurwitz_radon_rho(n) == n


@pytest.mark.parametrize("n", [1, 3, 5, 77, 1001])
def test_rho_odd(n):
    assert hurwitz_radon_rho(n) == 1


def test_rho_16():
    assert hurwitz_radon_rho(16) == 9


def test_rho_against_recursion():
    assert [hurwitz_radon_rho(n) for n in range(1, 1025)] == [rho_table(n) for n in range(1, 1025)]


def test_rho_domain():
    with pytest.raises(ValueError):
        hurwitz_radon_rho(0)


def test_hopf_stiefel_is_silent_on_16_16_16():
    # (x1 + x2)^16 = x1^16 + x2^16 vanishes in the (16, 16) ring, and so does every higher power
    p = TruncatedPoly.x1_plus_x2(16, 16) ** 16
    assert not p
    assert not any(hopf_stiefel_excluded(r, s, n) for r in range(1, 17) for s in range(1, 17) for n in range(16, 40))
