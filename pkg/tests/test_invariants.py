from fractions import Fraction

import pytest

from brauer_zk.arith import factorize, integer_nth_root, vp_rp
from brauer_zk.decide import ispossible
from brauer_zk.hilbert import HALF, REAL, ZERO
from brauer_zk.invariants import (
    EXACT,
    LOWER_BOUND,
    NOT_6_MOD_8_WITNESS,
    check_abthm,
    check_jagy_obstruction,
    check_strong_approx_failure,
    invariant_set,
    invariant_sets,
    small_root_search,
)
from brauer_zk.oracle import half_invariant_scan, scan_depth


@pytest.mark.parametrize(
    "a, b, n, v, values",
    [
        (3, 3, 6, REAL, {ZERO}),
        (3, 3, 6, 2, {HALF}),
        (3, 3, 6, 5, {ZERO}),
        (2, 1, 3, 3, {ZERO, HALF}),
        (3, 3, 6, 3, {ZERO}),
    ],
)
def test_invariant_set_examples(a, b, n, v, values):
    result = invariant_set(a, b, n, v)
    assert result.values == values
    assert result.status == EXACT


def test_invariant_set_lower_bound_and_errors():
    assert invariant_set(3, 3, 10, 2).status == LOWER_BOUND
    with pytest.raises(ValueError):
        invariant_set(2, 1, -3, 3)
    with pytest.raises(ValueError):
        invariant_set(3, 3, 0, 3)


def test_invariant_sets_cover_expected_places():
    places = [str(s.place) for s in invariant_sets(3, 3, 6)]
    assert places == ["inf", "2", "3"]
    assert [str(s.place) for s in invariant_sets(3, 5, 14)] == ["inf", "2", "3", "5", "7"]


def test_exact_values_are_nonempty():
    for a in (1, 2, 3, 5):
        for b in (1, 3, 5):
            for n in range(1, 40):
                for s in invariant_sets(a, b, n):
                    if s.status == EXACT:
                        assert s.values and s.values <= {ZERO, HALF}


def test_small_root_search_examples():
    assert small_root_search(3, 3, 3, 4) == 1  # 3 | 1 + 1 + 1
    assert small_root_search(7, 1, 3, 5) is None
    # cubes mod 7 are 0, 1, 6, so 1 + z**3 + z**6 is never divisible by 7
    assert small_root_search(7, 3, 3, 1) is None
    assert small_root_search(7, 3, 3, 2) == 1  # 4 + 2 + 1


def test_small_root_search_against_direct_scan():
    for p in (3, 7, 11, 19):
        for a in (1, 3, 5):
            for b in (3, 5):
                for n in range(1, 60):
                    r = vp_rp(n, p).unit
                    hits = [z for z in range(p)
                            if sum(r ** (a - 1 - i) * z ** (i * b) for i in range(a)) % p == 0]
                    assert small_root_search(p, a, b, n) == (hits[0] if hits else None)


def test_exact_sets_match_residue_scan():
    for a in (3, 5):
        for b in (3, 5):
            for n in [s * v for v in range(2, 31) for s in (1, -1)]:
                if any(integer_nth_root(n, q) is not None for q in factorize(b).primes()):
                    continue
                for p in factorize(2 * a * n).primes():
                    inv = invariant_set(a, b, n, p)
                    if inv.status != EXACT:
                        continue
                    scanned = half_invariant_scan(a, b, n, p, scan_depth(p))
                    assert scanned == (HALF in inv.values), (a, b, n, p)


def test_not_6_mod_8_witness_table():
    def r2(x):
        return vp_rp(x, 2).unit % 4

    for residue, z in NOT_6_MOD_8_WITNESS.items():
        for a in (1, 3, 5):
            for b in (1, 3, 5):
                for n in range(residue, 200, 8):
                    if n == 0 or n == z**b:
                        continue
                    assert r2(n**a - z ** (a * b)) == 1, (residue, a, b, n)
                    assert r2(n - z**b) == 1, (residue, a, b, n)


@pytest.mark.parametrize("a, b, n, expected", [(3, 3, 6, True), (3, 3, 30, True), (3, 3, 14, False)])
def test_jagy_examples(a, b, n, expected):
    assert check_jagy_obstruction(a, b, n) is expected


def test_jagy_rejects_small_exponents():
    with pytest.raises(ValueError):
        check_jagy_obstruction(1, 3, 6)
    with pytest.raises(ValueError):
        check_jagy_obstruction(3, 4, 6)


def test_jagy_implies_obstruction():
    for a in (3, 5):
        for b in (3, 5):
            for n in range(-200, 201):
                if n and check_jagy_obstruction(a, b, n):
                    assert not ispossible(a * b, n**a).verdict, (a, b, n)


@pytest.mark.parametrize("a, b, n, expected", [(3, 1, 5, True), (2, 1, 3, True), (1, 3, 6, False),
                                               (1, 1, 5, False), (2, 1, 5, True),
                                               (2, 3, 5, False)])
def test_strong_approx_examples(a, b, n, expected):
    assert check_strong_approx_failure(a, b, n) is expected


@pytest.mark.parametrize("a, b, m, expected", [(5, 5, 7776, False), (5, 5, 100000, True), (5, 13, 12, True)])
def test_abthm_examples(a, b, m, expected):
    assert check_abthm(a, b, m) is expected


def test_abthm_rejects_bad_primes():
    with pytest.raises(ValueError):
        check_abthm(3, 5, 12)
    with pytest.raises(ValueError):
        check_abthm(5, 9, 12)
    with pytest.raises(ValueError):
        check_abthm(5, 5, 0)


def test_abthm_agrees_with_ispossible_for_k_25():
    for n in range(2, 64):
        assert check_abthm(5, 5, n**5) == ispossible(25, n**5).verdict, n


def test_invariant_values_are_fractions():
    for s in invariant_sets(3, 3, 6):
        assert all(isinstance(v, Fraction) for v in s.values)
