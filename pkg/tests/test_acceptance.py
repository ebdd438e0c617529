"""Acceptance suite: every counting formula must agree exactly (integer
equality, no tolerances) with the exhaustive brute-force oracle over the
full small-parameter grids.  One criterion per test, each printing a PASS
line; run with `pytest tests/test_acceptance.py -v -s` to see them stream.
"""

import itertools

import pytest

from luckypark import (
    associated_composition,
    census_classical,
    census_completion,
    census_lucky_spots,
    census_mn,
    census_to_json,
    census_vector,
    count_outcomes_completion_k_lucky,
    count_outcomes_fixed_lucky,
    count_outcomes_lucky_spots,
    count_outcomes_mn_fixed_lucky,
    count_outcomes_mn_k_lucky,
    count_outcomes_mn_k_lucky_variant,
    count_outcomes_spot1_blocked,
    count_outcomes_spot2_blocked,
    count_outcomes_spot3_blocked,
    count_upfs_const_then_jump,
    count_upfs_fixed_lucky,
    count_upfs_k_lucky,
    eulerian,
    factorial,
    iter_valid_u_outcomes,
    lucky_polynomial,
    lucky_polynomial_closed_form,
    park_vector,
)
from conftest import subsets, weakly_increasing_vectors


def _pass(message):
    print(f"PASS {message}")


@pytest.fixture(scope="module")
def censuses_top5():
    """Oracle censuses for every capacity vector with n <= 5, max(u) <= 5."""
    return {
        u: census_vector(u)
        for n in range(1, 6)
        for u in weakly_increasing_vectors(n, 5)
    }


def test_criterion_01_classical_totals():
    for n in range(1, 7):
        assert census_classical(n).total == (n + 1) ** (n - 1), n
    _pass("criterion 1: classical totals equal (n+1)^(n-1) for n=1..6")


def test_criterion_02_lucky_polynomial():
    for n in range(1, 7):
        assert lucky_polynomial(n) == lucky_polynomial_closed_form(n), n
    _pass("criterion 2: lucky-count polynomial matches its product form for n=1..6")


def test_criterion_03_fixed_lucky_outcome_counts():
    assert count_outcomes_fixed_lucky(5, {1, 4}) == 4
    assert count_outcomes_fixed_lucky(5, {1, 2, 3}) == 54
    for n in range(1, 7):
        census = census_classical(n)
        for lucky in subsets(range(1, n + 1)):
            want = len(census.outcomes_for(lucky))
            assert count_outcomes_fixed_lucky(n, lucky) == want, (n, sorted(lucky))
    _pass("criterion 3: fixed-lucky-set outcome counts match the oracle for n=1..6")


def test_criterion_04_mn_outcome_counts():
    variant_splits = []
    for m in range(1, 5):
        for n in range(m, 7):
            census = census_mn(m, n)
            for lucky in subsets(range(1, m + 1)):
                want = len(census.outcomes_for(lucky))
                assert count_outcomes_mn_fixed_lucky(m, n, lucky) == want, (
                    m, n, sorted(lucky),
                )
            for k in range(1, m + 1):
                want = len(census.k_outcomes(k))
                got = count_outcomes_mn_k_lucky(m, n, k)
                alt = count_outcomes_mn_k_lucky_variant(m, n, k)
                assert got == want, (m, n, k, got, want)
                if alt != got:
                    variant_splits.append((m, n, k, got, alt))
            if m == n:
                for k in range(1, n + 1):
                    partial = sum(eulerian(n, j) for j in range(k))
                    assert count_outcomes_mn_k_lucky(n, n, k) == partial
    assert variant_splits, "expected the two binomial readings to separate"
    first = variant_splits[0]
    _pass(
        "criterion 4: (m,n) outcome counts match the oracle for m<=4, n<=6; "
        "the statement binomial C(m-j-1,d) is the one the oracle confirms "
        f"(the proof-display variant C(m-j,d) first deviates at m={first[0]}, "
        f"n={first[1]}, k={first[2]}: {first[4]} vs oracle {first[3]}; "
        f"{len(variant_splits)} grid points differ)"
    )


def test_criterion_05_completion_outcome_counts():
    for k in range(4):
        assert count_outcomes_completion_k_lucky(3, (1, 3, 5), k) == 6
    checked = 0
    for n in range(1, 6):
        for m in range(0, 4):
            if n + m > 8:
                continue
            for s in itertools.combinations(range(1, n + m + 1), m):
                census = census_completion(n, s)
                for k in range(n + 1):
                    want = len(census.k_outcomes(k))
                    got = count_outcomes_completion_k_lucky(n, s, k)
                    assert got == want, (n, s, k, got, want)
                checked += 1
    _pass(
        "criterion 5: parking-completion outcome counts match the oracle on "
        f"{checked} streets (n<=5, up to 3 blocked spots, length <= 8)"
    )


def test_criterion_06_blocked_spot_counts():
    formulas = {
        1: count_outcomes_spot1_blocked,
        2: count_outcomes_spot2_blocked,
        3: count_outcomes_spot3_blocked,
    }
    for spot, formula in formulas.items():
        for n in range(2 if spot == 3 else 1, 6):
            u = tuple(x for x in range(1, n + 2) if x != spot)
            census = census_vector(u)
            for lucky in subsets(range(1, n + 1)):
                want = len(census.outcomes_for(lucky))
                assert formula(n, lucky) == want, (spot, n, sorted(lucky))
    for n in range(1, 21):
        for k in range(n + 1):
            want = factorial(k) * (k + 1) ** (n - k)
            assert count_outcomes_spot1_blocked(n, range(1, k + 1)) == want
    _pass(
        "criterion 6: single-blocked-spot counts match the oracle for n<=5 "
        "and the prefix closed form k!(k+1)^(n-k) holds for n<=20"
    )


def test_criterion_07_lucky_spot_counts():
    assert associated_composition((1, 1, 2, 4, 4, 5), {1, 5}) == (3, 2, 1)
    assert associated_composition((1, 1, 2, 4, 4, 5), {1, 4}) == (3, 0, 3)
    assert count_outcomes_lucky_spots((1, 2, 4, 5), {1, 5}) == 12
    assert count_outcomes_lucky_spots((2, 2, 3, 5), {3, 5}) == 12
    checked = 0
    for n in range(1, 6):
        for u in weakly_increasing_vectors(n, 6):
            spot_census = census_lucky_spots(u)
            for spots in subsets(set(u)):
                want = len(spot_census.get(spots, set()))
                assert count_outcomes_lucky_spots(u, spots) == want, (u, sorted(spots))
            checked += 1
    _pass(
        "criterion 7: lucky-spot multinomials match the oracle on "
        f"{checked} capacity vectors (n<=5, max<=6)"
    )


def test_criterion_08_upf_fixed_lucky_counts(censuses_top5):
    u = (1, 1, 3, 3, 3)
    target = (((2, 3), None, (1, 4, 5)), frozenset({2, 3, 4}))
    realizers = [
        prefs
        for prefs in itertools.product(range(1, 4), repeat=5)
        if park_vector(u, prefs) == target
    ]
    assert realizers == [(2, 1, 1, 3, 1), (2, 1, 1, 3, 2)]
    for u, census in censuses_top5.items():
        for lucky in subsets(range(1, len(u) + 1)):
            want = census.functions_for(lucky)
            assert count_upfs_fixed_lucky(u, lucky) == want, (u, sorted(lucky))
    _pass(
        "criterion 8: u-parking-function counts by lucky set match the "
        f"oracle on {len(censuses_top5)} capacity vectors (n<=5, max<=5)"
    )


def test_criterion_09_upf_k_lucky_counts(censuses_top5):
    assert count_upfs_k_lucky((1, 1, 3), 2) == 4
    assert count_upfs_k_lucky((1, 1, 3), 3) == 3
    for u, census in censuses_top5.items():
        n = len(u)
        for k in range(n + 1):
            value = count_upfs_k_lucky(u, k)
            assert value == census.k_functions(k), (u, k)
            by_sets = sum(
                count_upfs_fixed_lucky(u, frozenset(c))
                for c in itertools.combinations(range(1, n + 1), k)
            )
            assert value == by_sets, (u, k)
    corner_points = 0
    for i in range(1, 4):
        for j in range(i + 1, i + 4):
            for n in range(1, 6):
                u = (i,) * (n - 1) + (j,)
                census = census_vector(u)
                for k in range(n + 1):
                    closed = count_upfs_const_then_jump(n, i, j, k)
                    assert closed == count_upfs_k_lucky(u, k), (i, j, n, k)
                    assert closed == census.k_functions(k), (i, j, n, k)
                    corner_points += 1
    for n in range(1, 7):
        u = tuple(range(1, n + 1))
        got = [count_upfs_k_lucky(u, k) for k in range(n + 1)]
        assert got == lucky_polynomial_closed_form(n), n
    _pass(
        "criterion 9: u-parking-function counts by k match the per-set sums "
        f"and the oracle (n<=5, max<=5); const-then-jump closed form agrees "
        f"at {corner_points} points; classical streets match the lucky "
        "polynomial for n<=6"
    )


def test_criterion_10_arithmetic_totals():
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            for n in range(1, 6):
                u = tuple(a + b * (i - 1) for i in range(1, n + 1))
                assert census_vector(u).total == a * (a + b * n) ** (n - 1), (a, b, n)
    _pass(
        "criterion 10: arithmetic-capacity totals equal a(a+bn)^(n-1) for "
        "a,b in {1,2,3}, n<=5"
    )


def test_criterion_11_characterization_completeness(censuses_top5):
    for u, census in censuses_top5.items():
        for lucky in subsets(range(1, len(u) + 1)):
            claimed = set(iter_valid_u_outcomes(u, lucky))
            actual = census.outcomes_for(lucky)
            assert claimed == actual, (u, sorted(lucky))
    _pass(
        "criterion 11: the outcome characterization accepts exactly the "
        f"realized outcome sets on {len(censuses_top5)} capacity vectors "
        "(both inclusions, every lucky set)"
    )


def test_criterion_12_worker_determinism():
    makers = [
        lambda w: census_classical(4, workers=w),
        lambda w: census_mn(3, 5, workers=w),
        lambda w: census_vector((1, 1, 3, 3), workers=w),
        lambda w: census_completion(3, (2, 4), workers=w),
    ]
    for maker in makers:
        assert census_to_json(maker(1)) == census_to_json(maker(8))
    _pass(
        "criterion 12: censuses serialize byte-identically with 1 and 8 workers"
    )
