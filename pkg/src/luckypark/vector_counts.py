"""Counting u-parking functions themselves (not just outcomes) by lucky set
and by number of lucky cars.

Here an unusable spot compares *smaller* than every car, the opposite of
the convention in the outcome censuses: a blocked spot never stops the
leftward run of spots an unlucky car could have preferred.  The two
modules deliberately share no comparison helpers.  Powers follow the
0**0 = 1 convention, which Python's ** already implements.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .combinat import binomial, iter_ordered_set_partitions, iter_weak_compositions
from .parking import BlockOutcome, Street, X, as_street
from .vector_outcomes import iter_valid_u_outcomes


def blocked_run_left(blocks: BlockOutcome, car: int) -> int:
    """Number of contiguous spots directly left of `car`'s spot that are
    unusable or whose largest parked car is smaller than `car`: exactly
    the spots an unlucky `car` could have preferred and still parked where
    it did."""
    for i, block in enumerate(blocks):
        if block is not X and car in block:
            run = 0
            for left in range(i - 1, -1, -1):
                b = blocks[left]
                if b is not X and b[-1] > car:
                    break
                run += 1
            return run
    raise ValueError(f"car {car} does not appear in the outcome")


def preference_count(blocks: BlockOutcome, lucky: Iterable[int], car: int) -> int:
    """Number of preferences `car` can have in a u-parking function with
    this outcome and lucky set: 1 when lucky, otherwise the blocked run to
    its left."""
    if car in frozenset(lucky):
        return 1
    return blocked_run_left(blocks, car)


def count_upfs_fixed_lucky(u, lucky: Iterable[int]) -> int:
    """Number of u-parking functions whose lucky set is exactly `lucky`:
    over each achievable outcome, the product of preference choices of the
    unlucky cars."""
    street = as_street(u)
    lucky = frozenset(lucky)
    if not all(1 <= i <= street.n_cars for i in lucky):
        return 0
    unlucky = [c for c in range(1, street.n_cars + 1) if c not in lucky]
    total = 0
    for blocks in iter_valid_u_outcomes(street, lucky):
        term = 1
        for car in unlucky:
            term *= blocked_run_left(blocks, car)
        total += term
    return total


def descent_load(
    blocks: Sequence[tuple[int, ...]], lucky_blocks: Sequence[Iterable[int]]
) -> dict[tuple[int, int], int]:
    """Per-block tallies of unlucky cars against earlier-block maxima.

    For a reindexed outcome (no X blocks; block j holds the cars of the
    j-th usable spot) and a choice of lucky cars per block, load[j, t] for
    0 < t < j counts unlucky cars of block j larger than everything in
    blocks t..j-1; load[j, 0] = 0 and load[j, j] is the number of unlucky
    cars in block j.  1-based block indices.
    """
    load: dict[tuple[int, int], int] = {}
    for j, block in enumerate(blocks, 1):
        unlucky = set(block) - set(lucky_blocks[j - 1])
        load[j, 0] = 0
        load[j, j] = len(unlucky)
        ceiling = 0
        for t in range(j - 1, 0, -1):
            ceiling = max(ceiling, max(blocks[t - 1]))
            load[j, t] = sum(1 for car in unlucky if car > ceiling)
    return load


def count_upfs_k_lucky(u, k: int) -> int:
    """Number of u-parking functions with exactly k lucky cars.

    Sums over splits of k among the usable spots, over reindexed outcomes,
    and over choices of lucky cars per later block.  Cars in the first
    usable spot v1 contribute choose(m1, k1) * (v1 - 1)^(unlucky); an
    unlucky car of a later block contributes the count of spots it could
    have preferred, grouped by how far left its options reach.
    """
    if not isinstance(u, Street) and len(tuple(u)) == 0:
        return 1 if k == 0 else 0
    street = as_street(u)
    values = street.spot_values()
    mults = street.multiplicities()
    r = len(values)
    n = street.n_cars
    total = 0
    for kappa in iter_weak_compositions(k, r, mults):
        head = binomial(mults[0], kappa[0]) * (values[0] - 1) ** (mults[0] - kappa[0])
        if head == 0:
            continue
        for blocks in iter_ordered_set_partitions(n, mults):
            total += head * _later_block_choices(values, kappa, blocks)
    return total


def _later_block_choices(values, kappa, blocks) -> int:
    """Sum over lucky-car choices in blocks 2..r of the preference-choice
    products of their unlucky cars."""
    r = len(values)
    spread = 0
    for picks in itertools.product(
        *(itertools.combinations(blocks[j], kappa[j]) for j in range(1, r))
    ):
        load = descent_load(blocks, (blocks[0],) + picks)
        term = 1
        for j in range(2, r + 1):
            for t in range(1, j + 1):
                base = values[j - 1] - (values[t - 2] if t >= 2 else 0) - 1
                term *= base ** (load[j, t] - load[j, t - 1])
        spread += term
    return spread


def count_upfs_const_then_jump(n: int, i: int, j: int, k: int) -> int:
    """Closed form of count_upfs_k_lucky for u = (i, ..., i, j) with n-1
    copies of i followed by one larger j."""
    if not 1 <= i < j or n < 1:
        raise ValueError("need 1 <= i < j and n >= 1")
    if k < 0:
        return 0
    # vanishing binomials guard the powers against negative exponents
    all_at_low = binomial(n - 1, k)
    if all_at_low:
        all_at_low *= (i - 1) ** (n - 1 - k) * ((n - 1) * (j - i - 1) + (j - 1))
    one_at_high = binomial(n - 1, k - 1)
    if one_at_high:
        one_at_high *= n * (i - 1) ** (n - k)
    return all_at_low + one_at_high


def lucky_polynomial_closed_form(n: int) -> list[int]:
    """Coefficients (by number of lucky cars) of the classical lucky-count
    polynomial q * prod_{i=1}^{n-1} (i + (n-i+1) q)."""
    coeffs = [0, 1]
    for i in range(1, n):
        low, high = i, n - i + 1
        nxt = [0] * (len(coeffs) + 1)
        for d, c in enumerate(coeffs):
            nxt[d] += low * c
            nxt[d + 1] += high * c
        coeffs = nxt
    return coeffs
