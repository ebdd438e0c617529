"""Outcome censuses for capacity (u-) parking functions.

Covers the block-outcome characterization for a fixed lucky set, counts of
parking-completion outcomes by number of lucky cars, closed/recursive
counts for streets with a single blocked spot, and counts of outcomes by
the set of spots where lucky cars sit.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .combinat import (
    eulerian,
    factorial,
    iter_bounded_tuples,
    iter_ordered_set_partitions,
    multinomial,
)
from .parking import BlockOutcome, X, as_street


def is_valid_u_outcome(u, blocks: BlockOutcome, lucky: Iterable[int]) -> bool:
    """Can `blocks` be the outcome of a u-parking function with lucky set
    exactly `lucky`?

    Two rules: cars in the first spot of the street must all be lucky, and
    a car smaller than some car in the directly preceding occupied spot
    must be lucky.  `blocks` is assumed to respect the capacities of u.
    """
    lucky = frozenset(lucky)
    first = blocks[0]
    if first is not X and not set(first) <= lucky:
        return False
    for left, right in zip(blocks, blocks[1:]):
        if left is X or right is X:
            continue
        biggest_left = left[-1]
        for car in right:
            if car < biggest_left and car not in lucky:
                return False
    return True


def iter_valid_u_outcomes(u, lucky: Iterable[int]) -> Iterator[BlockOutcome]:
    """All outcomes of u-parking functions with lucky set exactly `lucky`.

    Every capacity-respecting assignment of cars to spots is achievable, so
    this generates ordered set partitions with the capacity block sizes and
    filters by is_valid_u_outcome.  Deterministic order.
    """
    street = as_street(u)
    lucky = frozenset(lucky)
    caps = street.capacity[1:]
    positive = [c for c in caps if c]
    for partition in iter_ordered_set_partitions(street.n_cars, positive):
        filled = iter(partition)
        blocks = tuple(next(filled) if c else X for c in caps)
        if is_valid_u_outcome(street, blocks, lucky):
            yield blocks


def completion_gaps(n: int, forbidden: Sequence[int]) -> tuple[int, ...]:
    """Lengths of the runs of available spots when the spots `forbidden`
    are removed from a street of n + len(forbidden) spots.  Runs adjacent
    to the street ends and between consecutive forbidden spots may be
    empty, so this is a weak composition of n."""
    s = tuple(forbidden)
    m = len(s)
    if any(b <= a for a, b in zip(s, s[1:])):
        raise ValueError("forbidden spots must be strictly increasing")
    if s and (s[0] < 1 or s[-1] > n + m):
        raise ValueError(f"forbidden spots must lie in [{n + m}]")
    if not s:
        return (n,)
    edges = (0,) + s + (n + m + 1,)
    return tuple(b - a - 1 for a, b in zip(edges, edges[1:]))


def count_outcomes_completion_k_lucky(n: int, forbidden: Sequence[int], k: int) -> int:
    """Distinct outcomes with exactly k lucky cars when n cars park on a
    street of n + len(forbidden) capacity-1 spots, the listed ones blocked.

    Cars split into the runs of open spots (a multinomial), and each run
    contributes its own descent count; at most k-1 descents total, or k
    when spot 1 is blocked (the leftmost parked car is then not forced
    lucky).
    """
    gaps = completion_gaps(n, forbidden)
    budget = max(k - gaps[0], k - 1)
    total = 0
    for descents in iter_bounded_tuples(len(gaps), budget):
        term = 1
        for gap, d in zip(gaps, descents):
            term *= eulerian(gap, d)  # eulerian(0, 0) = 1 covers empty runs
        total += term
    return multinomial(n, gaps) * total


def reduce_index_set(cars: Iterable[int], removed: Iterable[int]) -> frozenset[int]:
    """Relabel a set of car indices after deleting the cars in `removed`:
    drop the removed cars and shift every survivor down by the number of
    removed cars below it."""
    removed = sorted(set(removed))
    out = set()
    for i in cars:
        if i in removed:
            continue
        shift = sum(1 for r in removed if r <= i)
        out.add(i - shift)
    return frozenset(out)


def _in_range(lucky: frozenset[int], n: int) -> bool:
    return all(1 <= i <= n for i in lucky)


def count_outcomes_spot1_blocked(n: int, lucky: Iterable[int]) -> int:
    """Outcomes with lucky set exactly `lucky` when spot 1 of an
    (n+1)-spot street is blocked: k! times, per unlucky car j, the lucky
    cars below j plus one (the blocked spot acts as a permanent run head).
    Empty lucky sets are fine here; inconsistent ones count zero."""
    lucky = frozenset(lucky)
    if not _in_range(lucky, n):
        return 0
    out = factorial(len(lucky))
    below = 0
    for j in range(1, n + 1):
        if j in lucky:
            below += 1
        else:
            out *= below + 1
    return out


def count_outcomes_spot2_blocked(n: int, lucky: Iterable[int]) -> int:
    """Outcomes with lucky set exactly `lucky` when spot 2 of an
    (n+1)-spot street is blocked.  The car in spot 1 is some lucky car;
    removing it leaves the spot-1-blocked street one size down."""
    lucky = frozenset(lucky)
    if not lucky or not _in_range(lucky, n):
        return 0
    return sum(
        count_outcomes_spot1_blocked(n - 1, reduce_index_set(lucky, (i,)))
        for i in lucky
    )


def count_outcomes_spot3_blocked(n: int, lucky: Iterable[int]) -> int:
    """Outcomes with lucky set exactly `lucky` when spot 3 of an
    (n+1)-spot street is blocked.  Split on whether the car in spot 2 is
    lucky (spot-2-blocked street one size down) or unlucky (it must have
    preferred spot 1 and arrived after the spot-1 car; spot-1-blocked
    street two sizes down)."""
    if n < 2:
        raise ValueError("the spot-3 street needs at least 2 cars")
    lucky = frozenset(lucky)
    if not lucky or not _in_range(lucky, n):
        return 0
    unlucky = [s for s in range(1, n + 1) if s not in lucky]
    total = 0
    for i in lucky:
        total += count_outcomes_spot2_blocked(n - 1, reduce_index_set(lucky, (i,)))
        for s in unlucky:
            if s > i:
                total += count_outcomes_spot1_blocked(
                    n - 2, reduce_index_set(lucky, (i, s))
                )
    return total


def associated_composition(u, lucky_spots: Iterable[int]) -> tuple[int, ...]:
    """Weak composition of n read off from u and a set of lucky spots.

    Bars are placed before the first entry of u, after the last copy of
    each value whose successor spot is unusable, and before the first copy
    of each lucky spot other than spot 1; the parts are the entry counts
    between consecutive bars (several bars can share a gap, giving zero
    parts).
    """
    street = as_street(u)
    values = set(street.u)
    spots = frozenset(lucky_spots)
    if not spots <= values:
        raise ValueError("lucky spots must be usable spots of the street")
    n = street.n_cars
    bars = [0]
    for gap in range(1, n + 1):
        if gap == n or street.u[gap] != street.u[gap - 1]:
            # gap sits right of the last copy of u[gap-1]
            if street.u[gap - 1] + 1 not in values:
                bars.append(gap)
    for spot in spots:
        if spot > 1:
            bars.append(street.u.index(spot))
    bars.sort()
    return tuple(b - a for a, b in zip(bars, bars[1:]))


def count_outcomes_lucky_spots(u, lucky_spots: Iterable[int]) -> int:
    """Distinct outcomes whose lucky cars occupy exactly the given spots:
    the multinomial of the associated composition.

    When spot 1 is usable, the car parking there always prefers it, so
    spot 1 is a lucky spot of every outcome; spot sets omitting it are
    unrealizable and count zero.  (The bar construction already breaks a
    run at the street start, which is why it never bars spot 1 itself.)
    """
    street = as_street(u)
    spots = frozenset(lucky_spots)
    if street.u[0] == 1 and 1 not in spots:
        if not spots <= set(street.u):
            raise ValueError("lucky spots must be usable spots of the street")
        return 0
    return multinomial(street.n_cars, associated_composition(street, spots))


def underlying_permutation(blocks: BlockOutcome) -> tuple[int, ...]:
    """Flatten a block outcome into its car sequence, skipping X spots."""
    return tuple(itertools.chain.from_iterable(b for b in blocks if b is not X))
