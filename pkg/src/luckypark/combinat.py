"""Exact big-integer combinatorial primitives and generators.

Everything returns plain Python ints (arbitrary precision) and generators
yield in a fixed lexicographic order so transcripts are reproducible.
"""

from __future__ import annotations

import functools
import itertools
import math
from typing import Iterator, Sequence

factorial = math.factorial


def binomial(n: int, k: int) -> int:
    """C(n, k) with the out-of-range convention: 0 when k < 0 or k > n."""
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def factorial_ratio(a: int, b: int) -> int:
    """a! / b! for a >= b >= 0."""
    if b > a or b < 0:
        raise ValueError(f"need 0 <= b <= a, got a={a}, b={b}")
    return math.perm(a, a - b)


def multinomial(n: int, parts: Sequence[int]) -> int:
    """n! / (parts_1! * ... * parts_k!) for a weak composition of n."""
    if any(p < 0 for p in parts):
        raise ValueError("composition parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"parts {tuple(parts)} do not sum to {n}")
    out = 1
    rest = n
    for p in parts:
        out *= math.comb(rest, p)
        rest -= p
    return out


@functools.lru_cache(maxsize=None)
def eulerian(n: int, k: int) -> int:
    """Number of permutations of [n] with exactly k descents.

    Conventions: eulerian(0, 0) = 1 and eulerian(n, k) = 0 for
    k >= max(n, 1), which the partial-sum formulas below rely on.
    """
    if n < 0 or k < 0:
        return 0
    if k >= max(n, 1):
        return 0
    if k == 0:
        return 1
    return (k + 1) * eulerian(n - 1, k) + (n - k) * eulerian(n - 1, k - 1)


def iter_ordered_set_partitions(
    n: int, sizes: Sequence[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All ordered set partitions of [n] with the given block sizes.

    Blocks are sorted tuples; the stream is deterministic (blocks filled
    left to right, each chosen in combinations order) and has exactly
    multinomial(n, sizes) items.
    """
    sizes = tuple(sizes)
    if any(s < 0 for s in sizes):
        raise ValueError("block sizes must be nonnegative")
    if sum(sizes) != n:
        raise ValueError(f"block sizes {sizes} do not sum to {n}")

    def fill(remaining: tuple[int, ...], sizes: tuple[int, ...]):
        if not sizes:
            yield ()
            return
        for block in itertools.combinations(remaining, sizes[0]):
            taken = set(block)
            rest = tuple(x for x in remaining if x not in taken)
            for tail in fill(rest, sizes[1:]):
                yield (block,) + tail

    return fill(tuple(range(1, n + 1)), sizes)


def iter_bounded_tuples(length: int, total_bound: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer tuples of the given length with sum <= total_bound,
    in lexicographic order.  A negative bound yields nothing."""
    if total_bound < 0:
        return
    if length == 0:
        yield ()
        return
    for first in range(total_bound + 1):
        for rest in iter_bounded_tuples(length - 1, total_bound - first):
            yield (first,) + rest


def iter_weak_compositions(
    total: int, parts: int, caps: Sequence[int]
) -> Iterator[tuple[int, ...]]:
    """Weak compositions of `total` into `parts` parts with part i <= caps[i],
    in lexicographic order."""
    caps = tuple(caps)
    if len(caps) != parts:
        raise ValueError("need one cap per part")

    def gen(total: int, caps: tuple[int, ...]):
        if not caps:
            if total == 0:
                yield ()
            return
        if total > sum(caps):
            return
        for first in range(min(total, caps[0]) + 1):
            for rest in gen(total - first, caps[1:]):
                yield (first,) + rest

    return gen(total, caps)
