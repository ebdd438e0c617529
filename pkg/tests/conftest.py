import itertools

import pytest


def subsets(items):
    """All subsets of `items` as frozensets, smallest first."""
    items = sorted(items)
    for size in range(len(items) + 1):
        for combo in itertools.combinations(items, size):
            yield frozenset(combo)


def weakly_increasing_vectors(length, top):
    """All capacity vectors of the given length with entries in [top]."""
    return itertools.combinations_with_replacement(range(1, top + 1), length)


def descent_count(perm):
    """Independent descent counter used to pin Eulerian values."""
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


@pytest.fixture(scope="session")
def small_vector_censuses():
    """Oracle censuses for every capacity vector with n <= 4, max <= 4.

    Shared by the module tests; the acceptance suite runs the full
    n <= 5, max <= 5 grid itself.
    """
    from luckypark import census_vector

    grid = {}
    for n in range(1, 5):
        for u in weakly_increasing_vectors(n, 4):
            grid[u] = census_vector(u)
    return grid
