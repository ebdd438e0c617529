"""Outcome censuses for classical and (m, n) parking functions with a fixed
lucky set or a fixed number of lucky cars.

An (m, n) outcome is a tuple of length n whose entries are the m car
indices plus X for vacant spots.  Throughout this module a vacant spot
compares *greater* than every car: with an imaginary vacant spot prepended
to the street, "the previous entry is larger" uniformly forces the next
car to be lucky, whether the previous entry is a car or an X.
"""

from __future__ import annotations

from typing import Iterable

from .combinat import binomial, eulerian, factorial, factorial_ratio
from .parking import SlotOutcome, X


def _precedes_forces_lucky(prev, entry) -> bool:
    # X > car for any car; car-vs-car is the plain integer comparison.
    return prev is X or prev > entry


def is_valid_outcome_mn(slots: SlotOutcome, lucky: Iterable[int]) -> bool:
    """Can `slots` be the outcome of an (m, n) parking function whose lucky
    set is exactly `lucky`?

    A car directly right of a vacant spot (or at the street start) and a
    car directly right of a larger car must both be lucky; nothing else is
    constrained.
    """
    lucky = frozenset(lucky)
    prev = X
    for entry in slots:
        if entry is not X and _precedes_forces_lucky(prev, entry) and entry not in lucky:
            return False
        prev = entry
    return True


def is_valid_outcome(perm: SlotOutcome, lucky: Iterable[int]) -> bool:
    """Classical special case of is_valid_outcome_mn: perm has no vacancies,
    so the first car and every descent bottom must be lucky."""
    if any(entry is X for entry in perm):
        raise ValueError("classical outcomes have no vacant spots")
    return is_valid_outcome_mn(perm, lucky)


def count_outcomes_fixed_lucky(n: int, lucky: Iterable[int]) -> int:
    """Number of distinct outcomes of parking functions on [n] whose lucky
    set is exactly `lucky`: k! times, over each unlucky car j, the number
    of lucky cars below j.  Zero whenever car 1 is not lucky."""
    lucky = frozenset(lucky)
    if not lucky <= set(range(1, n + 1)):
        return 0
    out = factorial(len(lucky))
    below = 0
    for j in range(1, n + 1):
        if j in lucky:
            below += 1
        else:
            out *= below
    return out


def count_outcomes_first_k_lucky(n: int, k: int) -> int:
    """Outcomes whose lucky set is exactly {1, ..., k}: k! * k^(n-k)."""
    if not 1 <= k <= n:
        return 0
    return factorial(k) * k ** (n - k)


def count_outcomes_mn_fixed_lucky(m: int, n: int, lucky: Iterable[int]) -> int:
    """Distinct outcomes of (m, n) parking functions with lucky set exactly
    `lucky`: (k+n-m)!/(n-m)! arrangements of runs and vacancies times the
    per-unlucky-car placement product."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    lucky = frozenset(lucky)
    if not lucky <= set(range(1, m + 1)):
        return 0
    k = len(lucky)
    out = factorial_ratio(k + n - m, n - m)
    below = 0
    for j in range(1, m + 1):
        if j in lucky:
            below += 1
        else:
            out *= below
    return out


def count_outcomes_mn_k_lucky(m: int, n: int, k: int) -> int:
    """Distinct outcomes of (m, n) parking functions with exactly k lucky
    cars: sum over j descents and d cars placed right of vacancies of
    C(m-j-1, d) * C(n-m+j+1, j+1+d) * eulerian(m, j)."""
    return _mn_k_lucky(m, n, k, statement=True)


def count_outcomes_mn_k_lucky_variant(m: int, n: int, k: int) -> int:
    """Same sum with C(m-j, d) in place of C(m-j-1, d).

    Both versions circulate; they first differ at m=2, n=3, k=2.  The
    exhaustive census arbitrates (see verify/acceptance reports); counting
    code should use count_outcomes_mn_k_lucky.
    """
    return _mn_k_lucky(m, n, k, statement=False)


def _mn_k_lucky(m: int, n: int, k: int, statement: bool) -> int:
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    if k < 1:
        return 0
    total = 0
    for j in range(k):
        inner = 0
        for d in range(k - j):
            top = m - j - 1 if statement else m - j
            inner += binomial(top, d) * binomial(n - m + j + 1, j + 1 + d)
        total += inner * eulerian(m, j)
    return total


def outcomes_nested_by_k(m: int, n: int) -> bool:
    """Exhaustive check that the distinct-outcome sets with exactly k lucky
    cars grow with k: every outcome achievable with k lucky cars is also
    achievable with k+1."""
    from .oracle import census_mn

    census = census_mn(m, n)
    for k in range(1, m):
        lower = census.by_k.get(k)
        upper = census.by_k.get(k + 1)
        if lower is not None and (upper is None or not lower.outcomes <= upper.outcomes):
            return False
    return True
