"""Exhaustive ground truth: enumerate every raw preference vector, simulate
it, and tabulate functions and distinct outcomes by lucky set.

Every counting formula in the package is tested against these censuses.
Enumeration is capped (default 10^7 vectors, env LUCKYPARK_CAP or the cap
argument override) and can be split across processes by the first car's
preference; partitions are merged in a fixed order so results and their
serialized form never depend on the worker count.
"""

from __future__ import annotations

import itertools
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Optional, Sequence

from .parking import LuckySet, Street, as_street, park_classical, park_vector
from .vector_outcomes import completion_gaps

DEFAULT_CAP = 10_000_000
CAP_ENV_VAR = "LUCKYPARK_CAP"


class CapExceeded(Exception):
    """Search space larger than the configured brute-force cap."""


def resolve_cap(cap: Optional[int] = None) -> int:
    if cap is not None:
        return cap
    return int(os.environ.get(CAP_ENV_VAR, DEFAULT_CAP))


def _check_cap(space: int, cap: Optional[int]) -> None:
    limit = resolve_cap(cap)
    if space > limit:
        raise CapExceeded(
            f"search space has {space} preference vectors, over the cap of {limit}"
        )


@dataclass
class Tally:
    """Function count plus the distinct outcomes behind it."""

    functions: int = 0
    outcomes: set = field(default_factory=set)


@dataclass
class Census:
    total: int
    by_lucky_set: dict[LuckySet, Tally]
    by_k: dict[int, Tally]

    def functions_for(self, lucky) -> int:
        t = self.by_lucky_set.get(frozenset(lucky))
        return t.functions if t else 0

    def outcomes_for(self, lucky) -> set:
        t = self.by_lucky_set.get(frozenset(lucky))
        return t.outcomes if t else set()

    def k_functions(self, k: int) -> int:
        t = self.by_k.get(k)
        return t.functions if t else 0

    def k_outcomes(self, k: int) -> set:
        t = self.by_k.get(k)
        return t.outcomes if t else set()


def _merge(parts) -> Census:
    by_lucky: dict[LuckySet, Tally] = {}
    total = 0
    for part in parts:
        for lucky, (count, outcomes) in part.items():
            tally = by_lucky.setdefault(lucky, Tally())
            tally.functions += count
            tally.outcomes |= outcomes
            total += count
    by_k: dict[int, Tally] = {}
    for lucky, tally in by_lucky.items():
        agg = by_k.setdefault(len(lucky), Tally())
        agg.functions += tally.functions
        agg.outcomes |= tally.outcomes
    return Census(total=total, by_lucky_set=by_lucky, by_k=by_k)


def _mn_part(m: int, n: int, first: int) -> dict:
    acc: dict = {}
    for rest in itertools.product(range(1, n + 1), repeat=m - 1):
        parked = park_classical((first,) + rest, n)
        if parked is None:
            continue
        outcome, lucky = parked
        entry = acc.setdefault(lucky, [0, set()])
        entry[0] += 1
        entry[1].add(outcome)
    return acc


def _vector_part(u: tuple, first: int) -> dict:
    street = Street(u)
    n = street.n_cars
    top = street.max_spot
    acc: dict = {}
    for rest in itertools.product(range(1, top + 1), repeat=n - 1):
        parked = park_vector(street, (first,) + rest)
        if parked is None:
            continue
        outcome, lucky = parked
        entry = acc.setdefault(lucky, [0, set()])
        entry[0] += 1
        entry[1].add(outcome)
    return acc


def _run_parts(worker, firsts, workers: int):
    if workers <= 1:
        return [worker(first) for first in firsts]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(worker, firsts))


def census_mn(
    m: int, n: int, *, cap: Optional[int] = None, workers: int = 1
) -> Census:
    """Census of (m, n) parking functions over the full preference space
    [n]^m."""
    if not 1 <= m <= n:
        raise ValueError(f"need 1 <= m <= n, got m={m}, n={n}")
    _check_cap(n**m, cap)
    parts = _run_parts(partial(_mn_part, m, n), range(1, n + 1), workers)
    return _merge(parts)


def census_classical(n: int, *, cap: Optional[int] = None, workers: int = 1) -> Census:
    """Census of classical parking functions over [n]^n."""
    return census_mn(n, n, cap=cap, workers=workers)


def census_vector(u, *, cap: Optional[int] = None, workers: int = 1) -> Census:
    """Census of u-parking functions over [max(u)]^n; larger preferences can
    never park, so nothing is lost by excluding them."""
    street = as_street(u)
    top = street.max_spot
    _check_cap(top**street.n_cars, cap)
    parts = _run_parts(partial(_vector_part, street.u), range(1, top + 1), workers)
    return _merge(parts)


def completion_street(n: int, forbidden: Sequence[int]) -> Street:
    """The capacity-1 street left when `forbidden` spots are removed from a
    street of n + len(forbidden) spots."""
    completion_gaps(n, forbidden)  # validates the forbidden set
    blocked = set(forbidden)
    u = tuple(s for s in range(1, n + len(blocked) + 1) if s not in blocked)
    return Street(u)


def census_completion(
    n: int, forbidden: Sequence[int], *, cap: Optional[int] = None, workers: int = 1
) -> Census:
    """Census of parking completions: capacity-1 spots with the listed ones
    blocked."""
    return census_vector(completion_street(n, forbidden), cap=cap, workers=workers)


def census_lucky_spots(u, *, cap: Optional[int] = None) -> dict[frozenset, set]:
    """Map each realized lucky-spot set L to the distinct outcomes achieved
    by some u-parking function whose lucky cars sit exactly on L.  Lucky
    cars park at their preference, so L is just the lucky cars' prefs."""
    street = as_street(u)
    top = street.max_spot
    n = street.n_cars
    _check_cap(top**n, cap)
    acc: dict[frozenset, set] = {}
    for prefs in itertools.product(range(1, top + 1), repeat=n):
        parked = park_vector(street, prefs)
        if parked is None:
            continue
        outcome, lucky = parked
        spots = frozenset(prefs[car - 1] for car in lucky)
        acc.setdefault(spots, set()).add(outcome)
    return acc


def lucky_polynomial(n: int, *, cap: Optional[int] = None) -> list[int]:
    """Coefficient c_k = number of parking functions on [n] with exactly k
    lucky cars, found by brute force."""
    _check_cap(n**n, cap)
    coeffs = [0] * (n + 1)
    for prefs in itertools.product(range(1, n + 1), repeat=n):
        parked = park_classical(prefs, n)
        if parked is not None:
            coeffs[len(parked[1])] += 1
    return coeffs


# --- canonical JSON form ------------------------------------------------
#
# {"total": int,
#  "by_lucky_set": {"[1,4]": {"functions": int, "outcomes": [...]}, ...},
#  "by_k": {"2": {...}, ...}}
#
# An outcome is an array over spots: a car index or null for classical
# streets, an array of car indices or null for capacity streets.


def _outcome_doc(outcome):
    return [list(e) if isinstance(e, tuple) else e for e in outcome]

def _outcome_from_doc(doc):
    return tuple(tuple(e) if isinstance(e, list) else e for e in doc)


def _tally_doc(tally: Tally) -> dict:
    docs = [_outcome_doc(o) for o in tally.outcomes]
    docs.sort(key=lambda d: json.dumps(d))
    return {"functions": tally.functions, "outcomes": docs}


def census_to_doc(census: Census) -> dict:
    return {
        "total": census.total,
        "by_lucky_set": {
            json.dumps(sorted(lucky), separators=(",", ":")): _tally_doc(tally)
            for lucky, tally in census.by_lucky_set.items()
        },
        "by_k": {str(k): _tally_doc(tally) for k, tally in census.by_k.items()},
    }


def census_from_doc(doc: dict) -> Census:
    def tally(entry):
        return Tally(
            functions=entry["functions"],
            outcomes={_outcome_from_doc(o) for o in entry["outcomes"]},
        )

    return Census(
        total=doc["total"],
        by_lucky_set={
            frozenset(json.loads(key)): tally(entry)
            for key, entry in doc["by_lucky_set"].items()
        },
        by_k={int(k): tally(entry) for k, entry in doc["by_k"].items()},
    )


def census_to_json(census: Census) -> str:
    return json.dumps(census_to_doc(census), sort_keys=True, separators=(",", ":"))


def census_from_json(text: str) -> Census:
    return census_from_doc(json.loads(text))
