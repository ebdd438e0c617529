"""Deterministic parking simulations and the lucky-car statistic.

Three processes share the drive-right rule: the classical one-car-per-spot
street, the (m, n) street with more spots than cars, and the capacity
street where spot i holds as many cars as i has multiplicity in a weakly
increasing vector u.  Cars and spots are both 1-indexed.  A car is *lucky*
when it parks exactly at its preferred spot.

Outcomes are plain tuples: a classical outcome is a tuple of car indices
with ``X`` (= None) marking vacant spots; a capacity outcome is a tuple of
blocks, each block a sorted tuple of the cars in that spot, with ``X``
marking spots of capacity zero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

# Marker for a vacant or capacity-zero spot.  None keeps outcomes hashable
# and serializes to JSON null.
X = None

Block = Optional[tuple[int, ...]]
BlockOutcome = tuple[Block, ...]
SlotOutcome = tuple[Optional[int], ...]
LuckySet = frozenset[int]


@dataclass(frozen=True)
class Street:
    """Spot capacities encoded by a weakly increasing vector u.

    The capacity of spot i is the number of times i occurs in u; spots
    absent from u hold no cars.  ``capacity[i]`` is that multiplicity
    (index 0 is unused) and ``max_spot`` is the last usable spot.
    """

    u: tuple[int, ...]
    max_spot: int = field(init=False, repr=False, compare=False)
    capacity: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        u = tuple(self.u)
        if not u:
            raise ValueError("capacity vector must be nonempty")
        if u[0] < 1 or any(a > b for a, b in zip(u, u[1:])):
            raise ValueError("capacity vector must be weakly increasing and positive")
        caps = [0] * (u[-1] + 1)
        for spot in u:
            caps[spot] += 1
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "max_spot", u[-1])
        object.__setattr__(self, "capacity", tuple(caps))

    @property
    def n_cars(self) -> int:
        return len(self.u)

    def spot_values(self) -> tuple[int, ...]:
        """Distinct usable spots u_1 < ... < u_r."""
        return tuple(dict.fromkeys(self.u))

    def multiplicities(self) -> tuple[int, ...]:
        """Capacities of the distinct usable spots, aligned with spot_values()."""
        return tuple(self.capacity[v] for v in self.spot_values())


def as_street(u) -> Street:
    return u if isinstance(u, Street) else Street(tuple(u))


def _check_prefs(prefs: Sequence[int]) -> None:
    if len(prefs) == 0:
        raise ValueError("preference vector must be nonempty")
    if min(prefs) < 1:
        raise ValueError("preferences must be >= 1")


def park_classical(
    prefs: Sequence[int], n_spots: int
) -> Optional[tuple[SlotOutcome, LuckySet]]:
    """Park cars with the given preferences on a street of n_spots spots.

    Returns (outcome, lucky set) when every car parks, None when some car
    drives past the end of the street.  Preferences beyond the street are
    allowed and simply fail to park.
    """
    _check_prefs(prefs)
    occupant: list[Optional[int]] = [X] * (n_spots + 1)
    lucky = []
    for car, a in enumerate(prefs, 1):
        s = a
        while s <= n_spots and occupant[s] is not X:
            s += 1
        if s > n_spots:
            return None
        occupant[s] = car
        if s == a:
            lucky.append(car)
    return tuple(occupant[1:]), frozenset(lucky)


def is_parking_function(prefs: Sequence[int], n_spots: int) -> bool:
    """True when every car parks; for len(prefs) == n_spots this is the
    classical sorted test a_(i) <= i."""
    return park_classical(prefs, n_spots) is not None


def _drive(street: Street, prefs: Sequence[int]):
    """Shared capacity-rule loop.

    Returns (spots per car, lucky cars, index of first car that failed or
    None).  On failure the first two entries cover the cars parked so far.
    """
    remaining = list(street.capacity)
    last = street.max_spot
    spots: list[int] = []
    lucky: list[int] = []
    for car, a in enumerate(prefs, 1):
        s = a
        while s <= last and not remaining[s]:
            s += 1
        if s > last:
            return spots, lucky, car
        remaining[s] -= 1
        spots.append(s)
        if s == a:
            lucky.append(car)
    return spots, lucky, None


def park_vector(u, prefs: Sequence[int]) -> Optional[tuple[BlockOutcome, LuckySet]]:
    """Park cars on a capacity street.

    Returns (block outcome, lucky set) when all cars park, None otherwise.
    Blocks list their cars in increasing order, which the arrival order
    already guarantees.
    """
    street = as_street(u)
    _check_prefs(prefs)
    if len(prefs) != street.n_cars:
        raise ValueError("need exactly as many cars as total capacity")
    spots, lucky, failed = _drive(street, prefs)
    if failed is not None:
        return None
    per_spot: list[Optional[list[int]]] = [
        [] if c else X for c in street.capacity[1:]
    ]
    for car, s in enumerate(spots, 1):
        per_spot[s - 1].append(car)
    blocks = tuple(X if b is X else tuple(b) for b in per_spot)
    return blocks, frozenset(lucky)


def first_failing_car(u, prefs: Sequence[int]) -> Optional[int]:
    """Index of the first car that cannot park, or None when all do."""
    street = as_street(u)
    _check_prefs(prefs)
    return _drive(street, prefs)[2]


def is_u_parking_function(u, prefs: Sequence[int]) -> bool:
    """Sorted characterization: the increasing rearrangement of prefs must
    stay entrywise at most u."""
    street = as_street(u)
    _check_prefs(prefs)
    if len(prefs) != street.n_cars:
        raise ValueError("need exactly as many cars as total capacity")
    return all(a <= b for a, b in zip(sorted(prefs), street.u))


def outcome_of(u, prefs: Sequence[int]) -> BlockOutcome:
    parked = park_vector(u, prefs)
    if parked is None:
        raise ValueError(f"{tuple(prefs)} is not a parking function for u={tuple(as_street(u).u)}")
    return parked[0]


def lucky_set_of(u, prefs: Sequence[int]) -> LuckySet:
    parked = park_vector(u, prefs)
    if parked is None:
        raise ValueError(f"{tuple(prefs)} is not a parking function for u={tuple(as_street(u).u)}")
    return parked[1]


def format_block_outcome(blocks: BlockOutcome) -> str:
    """Render a block outcome the way the street reads, e.g. 'X {1,4} {2,3}'."""
    return " ".join(
        "X" if b is X else "{%s}" % ",".join(map(str, b)) for b in blocks
    )


def format_slot_outcome(slots: SlotOutcome) -> str:
    """Render a classical outcome, e.g. '1423' or '12X' (commas past 9 cars)."""
    parts = ["X" if s is X else str(s) for s in slots]
    sep = "" if all(s is X or s <= 9 for s in slots) else ","
    return sep.join(parts)
