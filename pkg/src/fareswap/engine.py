"""Exhaustive search for profitable ticket swaps over a fare table.

A swap opportunity is an unordered pair of trips whose paths share at
least one edge and whose combined fare exceeds the combined fare of the
endpoint-swapped pair.  Each opportunity is reported once, oriented so
the original pair is the one that pays more; the reverse orientation is
the same opportunity seen from the other side.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from .errors import InstanceTooLarge
from .fares import FareTable, Money
from .network import (
    TransitNetwork,
    TripKey,
    path_overlap,
    swap_partition,
    tree_path,
)

# past this the literal oracle's all-pairs path scanning stops being cheap
ORACLE_MAX_STATIONS = 12

Gain = Union[Money, int]


@dataclass(frozen=True, slots=True)
class ArbitrageRecord:
    """One profitable swap: who pays now, who would pay after, the win.

    percent is the exact fraction of the original combined fare that the
    gain represents; rounding to a display integer happens at rendering
    time only.
    """

    trip1: TripKey
    trip2: TripKey
    swapped1: TripKey
    swapped2: TripKey
    gain: Money
    percent: Fraction


@dataclass(frozen=True)
class ArbitrageSummary:
    """Instance-level counts from one full enumeration."""

    station_count: int
    trip_count: int
    pair_count: int
    pairs_ge_threshold: Mapping[int, int]


def _cents(amount: Gain) -> int:
    return amount.cents if isinstance(amount, Money) else int(amount)


def all_trips(net: TransitNetwork) -> list[TripKey]:
    """Every unordered station pair, in lexicographic order."""
    return [TripKey(a, b) for a, b in itertools.combinations(net.stations, 2)]


def swap_gain(
    net: TransitNetwork,
    fares: FareTable,
    t1: TripKey,
    t2: TripKey,
) -> Optional[tuple[int, tuple[TripKey, TripKey]]]:
    """Gain in cents of swapping t1 with t2, or None if they never meet.

    The gain is signed: negative means the swap would cost more, which
    is the same opportunity oriented the other way round.
    """
    if t1 == t2:
        raise ValueError("swap needs two distinct trips")
    overlap = path_overlap(tree_path(net, t1), tree_path(net, t2))
    if overlap is None:
        return None
    s1, s2 = swap_partition(t1, t2, overlap)
    if (s2.a, s2.b) < (s1.a, s1.b):
        s1, s2 = s2, s1
    gain = fares.cents(t1) + fares.cents(t2) - fares.cents(s1) - fares.cents(s2)
    return gain, (s1, s2)


def enumerate_arbitrage(
    net: TransitNetwork,
    fares: FareTable,
    min_gain: Gain = Money(1),
) -> list[ArbitrageRecord]:
    """All profitable swaps with gain >= min_gain, best first.

    Scans every unordered pair of trips, so roughly n^4/4 pair checks
    for n stations; fine into the tens of thousands of pairs per edge
    list this size.  Output order is total: gain descending, then the
    trip pair lexicographically, so runs are byte-reproducible no
    matter how the scan is scheduled.
    """
    floor = max(1, _cents(min_gain))
    trips = all_trips(net)
    cmap = fares.cents_map()

    paths = []
    for t in trips:
        stations = tree_path(net, t).stations
        paths.append((stations, {s: i for i, s in enumerate(stations)}, frozenset(stations)))

    fare_of = [cmap[(t.a, t.b)] for t in trips]
    hits: list[tuple[int, int, int, tuple[str, str], tuple[str, str]]] = []
    for i in range(len(trips)):
        p1, pos1, set1 = paths[i]
        a1, b1 = p1[0], p1[-1]
        f1 = fare_of[i]
        for j in range(i + 1, len(trips)):
            p2, pos2, set2 = paths[j]
            shared = set1 & set2
            if len(shared) < 2:
                continue
            spots = [pos1[s] for s in shared]
            u = p1[min(spots)]
            v = p1[max(spots)]
            # a1 sits on the u side by construction; orient trip 2 to match
            if pos2[u] < pos2[v]:
                a2, b2 = p2[0], p2[-1]
            else:
                a2, b2 = p2[-1], p2[0]
            k1 = (a1, b2) if a1 < b2 else (b2, a1)
            k2 = (a2, b1) if a2 < b1 else (b1, a2)
            gain = f1 + fare_of[j] - cmap[k1] - cmap[k2]
            if gain >= floor:
                hits.append((gain, i, j, k1, k2))

    records = []
    for gain, i, j, k1, k2 in hits:
        lo, hi = sorted((k1, k2))
        records.append(
            ArbitrageRecord(
                trip1=trips[i],
                trip2=trips[j],
                swapped1=TripKey(*lo),
                swapped2=TripKey(*hi),
                gain=Money(gain),
                percent=Fraction(100 * gain, fare_of[i] + fare_of[j]),
            )
        )
    records.sort(key=_record_order)
    return records


def _record_order(r: ArbitrageRecord) -> tuple:
    return (-r.gain.cents, r.trip1.a, r.trip1.b, r.trip2.a, r.trip2.b)


def brute_force_oracle(
    net: TransitNetwork,
    fares: FareTable,
    min_gain: Gain = Money(1),
) -> list[ArbitrageRecord]:
    """Same answer as enumerate_arbitrage, found the most literal way.

    Paths come from a fresh depth-first walk, overlaps from scanning the
    explicit station lists, and contiguity is checked rather than
    assumed.  Deliberately shares no logic with the fast path; capped at
    ORACLE_MAX_STATIONS stations to stay honest about its cost.
    """
    if net.station_count > ORACLE_MAX_STATIONS:
        raise InstanceTooLarge(
            f"oracle handles at most {ORACLE_MAX_STATIONS} stations, got {net.station_count}"
        )
    floor = max(1, _cents(min_gain))
    trips = [(a, b) for a, b in itertools.combinations(net.stations, 2)]
    walked = {t: _walk(net, *t) for t in trips}

    records = []
    for t1, t2 in itertools.combinations(trips, 2):
        p1, p2 = walked[t1], walked[t2]
        common = [s for s in p1 if s in p2]
        if len(common) < 2:
            continue
        i0 = p1.index(common[0])
        if p1[i0 : i0 + len(common)] != common:
            raise AssertionError(f"shared stations of {t1} and {t2} not contiguous in first path")
        spots2 = sorted(p2.index(s) for s in common)
        if spots2 != list(range(spots2[0], spots2[0] + len(common))):
            raise AssertionError(f"shared stations of {t1} and {t2} not contiguous in second path")

        head, tail = common[0], common[-1]
        near1, far1 = p1[0], p1[-1]
        if p2.index(head) < p2.index(tail):
            near2, far2 = p2[0], p2[-1]
        else:
            near2, far2 = p2[-1], p2[0]
        n1 = TripKey(near1, far2)
        n2 = TripKey(near2, far1)
        gain = (
            fares.cents(TripKey(*t1))
            + fares.cents(TripKey(*t2))
            - fares.cents(n1)
            - fares.cents(n2)
        )
        if gain < floor:
            continue
        lo, hi = sorted(((n1.a, n1.b), (n2.a, n2.b)))
        records.append(
            ArbitrageRecord(
                trip1=TripKey(*t1),
                trip2=TripKey(*t2),
                swapped1=TripKey(*lo),
                swapped2=TripKey(*hi),
                gain=Money(gain),
                percent=Fraction(
                    100 * gain, fares.cents(TripKey(*t1)) + fares.cents(TripKey(*t2))
                ),
            )
        )
    records.sort(key=_record_order)
    return records


def _walk(net: TransitNetwork, a: str, b: str) -> list[str]:
    """Depth-first hunt for the one simple path from a to b."""
    stack: list[tuple[str, list[str]]] = [(a, [a])]
    while stack:
        cur, path = stack.pop()
        if cur == b:
            return path
        for nxt in reversed(net.adjacency[cur]):
            if nxt not in path:
                stack.append((nxt, path + [nxt]))
    raise AssertionError(f"no path from {a!r} to {b!r}")


def summarize(
    net: TransitNetwork,
    fares: FareTable,
    thresholds: Sequence[Gain],
) -> ArbitrageSummary:
    """Instance counts plus how many swaps clear each gain threshold."""
    records = enumerate_arbitrage(net, fares, min_gain=1)
    n = net.station_count
    trip_count = n * (n - 1) // 2
    counts = {}
    for t in thresholds:
        cents = _cents(t)
        counts[cents] = sum(1 for r in records if r.gain.cents >= cents)
    return ArbitrageSummary(
        station_count=n,
        trip_count=trip_count,
        pair_count=trip_count * (trip_count - 1) // 2,
        pairs_ge_threshold=counts,
    )


def check_arbitrage_free(net: TransitNetwork, fares: FareTable) -> Optional[ArbitrageRecord]:
    """None if no profitable swap exists, else the best counterexample."""
    records = enumerate_arbitrage(net, fares, min_gain=1)
    return records[0] if records else None
