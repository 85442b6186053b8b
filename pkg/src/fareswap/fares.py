"""Fare tables and the synthetic fare curves used to generate them.

All money is integer cents.  Tables are symmetric: a fare belongs to an
unordered station pair, and the matrix form on disk must agree with its
mirror image.  Diagonal cells are optional round-trip (excursion) fares
kept separately from the pair fares.
"""

from __future__ import annotations

import csv
import io
import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    AsymmetricFare,
    DuplicateStation,
    InvalidZoneInterval,
    MalformedCsv,
    MalformedMoney,
    MissingPair,
    UnknownStation,
    ZoneOnNonLineNetwork,
)
from .network import TransitNetwork, TripKey

_MONEY = re.compile(r"^(\d+)(?:\.(\d{1,2}))?$")


@dataclass(frozen=True, slots=True, order=True)
class Money:
    """Non-negative amount in integer cents."""

    cents: int

    def __post_init__(self) -> None:
        if self.cents < 0:
            raise MalformedMoney(f"money cannot be negative: {self.cents} cents")

    @classmethod
    def parse(cls, text: str) -> "Money":
        """Parse a decimal dollar string with at most two decimals."""
        m = _MONEY.match(text.strip())
        if not m:
            raise MalformedMoney(f"bad money value {text!r}")
        whole, frac = m.group(1), m.group(2) or ""
        return cls(int(whole) * 100 + int(frac.ljust(2, "0") or 0))

    def dollars(self) -> str:
        return f"{self.cents // 100}.{self.cents % 100:02d}"

    def __str__(self) -> str:
        return self.dollars()


@dataclass(frozen=True)
class FareTable:
    """Complete symmetric fare lookup for one network.

    fare maps every unordered station pair to its price; excursion holds
    the optional same-station round-trip fares from the matrix diagonal.
    Completeness is enforced by the constructors in this module, not by
    the dataclass itself.
    """

    stations: tuple[str, ...]
    fare: Mapping[TripKey, Money]
    excursion: Mapping[str, Money] = field(default_factory=dict)

    def cents(self, trip: TripKey) -> int:
        got = self.fare.get(trip)
        if got is None:
            raise UnknownStation(f"no fare for {trip}")
        return got.cents

    def cents_map(self) -> dict[tuple[str, str], int]:
        """Plain-tuple view of the table for hot enumeration loops."""
        return {(t.a, t.b): m.cents for t, m in self.fare.items()}


@dataclass(frozen=True)
class Zone(object):
    """Surcharge zone on a line: station positions lo..hi inclusive.

    Positions are 0-based offsets along the line's single route.  The
    surcharge is collected once per trip whose path crosses the zone
    boundary, i.e. touches stations both inside and outside the zone.
    """

    lo: int
    hi: int
    surcharge: Money

    def __post_init__(self) -> None:
        if self.lo < 0 or self.lo > self.hi:
            raise InvalidZoneInterval(f"zone interval {self.lo}..{self.hi} is reversed or negative")

    def crossed_by(self, p_lo: int, p_hi: int) -> bool:
        touches = not (self.hi < p_lo or self.lo > p_hi)
        inside = self.lo <= p_lo and p_hi <= self.hi
        return touches and not inside


@dataclass(frozen=True)
class FareCurveModel:
    """Parametric fare-versus-distance curve.

    kind is one of flat, affine, power, density-zone.  Use the class
    methods rather than the raw constructor; they keep the parameter
    soup straight (density-zone reuses c as its base fare c0).
    """

    kind: str
    c: Money = Money(0)
    k: Money = Money(0)
    a: Money = Money(0)
    p: float = 1.0
    zones: tuple[Zone, ...] = ()

    _KINDS = ("flat", "affine", "power", "density-zone")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError(f"unknown model kind {self.kind!r}")
        if self.p <= 0:
            raise ValueError(f"power exponent must be positive, got {self.p}")

    @classmethod
    def flat(cls, c: Money) -> "FareCurveModel":
        return cls(kind="flat", c=c)

    @classmethod
    def affine(cls, c: Money, k: Money) -> "FareCurveModel":
        return cls(kind="affine", c=c, k=k)

    @classmethod
    def power(cls, a: Money, p: float) -> "FareCurveModel":
        return cls(kind="power", a=a, p=p)

    @classmethod
    def density_zone(cls, c0: Money, k: Money, zones: Sequence[Zone]) -> "FareCurveModel":
        return cls(kind="density-zone", c=c0, k=k, zones=tuple(zones))

    def fare_at(self, hops: int) -> int:
        """Fare in cents for a journey of the given hop count.

        density-zone has no pure distance law, so its curve is anchored
        at the start of the line: fare_at(h) prices the path covering
        positions 0..h.
        """
        if hops < 0:
            raise ValueError("hops must be >= 0")
        if self.kind == "flat":
            return self.c.cents
        if self.kind == "affine":
            return self.c.cents + self.k.cents * hops
        if self.kind == "power":
            if hops == 0:
                return 0
            return _round_half_up(self.a.cents * hops**self.p)
        total = self.c.cents + self.k.cents * hops
        for z in self.zones:
            if z.crossed_by(0, hops):
                total += z.surcharge.cents
        return total


def _round_half_up(x: float) -> int:
    return math.floor(x + 0.5)


@dataclass(frozen=True, slots=True)
class SyntheticTripGeometry:
    """Hop lengths of an overlapping trip pair: x, y with o shared hops.

    Swapping turns lengths (x, y) into (x + y - o, o); the constraint
    y >= x >= o >= 1 pins which trip is which.
    """

    x: int
    y: int
    o: int

    def __post_init__(self) -> None:
        if not (1 <= self.o <= self.x <= self.y):
            raise ValueError(f"need y >= x >= o >= 1, got x={self.x} y={self.y} o={self.o}")

    @property
    def swapped(self) -> tuple[int, int]:
        return self.x + self.y - self.o, self.o


# --- matrix file format ----------------------------------------------------


def parse_fare_table(text: str, net: TransitNetwork) -> FareTable:
    """Parse a symmetric fare matrix and check it covers every pair.

    The header row starts with an empty cell, then station ids; each
    following row is a station id plus decimal-dollar cells.  Blank
    off-diagonal cells fall back to their mirror cell; a pair missing
    from both raises MissingPair, disagreeing mirrors AsymmetricFare.
    """
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or not rows[0] or rows[0][0].strip() != "":
        raise MalformedCsv("fare matrix must start with an empty header cell")
    header = [c.strip() for c in rows[0][1:]]
    seen_cols = set()
    for sid in header:
        if sid not in net.names:
            raise UnknownStation(f"fare matrix header names unknown station {sid!r}")
        if sid in seen_cols:
            raise DuplicateStation(f"fare matrix header repeats {sid!r}")
        seen_cols.add(sid)

    cells: dict[tuple[str, str], int] = {}
    excursion: dict[str, Money] = {}
    seen_rows = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or all(not c.strip() for c in row):
            continue
        rid = row[0].strip()
        if rid not in net.names:
            raise UnknownStation(f"fare matrix row names unknown station {rid!r}")
        if rid in seen_rows:
            raise DuplicateStation(f"fare matrix repeats row {rid!r}")
        seen_rows.add(rid)
        if len(row) - 1 > len(header):
            raise MalformedCsv(f"fare matrix line {lineno}: more cells than header columns")
        for col, raw in zip(header, row[1:]):
            raw = raw.strip()
            if not raw:
                continue
            try:
                money = Money.parse(raw)
            except MalformedMoney as exc:
                raise MalformedMoney(f"line {lineno}, column {col!r}: {exc}") from None
            if col == rid:
                excursion[rid] = money
            else:
                cells[(rid, col)] = money.cents

    fare: dict[TripKey, Money] = {}
    stations = net.stations
    for i, x in enumerate(stations):
        for y in stations[i + 1 :]:
            forward = cells.get((x, y))
            backward = cells.get((y, x))
            if forward is None and backward is None:
                raise MissingPair(f"no fare for pair {x!r}/{y!r}")
            if forward is not None and backward is not None and forward != backward:
                raise AsymmetricFare(f"fare {x!r}->{y!r} is {forward} cents but mirror is {backward}")
            fare[TripKey(x, y)] = Money(forward if forward is not None else backward)

    table_order = tuple(header) if set(header) == set(stations) else stations
    return FareTable(stations=table_order, fare=fare, excursion=excursion)


def serialize_fare_table(table: FareTable) -> str:
    """Render the table back to matrix CSV; inverse of parse_fare_table."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(table.stations))
    for rid in table.stations:
        row = [rid]
        for col in table.stations:
            if col == rid:
                exc = table.excursion.get(rid)
                row.append(exc.dollars() if exc is not None else "")
            else:
                row.append(table.fare[TripKey(rid, col)].dollars())
        w.writerow(row)
    return buf.getvalue()


# --- synthetic generation ---------------------------------------------------


def _all_pair_hops(net: TransitNetwork) -> dict[tuple[str, str], int]:
    """Hop distance for every unordered pair, by BFS from each station."""
    hops: dict[tuple[str, str], int] = {}
    for start in net.stations:
        dist = {start: 0}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            for nxt in net.adjacency[cur]:
                if nxt not in dist:
                    dist[nxt] = dist[cur] + 1
                    queue.append(nxt)
        for other, d in dist.items():
            if start < other:
                hops[(start, other)] = d
    return hops


def generate_fare_table(model: FareCurveModel, net: TransitNetwork) -> FareTable:
    """Price every station pair of the network under the given curve.

    flat/affine/power work on any tree.  density-zone needs the network
    to be a single line route so zone intervals have a meaning; zones
    must also fit within that line.
    """
    if model.kind == "density-zone":
        return _generate_density_zone(model, net)
    fare = {
        TripKey(x, y): Money(model.fare_at(d))
        for (x, y), d in _all_pair_hops(net).items()
    }
    return FareTable(stations=net.stations, fare=fare)


def _generate_density_zone(model: FareCurveModel, net: TransitNetwork) -> FareTable:
    if len(net.routes) != 1 or len(net.routes[0].stations) != len(net.stations):
        raise ZoneOnNonLineNetwork("density-zone fares need a network that is one single line route")
    line = net.routes[0].stations
    top = len(line) - 1
    for z in model.zones:
        if z.hi > top:
            raise InvalidZoneInterval(f"zone {z.lo}..{z.hi} runs past the last station index {top}")

    pos = {s: i for i, s in enumerate(line)}
    fare: dict[TripKey, Money] = {}
    for i, x in enumerate(line):
        for y in line[i + 1 :]:
            p_lo, p_hi = sorted((pos[x], pos[y]))
            total = model.c.cents + model.k.cents * (p_hi - p_lo)
            total += sum(z.surcharge.cents for z in model.zones if z.crossed_by(p_lo, p_hi))
            fare[TripKey(x, y)] = Money(total)
    return FareTable(stations=net.stations, fare=fare)


def model_is_concave(model: FareCurveModel, max_hops: int) -> str:
    """Classify the curve over 0..max_hops as concave/convex/linear/mixed.

    Signs of the exact integer second differences decide it, with no
    tolerance: any strictly negative one pushes toward concave, any
    strictly positive one toward convex, both at once means mixed.
    """
    if max_hops < 2:
        raise ValueError("classification needs max_hops >= 2")
    values = [model.fare_at(h) for h in range(max_hops + 1)]
    dd = [values[i + 1] - 2 * values[i] + values[i - 1] for i in range(1, max_hops)]
    has_neg = any(d < 0 for d in dd)
    has_pos = any(d > 0 for d in dd)
    if has_neg and has_pos:
        return "mixed"
    if has_neg:
        return "concave"
    if has_pos:
        return "convex"
    return "linear"
