"""Tree-shaped transit networks: stations, routes, paths, overlaps, swaps.

Every network here must be a tree (connected, acyclic), so any two
stations are joined by exactly one simple path.  That uniqueness is what
makes ticket swapping well defined: two overlapping journeys share one
contiguous segment and can trade their far endpoints across it.
"""

from __future__ import annotations

import csv
import io
import re
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    DuplicateRoute,
    DuplicateStation,
    GraphNotTree,
    InvalidStationId,
    MalformedCsv,
    UnknownStation,
    UnknownStationInRoute,
)

_SLUG = re.compile(r"^[a-z0-9-]+$")


def validate_station_id(token: str) -> str:
    """Return the id unchanged if it is a lowercase slug, else raise."""
    if not _SLUG.match(token):
        raise InvalidStationId(f"bad station id {token!r}: expected [a-z0-9-]+")
    return token


@dataclass(frozen=True, slots=True)
class TripKey:
    """Unordered station pair, stored with a < b so it can key tables."""

    a: str
    b: str

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise ValueError(f"trip endpoints must differ, got {self.a!r} twice")
        if self.a > self.b:
            # canonicalize: callers may pass endpoints in travel order
            a, b = self.b, self.a
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)

    def __str__(self) -> str:
        return f"{self.a}->{self.b}"


@dataclass(frozen=True)
class RouteDef:
    """A named line given as the ordered stations it visits."""

    name: str
    stations: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "stations", tuple(self.stations))
        if len(self.stations) < 2:
            raise MalformedCsv(f"route {self.name!r} needs at least 2 stations")
        seen = set()
        for s in self.stations:
            if s in seen:
                raise DuplicateStation(f"route {self.name!r} repeats station {s!r}")
            seen.add(s)


@dataclass(frozen=True)
class TreePath:
    """The unique simple path between two stations, in travel order."""

    stations: tuple[str, ...]

    @property
    def hops(self) -> int:
        return len(self.stations) - 1

    @property
    def trip(self) -> TripKey:
        return TripKey(self.stations[0], self.stations[-1])


@dataclass(frozen=True)
class OverlapSegment:
    """Contiguous segment two paths share, with endpoint side assignments.

    u and v are the segment ends in lexicographic order.  side_map tells,
    for each trip, which of its endpoints hangs off the u end and which
    off the v end; an endpoint that sits exactly on u or v counts as
    being on that side.
    """

    u: str
    v: str
    shared_hops: int
    side_map: Mapping[TripKey, tuple[str, str]]


@dataclass(frozen=True)
class TransitNetwork:
    """Validated station graph plus the routes it was built from."""

    stations: tuple[str, ...]
    names: Mapping[str, str]
    edges: frozenset[tuple[str, str]]
    routes: tuple[RouteDef, ...]
    adjacency: Mapping[str, tuple[str, ...]]

    @property
    def station_count(self) -> int:
        return len(self.stations)

    def route_named(self, name: str) -> RouteDef:
        for r in self.routes:
            if r.name == name:
                return r
        from .errors import UnknownRoute

        raise UnknownRoute(f"no route named {name!r}")


def build_network(
    stations: Iterable[tuple[str, str]],
    routes: Iterable[RouteDef],
) -> TransitNetwork:
    """Assemble and validate a network from station and route definitions.

    Raises DuplicateStation, UnknownStationInRoute or GraphNotTree when
    the inputs do not describe a tree over uniquely-named stations.
    """
    names: dict[str, str] = {}
    for sid, display in stations:
        validate_station_id(sid)
        if sid in names:
            raise DuplicateStation(f"station {sid!r} declared twice")
        names[sid] = display

    route_list = tuple(routes)
    route_names = set()
    for r in route_list:
        if r.name in route_names:
            raise DuplicateRoute(f"route {r.name!r} declared twice")
        route_names.add(r.name)
        for s in r.stations:
            if s not in names:
                raise UnknownStationInRoute(f"route {r.name!r} uses unknown station {s!r}")

    edges: set[tuple[str, str]] = set()
    for r in route_list:
        for x, y in zip(r.stations, r.stations[1:]):
            edges.add((x, y) if x < y else (y, x))

    ordered = tuple(sorted(names))
    n = len(ordered)
    if len(edges) != n - 1:
        raise GraphNotTree(f"{len(edges)} edges over {n} stations: union of routes must be acyclic")

    adjacency: dict[str, list[str]] = {s: [] for s in ordered}
    for x, y in edges:
        adjacency[x].append(y)
        adjacency[y].append(x)

    if n > 0:
        seen = {ordered[0]}
        queue = deque([ordered[0]])
        while queue:
            cur = queue.popleft()
            for nxt in adjacency[cur]:
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        if len(seen) != n:
            missing = sorted(set(ordered) - seen)
            raise GraphNotTree(f"network is disconnected: {missing[0]!r} unreachable from {ordered[0]!r}")

    return TransitNetwork(
        stations=ordered,
        names=names,
        edges=frozenset(edges),
        routes=route_list,
        adjacency={s: tuple(sorted(nb)) for s, nb in adjacency.items()},
    )


def tree_path(net: TransitNetwork, trip: TripKey) -> TreePath:
    """Find the unique path from trip.a to trip.b by breadth-first search."""
    for endpoint in (trip.a, trip.b):
        if endpoint not in net.names:
            raise UnknownStation(f"station {endpoint!r} not in network")
    start, goal = trip.a, trip.b
    parent: dict[str, str] = {start: start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            break
        for nxt in net.adjacency[cur]:
            if nxt not in parent:
                parent[nxt] = cur
                queue.append(nxt)
    back = [goal]
    while back[-1] != start:
        back.append(parent[back[-1]])
    return TreePath(stations=tuple(reversed(back)))


def path_overlap(p1: TreePath, p2: TreePath) -> Optional[OverlapSegment]:
    """Shared segment of two paths, or None when they share no edge.

    Sharing a single station is not an overlap: a swap needs at least
    one common edge to trade across.
    """
    set2 = set(p2.stations)
    shared = [s for s in p1.stations if s in set2]
    if len(shared) < 2:
        return None

    pos1 = {s: i for i, s in enumerate(p1.stations)}
    pos2 = {s: i for i, s in enumerate(p2.stations)}
    lo1 = min(pos1[s] for s in shared)
    hi1 = max(pos1[s] for s in shared)
    lo2 = min(pos2[s] for s in shared)
    hi2 = max(pos2[s] for s in shared)
    # on a tree the shared stations are a contiguous run in both paths
    if hi1 - lo1 != len(shared) - 1 or hi2 - lo2 != len(shared) - 1:
        raise AssertionError("path intersection is not contiguous: network is not a tree")

    end_a, end_b = p1.stations[lo1], p1.stations[hi1]
    u, v = (end_a, end_b) if end_a < end_b else (end_b, end_a)

    def sides(path: TreePath) -> tuple[str, str]:
        pos = {s: i for i, s in enumerate(path.stations)}
        if pos[u] < pos[v]:
            return path.stations[0], path.stations[-1]
        return path.stations[-1], path.stations[0]

    side_map = {p1.trip: sides(p1), p2.trip: sides(p2)}
    return OverlapSegment(u=u, v=v, shared_hops=len(shared) - 1, side_map=side_map)


def swap_partition(t1: TripKey, t2: TripKey, overlap: OverlapSegment) -> tuple[TripKey, TripKey]:
    """Recombine two overlapping trips by trading endpoints across the segment.

    Each new trip pairs one trip's u-side endpoint with the other trip's
    v-side endpoint, so both still traverse the whole shared segment.
    """
    u1, v1 = overlap.side_map[t1]
    u2, v2 = overlap.side_map[t2]
    return TripKey(u1, v2), TripKey(u2, v1)


# --- file formats ---------------------------------------------------------
#
# stations.csv  header `id,name`, one station per row
# routes.csv    header `name,stations`, stations joined by `|`


def parse_stations_csv(text: str) -> list[tuple[str, str]]:
    """Read station rows from `id,name` CSV text."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["id", "name"]:
        raise MalformedCsv("stations csv must start with header 'id,name'")
    out = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 2:
            raise MalformedCsv(f"stations csv line {lineno}: expected 2 cells, got {len(row)}")
        out.append((row[0].strip(), row[1].strip()))
    return out


def parse_routes_csv(text: str) -> list[RouteDef]:
    """Read route rows from `name,stations` CSV text ('|'-separated ids)."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or [c.strip() for c in rows[0]] != ["name", "stations"]:
        raise MalformedCsv("routes csv must start with header 'name,stations'")
    out = []
    for lineno, row in enumerate(rows[1:], start=2):
        if not row:
            continue
        if len(row) != 2:
            raise MalformedCsv(f"routes csv line {lineno}: expected 2 cells, got {len(row)}")
        stations = tuple(s.strip() for s in row[1].split("|") if s.strip())
        out.append(RouteDef(name=row[0].strip(), stations=stations))
    return out


def render_stations_csv(stations: Sequence[tuple[str, str]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "name"])
    w.writerows(stations)
    return buf.getvalue()


def render_routes_csv(routes: Sequence[RouteDef]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "stations"])
    for r in routes:
        w.writerow([r.name, "|".join(r.stations)])
    return buf.getvalue()


def network_from_csv(stations_text: str, routes_text: str) -> TransitNetwork:
    """Parse both CSV files and build the validated network."""
    return build_network(parse_stations_csv(stations_text), parse_routes_csv(routes_text))
