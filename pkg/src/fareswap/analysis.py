"""Fare-versus-distance profiles along one route, and their curvature.

Plotting fare against stop count shows where a tariff bends: sublinear
stretches (negative second differences) are exactly where long trips get
cheap per hop and ticket swapping starts to pay.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import OriginNotOnRoute, ProfileTooShort
from .fares import FareTable, Money
from .network import TransitNetwork, TripKey


@dataclass(frozen=True)
class FareProfile:
    """Fares from one origin to each later stop of a route, in order."""

    origin: str
    route: str
    points: tuple[tuple[int, Money], ...]

    def fares_cents(self) -> list[int]:
        return [m.cents for _, m in self.points]


@dataclass(frozen=True, slots=True)
class CurvatureSegment:
    """Maximal run of interior stops sharing one curvature label.

    start and end are stop indices into the profile (inclusive); kind is
    concave, convex or linear; max_abs_dd is the largest |second
    difference| seen inside the run, in cents.
    """

    start: int
    end: int
    kind: str
    max_abs_dd: int


def route_fare_profile(
    net: TransitNetwork,
    fares: FareTable,
    origin: str,
    route_name: str,
) -> FareProfile:
    """Fares from origin to each subsequent station of the named route.

    The profile runs onward in route order.  An origin that is the final
    stop has nothing onward, so the walk turns around; anywhere else the
    stations before the origin are simply not part of this profile.
    """
    route = net.route_named(route_name)
    if origin not in route.stations:
        raise OriginNotOnRoute(f"{origin!r} is not a stop of route {route_name!r}")
    at = route.stations.index(origin)
    onward = route.stations[at + 1 :]
    if not onward:
        onward = tuple(reversed(route.stations[:at]))
    points = tuple(
        (stops, Money(fares.cents(TripKey(origin, station))))
        for stops, station in enumerate(onward, start=1)
    )
    return FareProfile(origin=origin, route=route_name, points=points)


def second_differences(profile: FareProfile) -> list[int]:
    """Exact integer second differences at the profile's interior stops.

    Entry i of the result belongs to stop index i + 2 of the profile
    (the first interior stop).  Needs at least three points.
    """
    fares = profile.fares_cents()
    if len(fares) < 3:
        raise ProfileTooShort(f"need at least 3 profile points, got {len(fares)}")
    return [fares[i + 1] - 2 * fares[i] + fares[i - 1] for i in range(1, len(fares) - 1)]


def classify_segments(
    profile: FareProfile,
    tolerance: Union[Money, int] = Money(5),
) -> list[CurvatureSegment]:
    """Partition the profile interior into curvature segments.

    Second differences within +-tolerance cents count as linear; beyond
    it the sign decides concave versus convex.  Adjacent stops with the
    same label merge, so consecutive segments always differ in kind.
    """
    tol = tolerance.cents if isinstance(tolerance, Money) else int(tolerance)
    if tol < 0:
        raise ValueError("tolerance must be >= 0 cents")
    dd = second_differences(profile)

    def label(d: int) -> str:
        if abs(d) <= tol:
            return "linear"
        return "concave" if d < 0 else "convex"

    segments: list[CurvatureSegment] = []
    run_start = 2
    run_kind = label(dd[0])
    run_peak = abs(dd[0])
    for offset, d in enumerate(dd[1:], start=1):
        stop = offset + 2
        kind = label(d)
        if kind == run_kind:
            run_peak = max(run_peak, abs(d))
            continue
        segments.append(CurvatureSegment(start=run_start, end=stop - 1, kind=run_kind, max_abs_dd=run_peak))
        run_start, run_kind, run_peak = stop, kind, abs(d)
    segments.append(
        CurvatureSegment(start=run_start, end=len(dd) + 1, kind=run_kind, max_abs_dd=run_peak)
    )
    return segments
