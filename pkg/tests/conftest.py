"""Shared fixtures: tiny golden networks, random trees, random fares."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from fareswap import (
    FareTable,
    Money,
    RouteDef,
    TransitNetwork,
    TripKey,
    all_trips,
    build_network,
    network_from_csv,
)

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


def line_network(ids, name="line") -> TransitNetwork:
    stations = [(sid, sid.replace("-", " ").title()) for sid in ids]
    return build_network(stations, [RouteDef(name, tuple(ids))])


def numbered_line(n: int, name="line") -> TransitNetwork:
    width = max(2, len(str(n)))
    return line_network([f"s{i:0{width}d}" for i in range(1, n + 1)], name=name)


def random_tree(rng: random.Random, n: int) -> TransitNetwork:
    """Random attachment tree: station i hangs off a uniform earlier one."""
    ids = [f"n{i:02d}" for i in range(n)]
    routes = [
        RouteDef(f"e{i:02d}", (ids[rng.randrange(i)], ids[i]))
        for i in range(1, n)
    ]
    return build_network([(s, s.upper()) for s in ids], routes)


def random_fares(rng: random.Random, net: TransitNetwork, lo=100, hi=999) -> FareTable:
    fare = {t: Money(rng.randint(lo, hi)) for t in all_trips(net)}
    return FareTable(stations=net.stations, fare=fare)


SF_STATIONS_CSV = """id,name
millbrae,Millbrae
glen-park,Glen Park
embarcadero,Embarcadero
berkeley,Downtown Berkeley
"""

SF_ROUTES_CSV = """name,stations
main,millbrae|glen-park|embarcadero|berkeley
"""

# the two queried fares plus swap targets are real; the fillers are not
SF_FARES_CSV = """,millbrae,glen-park,embarcadero,berkeley
millbrae,,3.00,4.50,5.10
glen-park,3.00,,1.85,4.20
embarcadero,4.50,1.85,,3.50
berkeley,5.10,4.20,3.50,
"""

DC_STATIONS_CSV = """id,name
vienna,Vienna
rosslyn,Rosslyn
metro-center,Metro Center
new-carrollton,New Carrollton
"""

DC_ROUTES_CSV = """name,stations
orange,vienna|rosslyn|metro-center|new-carrollton
"""

DC_FARES_CSV = """,vienna,rosslyn,metro-center,new-carrollton
vienna,,2.50,5.30,5.75
rosslyn,2.50,,2.10,4.90
metro-center,5.30,2.10,,3.00
new-carrollton,5.75,4.90,3.00,
"""


def write_sf_fixture(directory: Path) -> dict[str, Path]:
    return _write_fixture(directory, SF_STATIONS_CSV, SF_ROUTES_CSV, SF_FARES_CSV)


def write_dc_fixture(directory: Path) -> dict[str, Path]:
    return _write_fixture(directory, DC_STATIONS_CSV, DC_ROUTES_CSV, DC_FARES_CSV)


def _write_fixture(directory: Path, stations: str, routes: str, fares: str) -> dict[str, Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = {
        "stations": directory / "stations.csv",
        "routes": directory / "routes.csv",
        "fares": directory / "fares.csv",
    }
    paths["stations"].write_text(stations)
    paths["routes"].write_text(routes)
    paths["fares"].write_text(fares)
    return paths


@pytest.fixture
def sf_mini():
    from fareswap import parse_fare_table

    net = network_from_csv(SF_STATIONS_CSV, SF_ROUTES_CSV)
    return net, parse_fare_table(SF_FARES_CSV, net)


@pytest.fixture
def dc_mini():
    from fareswap import parse_fare_table

    net = network_from_csv(DC_STATIONS_CSV, DC_ROUTES_CSV)
    return net, parse_fare_table(DC_FARES_CSV, net)


@pytest.fixture(scope="session")
def big_network() -> TransitNetwork:
    return network_from_csv(
        (DATA_DIR / "bart-2014" / "stations.csv").read_text(),
        (DATA_DIR / "bart-2014" / "routes.csv").read_text(),
    )
