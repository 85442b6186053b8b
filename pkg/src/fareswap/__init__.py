"""Ticket-swap arbitrage detection for tree-shaped transit fare systems.

Build a network from stations and routes, attach a symmetric fare table,
then ask the engine where two overlapping journeys can profitably trade
endpoints.  Fare profiles and curvature classification explain why: the
gains live where the fare curve is concave.
"""

from .analysis import (
    CurvatureSegment,
    FareProfile,
    classify_segments,
    route_fare_profile,
    second_differences,
)
from .engine import (
    ArbitrageRecord,
    ArbitrageSummary,
    all_trips,
    brute_force_oracle,
    check_arbitrage_free,
    enumerate_arbitrage,
    summarize,
    swap_gain,
)
from .fares import (
    FareCurveModel,
    FareTable,
    Money,
    SyntheticTripGeometry,
    Zone,
    generate_fare_table,
    model_is_concave,
    parse_fare_table,
    serialize_fare_table,
)
from .network import (
    OverlapSegment,
    RouteDef,
    TransitNetwork,
    TreePath,
    TripKey,
    build_network,
    network_from_csv,
    parse_routes_csv,
    parse_stations_csv,
    path_overlap,
    render_routes_csv,
    render_stations_csv,
    swap_partition,
    tree_path,
)

__version__ = "0.1.0"

__all__ = [
    "ArbitrageRecord",
    "ArbitrageSummary",
    "CurvatureSegment",
    "FareCurveModel",
    "FareProfile",
    "FareTable",
    "Money",
    "OverlapSegment",
    "RouteDef",
    "SyntheticTripGeometry",
    "TransitNetwork",
    "TreePath",
    "TripKey",
    "Zone",
    "all_trips",
    "brute_force_oracle",
    "build_network",
    "check_arbitrage_free",
    "classify_segments",
    "enumerate_arbitrage",
    "generate_fare_table",
    "model_is_concave",
    "network_from_csv",
    "parse_fare_table",
    "parse_routes_csv",
    "parse_stations_csv",
    "path_overlap",
    "render_routes_csv",
    "render_stations_csv",
    "route_fare_profile",
    "second_differences",
    "serialize_fare_table",
    "summarize",
    "swap_gain",
    "swap_partition",
    "tree_path",
]
