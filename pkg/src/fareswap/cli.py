"""Command line front end: validate, enumerate, summary, pair, profile, synth.

Exit codes: 0 on success, 1 for usage problems (bad flags or synth
parameters), 2 for data problems (unreadable files, malformed CSV,
non-tree networks, incomplete fare tables, unknown stations).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import report
from .analysis import classify_segments, route_fare_profile
from .engine import ArbitrageSummary, enumerate_arbitrage, summarize, swap_gain
from .errors import FareswapError, InvalidZoneInterval, MalformedMoney, ProfileTooShort
from .fares import FareCurveModel, FareTable, Money, Zone, generate_fare_table, parse_fare_table, serialize_fare_table
from .network import RouteDef, TransitNetwork, TripKey, build_network, network_from_csv, render_routes_csv, render_stations_csv


class UsageError(Exception):
    """Bad command line; reported on stderr with exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit(2); we want 1
        raise UsageError(message)


@dataclass(frozen=True)
class RunConfig:
    """Everything a subcommand needs beyond its positionals."""

    stations: Optional[str] = None
    routes: Optional[str] = None
    fares: Optional[str] = None
    min_gain: Money = Money(5)
    thresholds: tuple[int, ...] = (5, 100)
    format: str = "text"
    out: Optional[str] = None
    tolerance: Money = Money(5)
    plot: Optional[str] = None


def _money_flag(text: str) -> Money:
    try:
        return Money.parse(text)
    except MalformedMoney as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _zone_flag(text: str) -> tuple[int, int, Money]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"zone must be lo:hi:surcharge, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"zone bounds must be integers, got {text!r}") from None
    return lo, hi, _money_flag(parts[2])


def _thresholds_flag(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"thresholds must be comma-separated cents, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("thresholds list is empty")
    return values


def _trip_token(text: str) -> TripKey:
    parts = text.split(":")
    if len(parts) != 2 or not parts[0] or not parts[1]:
        raise UsageError(f"trip must be origin:destination, got {text!r}")
    try:
        return TripKey(parts[0], parts[1])
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _load_network(config: RunConfig) -> TransitNetwork:
    stations = Path(config.stations).read_text(encoding="utf-8")
    routes = Path(config.routes).read_text(encoding="utf-8")
    return network_from_csv(stations, routes)


def _load_fares(config: RunConfig, net: TransitNetwork) -> FareTable:
    return parse_fare_table(Path(config.fares).read_text(encoding="utf-8"), net)


# --- subcommands ------------------------------------------------------------


def cmd_validate(config: RunConfig) -> int:
    net = _load_network(config)
    line = f"{len(net.stations)} stations, {len(net.edges)} edges"
    if config.fares:
        table = _load_fares(config, net)
        line += f", {len(table.fare)} fares"
    _emit(line + "\n", config.out)
    return 0


def cmd_enumerate(config: RunConfig) -> int:
    net = _load_network(config)
    fares = _load_fares(config, net)
    records = enumerate_arbitrage(net, fares, min_gain=config.min_gain)
    if config.format == "csv":
        _emit(report.records_csv(records), config.out)
    elif config.format == "json":
        n = len(net.stations)
        trips = n * (n - 1) // 2
        counts = {t: sum(1 for r in records if r.gain.cents >= t) for t in config.thresholds}
        summary = ArbitrageSummary(
            station_count=n,
            trip_count=trips,
            pair_count=trips * (trips - 1) // 2,
            pairs_ge_threshold=counts,
        )
        _emit(report.report_json(summary, records), config.out)
    else:
        _emit(report.records_text(records), config.out)
    if config.plot:
        from . import plots

        plots.save_gain_histogram(records, config.plot)
    return 0


def cmd_summary(config: RunConfig) -> int:
    net = _load_network(config)
    fares = _load_fares(config, net)
    summary = summarize(net, fares, thresholds=config.thresholds)
    if config.format == "csv":
        _emit(report.summary_csv(summary), config.out)
    elif config.format == "json":
        _emit(report.report_json(summary, []), config.out)
    else:
        _emit(report.summary_text(summary), config.out)
    return 0


def cmd_pair(config: RunConfig, trip1: TripKey, trip2: TripKey) -> int:
    net = _load_network(config)
    fares = _load_fares(config, net)
    result = swap_gain(net, fares, trip1, trip2)
    if result is None:
        if config.format == "json":
            _emit('{\n  "overlap": false\n}\n', config.out)
        else:
            _emit("no overlap\n", config.out)
        return 0
    gain, (s1, s2) = result
    fields = dict(
        trip1=str(trip1),
        trip2=str(trip2),
        fare1=fares.cents(trip1),
        fare2=fares.cents(trip2),
        swapped1=str(s1),
        swapped2=str(s2),
        sfare1=fares.cents(s1),
        sfare2=fares.cents(s2),
        gain=gain,
        percent=Fraction(100 * gain, fares.cents(trip1) + fares.cents(trip2)),
    )
    if config.format == "json":
        import json

        obj = report.pair_report_obj(**fields)
        obj["overlap"] = True
        _emit(json.dumps(obj, indent=2) + "\n", config.out)
    elif config.format == "csv":
        _emit(report.pair_report_csv(**fields), config.out)
    else:
        _emit(report.pair_report_text(**fields), config.out)
    return 0


def cmd_profile(config: RunConfig, origin: str, route: str) -> int:
    net = _load_network(config)
    fares = _load_fares(config, net)
    profile = route_fare_profile(net, fares, origin, route)
    try:
        segments = classify_segments(profile, tolerance=config.tolerance)
    except ProfileTooShort:
        segments = []
    if config.format == "csv":
        _emit(report.profile_csv(profile), config.out)
    elif config.format == "json":
        _emit(report.profile_json(profile, segments, config.tolerance.cents), config.out)
    else:
        body = report.profile_text(profile, segments)
        if not segments:
            body = report.profile_csv(profile) + "\n(too short to classify)\n"
        _emit(body, config.out)
    if config.plot:
        from . import plots

        plots.save_profile_figure(profile, segments, config.plot)
    return 0


def cmd_synth(config: RunConfig, model: FareCurveModel, n: int, out_dir: str) -> int:
    width = max(2, len(str(n)))
    ids = [f"s{i:0{width}d}" for i in range(1, n + 1)]
    stations = [(sid, f"Station {i}") for i, sid in enumerate(ids, start=1)]
    net = build_network(stations, [RouteDef(name="line", stations=tuple(ids))])
    table = generate_fare_table(model, net)

    target = Path(out_dir)
    target.mkdir(parents=True, exist_ok=True)
    written = []
    for name, text in (
        ("stations.csv", render_stations_csv(stations)),
        ("routes.csv", render_routes_csv(net.routes)),
        ("fares.csv", serialize_fare_table(table)),
    ):
        path = target / name
        path.write_text(text, encoding="utf-8")
        written.append(str(path))
    _emit("".join(f"wrote {p}\n" for p in written), config.out)
    return 0


# --- argument wiring ---------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="fareswap", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    data = argparse.ArgumentParser(add_help=False)
    data.add_argument("--stations", required=True, help="stations.csv path")
    data.add_argument("--routes", required=True, help="routes.csv path")

    fares_req = argparse.ArgumentParser(add_help=False)
    fares_req.add_argument("--fares", required=True, help="fare matrix csv path")

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--format", choices=("text", "csv", "json"), default="text")
    output.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("validate", parents=[data], help="load files and report counts")
    p.add_argument("--fares", default=None, help="optional fare matrix to validate too")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_run_validate)

    p = sub.add_parser("enumerate", parents=[data, fares_req, output], help="list profitable swaps")
    p.add_argument("--min-gain-cents", type=int, default=5)
    p.add_argument("--thresholds", type=_thresholds_flag, default=(5, 100))
    p.add_argument("--plot", default=None, help="also render a gain histogram to this image path")
    p.set_defaults(handler=_run_enumerate)

    p = sub.add_parser("summary", parents=[data, fares_req, output], help="instance counts and threshold shares")
    p.add_argument("--thresholds", type=_thresholds_flag, default=(5, 100))
    p.set_defaults(handler=_run_summary)

    p = sub.add_parser("pair", parents=[data, fares_req, output], help="evaluate one swap given two a:b trips")
    p.add_argument("trip1")
    p.add_argument("trip2")
    p.set_defaults(handler=_run_pair)

    p = sub.add_parser("profile", parents=[data, fares_req, output], help="fare profile along a route")
    p.add_argument("origin")
    p.add_argument("route")
    p.add_argument("--tolerance-cents", type=int, default=5)
    p.add_argument("--plot", default=None, help="also render the profile to this image path")
    p.set_defaults(handler=_run_profile)

    p = sub.add_parser("synth", help="generate a synthetic line network and fare table")
    p.add_argument("--model", required=True, choices=("flat", "affine", "power", "density"))
    p.add_argument("--n", type=int, required=True, help="number of stations on the line")
    p.add_argument("--c", type=_money_flag, default=None, help="base fare (flat/affine)")
    p.add_argument("--k", type=_money_flag, default=None, help="per-hop increment")
    p.add_argument("--a", type=_money_flag, default=None, help="power model scale")
    p.add_argument("--p", type=float, default=None, help="power model exponent")
    p.add_argument("--c0", type=_money_flag, default=None, help="density model base fare")
    p.add_argument("--zone", type=_zone_flag, action="append", default=[], help="lo:hi:surcharge, repeatable")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_run_synth)

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        stations=getattr(args, "stations", None),
        routes=getattr(args, "routes", None),
        fares=getattr(args, "fares", None),
        min_gain=Money(max(0, getattr(args, "min_gain_cents", 5))),
        thresholds=tuple(getattr(args, "thresholds", (5, 100))),
        format=getattr(args, "format", "text"),
        out=getattr(args, "out", None),
        tolerance=Money(max(0, getattr(args, "tolerance_cents", 5))),
        plot=getattr(args, "plot", None),
    )


def _run_validate(args: argparse.Namespace) -> int:
    return cmd_validate(_config_from(args))


def _run_enumerate(args: argparse.Namespace) -> int:
    return cmd_enumerate(_config_from(args))


def _run_summary(args: argparse.Namespace) -> int:
    return cmd_summary(_config_from(args))


def _run_pair(args: argparse.Namespace) -> int:
    return cmd_pair(_config_from(args), _trip_token(args.trip1), _trip_token(args.trip2))


def _run_profile(args: argparse.Namespace) -> int:
    return cmd_profile(_config_from(args), args.origin, args.route)


def _run_synth(args: argparse.Namespace) -> int:
    if args.n is None or args.n < 2:
        raise UsageError("synth needs --n >= 2")
    try:
        model = _model_from(args)
    except (ValueError, InvalidZoneInterval) as exc:
        raise UsageError(str(exc)) from None
    try:
        return cmd_synth(_config_from(args), model, args.n, args.out_dir)
    except InvalidZoneInterval as exc:
        raise UsageError(str(exc)) from None


def _model_from(args: argparse.Namespace) -> FareCurveModel:
    def need(flag: str, value):
        if value is None:
            raise UsageError(f"--model {args.model} requires --{flag}")
        return value

    if args.model == "flat":
        return FareCurveModel.flat(need("c", args.c))
    if args.model == "affine":
        return FareCurveModel.affine(need("c", args.c), need("k", args.k))
    if args.model == "power":
        return FareCurveModel.power(need("a", args.a), need("p", args.p))
    zones = tuple(Zone(lo, hi, surcharge) for lo, hi, surcharge in args.zone)
    return FareCurveModel.density_zone(need("c0", args.c0), need("k", args.k), zones)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except FareswapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
