"""Text, CSV and JSON renderings of engine and profile results.

Formatting conventions live here and only here: money prints as D.CC
dollars, percentages round half-up to whole numbers, summary shares get
one decimal.  The engine keeps everything exact; this module is where
display rounding is allowed to happen.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction
from typing import Optional, Sequence

from .analysis import CurvatureSegment, FareProfile
from .engine import ArbitrageRecord, ArbitrageSummary


def dollars(cents: int) -> str:
    """Signed cents to a decimal dollar string: -125 -> '-1.25'."""
    sign = "-" if cents < 0 else ""
    cents = abs(cents)
    return f"{sign}{cents // 100}.{cents % 100:02d}"


def round_half_up(value: Fraction) -> int:
    """Round to the nearest integer with halves going up."""
    return math.floor(value + Fraction(1, 2))


def percent_display(percent: Fraction) -> int:
    return round_half_up(percent)


def share_1dp(count: int, total: int) -> str:
    """count/total as a percentage string with one half-up decimal."""
    if total == 0:
        return "0.0"
    tenths = round_half_up(Fraction(count * 1000, total))
    return f"{tenths // 10}.{tenths % 10}"


# --- arbitrage records ------------------------------------------------------


def records_text(records: Sequence[ArbitrageRecord]) -> str:
    """One tab-separated line per record: trips, gain, whole percent."""
    lines = [
        f"{r.trip1}\t{r.trip2}\t{r.gain.dollars()}\t{percent_display(r.percent)}"
        for r in records
    ]
    return "".join(line + "\n" for line in lines)


def records_csv(records: Sequence[ArbitrageRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["trip1", "trip2", "swapped1", "swapped2", "gain_cents", "gain_dollars", "percent"])
    for r in records:
        w.writerow(
            [
                str(r.trip1),
                str(r.trip2),
                str(r.swapped1),
                str(r.swapped2),
                r.gain.cents,
                r.gain.dollars(),
                percent_display(r.percent),
            ]
        )
    return buf.getvalue()


def record_obj(r: ArbitrageRecord) -> dict:
    return {
        "trip1": str(r.trip1),
        "trip2": str(r.trip2),
        "swapped1": str(r.swapped1),
        "swapped2": str(r.swapped2),
        "gain_cents": r.gain.cents,
        "gain": r.gain.dollars(),
        "percent": percent_display(r.percent),
    }


def summary_obj(s: ArbitrageSummary) -> dict:
    return {
        "stations": s.station_count,
        "trips": s.trip_count,
        "pairs": s.pair_count,
        "thresholds": [
            {
                "min_gain_cents": cents,
                "min_gain": dollars(cents),
                "count": count,
                "share_percent": float(share_1dp(count, s.pair_count)),
            }
            for cents, count in s.pairs_ge_threshold.items()
        ],
    }


def report_json(summary: Optional[ArbitrageSummary], records: Sequence[ArbitrageRecord]) -> str:
    payload = {
        "summary": summary_obj(summary) if summary is not None else None,
        "records": [record_obj(r) for r in records],
    }
    return json.dumps(payload, indent=2) + "\n"


def summary_text(s: ArbitrageSummary) -> str:
    lines = [
        f"stations: {s.station_count}",
        f"trips: {s.trip_count}",
        f"pairs: {s.pair_count}",
    ]
    for cents, count in s.pairs_ge_threshold.items():
        lines.append(f"pairs>={dollars(cents)}: {count} ({share_1dp(count, s.pair_count)}%)")
    return "".join(line + "\n" for line in lines)


def summary_csv(s: ArbitrageSummary) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["metric", "value"])
    w.writerow(["stations", s.station_count])
    w.writerow(["trips", s.trip_count])
    w.writerow(["pairs", s.pair_count])
    for cents, count in s.pairs_ge_threshold.items():
        w.writerow([f"pairs_ge_{cents}", count])
    return buf.getvalue()


# --- single pair ------------------------------------------------------------


def pair_report_text(
    trip1: str,
    trip2: str,
    fare1: int,
    fare2: int,
    swapped1: str,
    swapped2: str,
    sfare1: int,
    sfare2: int,
    gain: int,
    percent: Fraction,
) -> str:
    before = fare1 + fare2
    after = sfare1 + sfare2
    return (
        f"trip1    {trip1}  {dollars(fare1)}\n"
        f"trip2    {trip2}  {dollars(fare2)}\n"
        f"swapped1 {swapped1}  {dollars(sfare1)}\n"
        f"swapped2 {swapped2}  {dollars(sfare2)}\n"
        f"total    {dollars(before)} -> {dollars(after)}\n"
        f"gain     {dollars(gain)} ({percent_display(percent)}%)\n"
    )


def pair_report_csv(
    trip1: str,
    trip2: str,
    fare1: int,
    fare2: int,
    swapped1: str,
    swapped2: str,
    sfare1: int,
    sfare2: int,
    gain: int,
    percent: Fraction,
) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["trip1", "trip2", "swapped1", "swapped2", "gain_cents", "gain_dollars", "percent"])
    w.writerow([trip1, trip2, swapped1, swapped2, gain, dollars(gain), percent_display(percent)])
    return buf.getvalue()


def pair_report_obj(
    trip1: str,
    trip2: str,
    fare1: int,
    fare2: int,
    swapped1: str,
    swapped2: str,
    sfare1: int,
    sfare2: int,
    gain: int,
    percent: Fraction,
) -> dict:
    return {
        "trip1": trip1,
        "trip2": trip2,
        "fare1_cents": fare1,
        "fare2_cents": fare2,
        "swapped1": swapped1,
        "swapped2": swapped2,
        "swapped1_cents": sfare1,
        "swapped2_cents": sfare2,
        "gain_cents": gain,
        "gain": dollars(gain),
        "percent": percent_display(percent),
    }


# --- profiles ----------------------------------------------------------------


def profile_csv(profile: FareProfile) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["stops", "fare_dollars"])
    for stops, money in profile.points:
        w.writerow([stops, money.dollars()])
    return buf.getvalue()


def segments_text(segments: Sequence[CurvatureSegment]) -> str:
    lines = [
        f"stops {seg.start}..{seg.end}: {seg.kind} (max |d2| {seg.max_abs_dd}c)"
        for seg in segments
    ]
    return "".join(line + "\n" for line in lines)


def profile_text(profile: FareProfile, segments: Sequence[CurvatureSegment]) -> str:
    return profile_csv(profile) + "\n" + segments_text(segments)


def profile_obj(
    profile: FareProfile,
    segments: Sequence[CurvatureSegment],
    tolerance_cents: int,
) -> dict:
    return {
        "origin": profile.origin,
        "route": profile.route,
        "points": [
            {"stops": stops, "fare_cents": m.cents, "fare": m.dollars()}
            for stops, m in profile.points
        ],
        "tolerance_cents": tolerance_cents,
        "segments": [
            {"start": s.start, "end": s.end, "kind": s.kind, "max_abs_dd": s.max_abs_dd}
            for s in segments
        ],
    }


def profile_json(profile: FareProfile, segments: Sequence[CurvatureSegment], tolerance_cents: int) -> str:
    return json.dumps(profile_obj(profile, segments, tolerance_cents), indent=2) + "\n"
