"""Render fare profiles and gain distributions to image files.

Figures are an optional sidecar to the delimited reports: the CLI only
imports this module when a --plot path is given.  The Agg backend is
forced so rendering works headless.
"""

from __future__ import annotations

from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .analysis import CurvatureSegment, FareProfile
from .engine import ArbitrageRecord

_SEGMENT_COLOR = {"concave": "tab:blue", "convex": "tab:red", "linear": "0.6"}


def save_profile_figure(
    profile: FareProfile,
    segments: Sequence[CurvatureSegment],
    path: str,
) -> None:
    """Plot fare against stop count, shading each curvature segment."""
    stops = [s for s, _ in profile.points]
    fares = [m.cents / 100 for _, m in profile.points]

    fig, ax = plt.subplots(figsize=(8, 4.5))
    ax.plot(stops, fares, marker="o", color="black", linewidth=1.2, markersize=4)
    seen = set()
    for seg in segments:
        color = _SEGMENT_COLOR[seg.kind]
        label = seg.kind if seg.kind not in seen else None
        seen.add(seg.kind)
        ax.axvspan(seg.start - 0.5, seg.end + 0.5, color=color, alpha=0.15, label=label)
    ax.set_xlabel(f"stops from {profile.origin}")
    ax.set_ylabel("fare ($)")
    ax.set_title(f"Fares along {profile.route} from {profile.origin}")
    if seen:
        ax.legend(loc="lower right", fontsize="small")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_gain_histogram(records: Sequence[ArbitrageRecord], path: str) -> None:
    """Histogram of swap gains in dollars across all reported pairs."""
    fig, ax = plt.subplots(figsize=(8, 4.5))
    if records:
        gains = [r.gain.cents / 100 for r in records]
        ax.hist(gains, bins=min(40, max(10, len(set(gains)))), color="tab:blue", edgecolor="white")
    else:
        ax.text(0.5, 0.5, "no profitable swaps", ha="center", va="center", transform=ax.transAxes)
    ax.set_xlabel("gain ($)")
    ax.set_ylabel("trip pairs")
    ax.set_title("Swap gain distribution")
    ax.grid(True, alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
