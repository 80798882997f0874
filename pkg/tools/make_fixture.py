#!/usr/bin/env python3
"""Generate the bundled synthetic 24-court fixture under data/.

Deterministic (fixed RNG seed). Produces:
    snapshots.csv   weekly pendency snapshots per court, 2017-08-31..2020-03-22
    strength.csv    sanctioned and average working judge strength
    overrides.json  manual p0/rate overrides for the two unreliable-portal courts
    windows.json    per-court analysis window (full history vs recent-only)

Court identities and bench strengths follow the published high-court roster;
the time series themselves are synthetic (the portal archive is not
redistributable). Courts whose full history is marked unreliable get a level
shift before October 2019 so that only the recent window fits cleanly.

Run from the repository root:  python3 tools/make_fixture.py
"""

from __future__ import annotations

import csv
import json
import random
from datetime import date, timedelta
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parent.parent / "data"

FIRST_DAY = date(2017, 8, 31)
LAST_DAY = date(2020, 3, 22)
RECENT_CUTOFF = date(2019, 10, 1)

# court_id, name, sanctioned, working, p0 at LAST_DAY, trend (cases/day),
# target disposal (cases/judge/day), window kind
COURTS = [
    ("AL", "Allahabad",            160, 102, 700000,  30.0, 3.0, "full"),
    ("BO", "Bombay",                94,  69, 265000,  20.0, 4.0, "full"),
    ("CA", "Calcutta",              72,  39, 250000,  35.0, 3.5, "full"),
    ("CH", "Chhattisgarh",          22,  15,  75000,   5.0, 1.5, "full"),
    ("DL", "Delhi",                 60,  37,  90000,  10.0, 2.2, "full"),
    ("GA", "Gauhati",               24,  19,  50000,   4.0, 1.4, "full"),
    ("GU", "Gujarat",               52,  28, 110000,   8.0, 1.8, "full"),
    ("HP", "Himachal Pradesh",      13,   9,  70000,   3.5, 1.3, "full"),
    ("JK", "Jammu and Kashmir",     17,   9,  70000,   6.0, 1.5, "since"),
    ("JH", "Jharkhand",             25,  19,  80000,  -3.0, 1.5, "since"),
    ("KA", "Karnataka",             62,  33, 280000,  20.0, 2.2, "full"),
    ("KE", "Kerala",                47,  34, 140000,  12.0, 2.6, "full"),
    ("MP", "Madhya Pradesh",        53,  33, 220000,  18.0, 2.4, "full"),
    ("MA", "Madras",                75,  58, 400000,  28.0, 2.0, "full"),
    ("MN", "Manipur",                5,   4,   4500,   0.1, 0.9, "since"),
    ("ME", "Meghalaya",              4,   2,   1200,   0.2, 0.8, "full"),
    ("OR", "Orissa",                27,  14, 160000,   7.0, 1.2, "since"),
    ("PA", "Patna",                 53,  29, 150000,   9.0, 1.6, "full"),
    ("PH", "Punjab and Haryana",    85,  52, 600000,  80.0, 2.0, "full"),
    ("RJ", "Rajasthan",             50,  25, 484350,  45.0, 2.8, "full"),
    ("SI", "Sikkim",                 3,   3,    234,  -0.2, 0.9, "since"),
    ("TA", "Telangana and Andhra",  61,  27, 350000,  25.0, 2.5, "full"),
    ("TR", "Tripura",                4,   3,   2500,  -0.8, 1.2, "since"),
    ("UT", "Uttarakhand",           11,   9,  45000,   1.5, 1.0, "since"),
]

# Courts whose snapshot series is deliberately broken; analysis values come
# from overrides.json instead (external sources).
OVERRIDES = [
    {
        "court_id": "BO",
        "p0_override": 265000,
        "daily_rate_override": 20.0,
        "reason": "portal pendency updated only once during collection",
        "source": "supreme court annual report",
    },
    {
        "court_id": "CA",
        "p0_override": 250000,
        "daily_rate_override": 35.0,
        "reason": "portal pendency inconsistent with court's own published figures",
        "source": "calcutta high court website",
    },
]


def sample_dates() -> list[date]:
    dates = []
    d = FIRST_DAY
    while d < LAST_DAY:
        dates.append(d)
        d += timedelta(days=7)
    dates.append(LAST_DAY)
    return dates


def split_pending(total: int) -> tuple[int, int, int]:
    civil = total * 45 // 100
    criminal = total * 25 // 100
    return civil, criminal, total - civil - criminal


def main() -> None:
    rng = random.Random(20200322)
    OUT_DIR.mkdir(exist_ok=True)
    dates = sample_dates()

    rows = []
    strength_rows = []
    windows: dict[str, dict] = {}
    for cid, name, sanctioned, working, p0, rate, d_daily, window in COURTS:
        strength_rows.append([cid, name, sanctioned, working])
        windows[cid] = (
            {"kind": "full"}
            if window == "full"
            else {"kind": "since", "date": RECENT_CUTOFF.isoformat()}
        )
        disposed = round(d_daily * 30 * working)
        filed = max(0, round(disposed + rate * 30))
        noise_amp = max(3.0, 0.002 * abs(p0))
        for day in dates:
            offset = (day - LAST_DAY).days
            if cid == "BO":
                # updated once, then never again
                total = 464000
            elif cid == "CA":
                # wrong scale entirely, plus jitter
                total = 45000 + round(rng.uniform(-800, 800))
            else:
                level = p0 + rate * offset
                if window == "since" and day < RECENT_CUTOFF:
                    # pre-reconciliation artifacts: shifted level, extra churn
                    level += 0.15 * p0 + rng.uniform(-4 * noise_amp, 4 * noise_amp)
                noise = 0.0 if day == LAST_DAY else rng.uniform(-noise_amp, noise_amp)
                total = max(0, round(level + noise))
            civil, criminal, writ = split_pending(total)
            rows.append(
                [day.isoformat(), cid, civil, criminal, writ, total, filed, disposed]
            )

    rows.sort(key=lambda r: (r[1], r[0]))
    with (OUT_DIR / "snapshots.csv").open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(
            [
                "date",
                "court_id",
                "pending_civil",
                "pending_criminal",
                "pending_writ",
                "pending_total",
                "filed_monthly",
                "disposed_monthly",
            ]
        )
        w.writerows(rows)

    with (OUT_DIR / "strength.csv").open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["court_id", "name", "sanctioned", "working_avg"])
        w.writerows(sorted(strength_rows))

    with (OUT_DIR / "overrides.json").open("w") as fh:
        json.dump(OVERRIDES, fh, indent=2, sort_keys=True)
        fh.write("\n")

    with (OUT_DIR / "windows.json").open("w") as fh:
        json.dump(windows, fh, indent=2, sort_keys=True)
        fh.write("\n")

    # Single portal-wide aggregate snapshot row (all-courts totals), kept as a
    # separate tiny fixture for ingestion tests.
    with (OUT_DIR / "njdg_portal_snapshot.csv").open("w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(
            [
                "date",
                "court_id",
                "pending_civil",
                "pending_criminal",
                "pending_writ",
                "pending_total",
                "filed_monthly",
                "disposed_monthly",
            ]
        )
        w.writerow(
            ["2018-08-20", "AGG", 1506780, 769754, 1114448, 3390982, 102063, 111996]
        )

    print(f"wrote fixture for {len(COURTS)} courts, {len(dates)} dates -> {OUT_DIR}")


if __name__ == "__main__":
    main()
