#!/usr/bin/env python3
"""Independent oracle for the bundled fixture's report numbers.

Recomputes every report column by brute force, deliberately avoiding the
engine's code paths:

  * trend slope via numpy.polyfit (lstsq), not the closed-form estimator
  * years-to-clear via a plain year loop over the backlog recurrence
  * required judges via upward linear search over integer strengths
  * zero-rate judges via upward linear search

Writes data/expected_report.json. Run once, check the output in; the test
suite compares the engine against this file and must never regenerate it
from engine results.

Run from the repository root:  python3 tools/report_oracle.py
"""

from __future__ import annotations

import csv
import json
import math
from datetime import date, timedelta
from pathlib import Path

import numpy as np

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
DAYS_PER_YEAR = 360.0
EPOCH = date(1970, 1, 1)

RAMP_YEARS = (10, 20)
SOLVE_YEARS = (5, 15)
YEAR_CAP = 1_000_000


def load_rows() -> dict[str, list[dict]]:
    per_court: dict[str, list[dict]] = {}
    with (DATA_DIR / "snapshots.csv").open() as fh:
        for row in csv.DictReader(fh):
            per_court.setdefault(row["court_id"], []).append(
                {
                    "date": date.fromisoformat(row["date"]),
                    "pending": int(row["pending_total"]),
                    "disposed": int(row["disposed_monthly"]) if row["disposed_monthly"] else None,
                }
            )
    for rows in per_court.values():
        rows.sort(key=lambda r: r["date"])
    return per_court


def load_strength() -> dict[str, dict]:
    out = {}
    with (DATA_DIR / "strength.csv").open() as fh:
        for row in csv.DictReader(fh):
            out[row["court_id"]] = {
                "name": row["name"],
                "sanctioned": float(row["sanctioned"]),
                "working": float(row["working_avg"]),
            }
    return out


def apply_window(rows: list[dict], spec: dict) -> list[dict]:
    if spec["kind"] == "full":
        return rows
    if spec["kind"] == "since":
        cutoff = date.fromisoformat(spec["date"])
        return [r for r in rows if r["date"] >= cutoff]
    if spec["kind"] == "last_n_days":
        cutoff = rows[-1]["date"] - timedelta(days=spec["n"] - 1)
        return [r for r in rows if r["date"] >= cutoff]
    raise ValueError(spec)


def ramp_strength(w0: float, target: float, ramp_years: int, t: int) -> float:
    if ramp_years <= 0:
        return w0 if t == 0 else target
    if t >= ramp_years:
        return target
    return w0 + (target - w0) * t / ramp_years


def years_to_clear(p0, r0, d, w0, target, ramp_years) -> int | None:
    """Plain loop over p_t = p_{t-1} + r_{t-1}; r_t = r_{t-1} - d*(w_t - w_{t-1})."""
    if p0 <= 0:
        return 0
    settle = ramp_years if ramp_years >= 1 else (0 if target == w0 else 1)
    p, r = p0, r0
    w_prev = ramp_strength(w0, target, ramp_years, 0)
    t = 0
    while True:
        t += 1
        w_t = ramp_strength(w0, target, ramp_years, t)
        p = p + r
        r = r - d * (w_t - w_prev)
        w_prev = w_t
        if p <= 0:
            return t
        if t >= settle and r >= 0:
            return None
        if t > YEAR_CAP:
            raise RuntimeError("year cap exceeded")


def clears_within(p0, r0, d, w0, target, years) -> bool:
    p, r = p0, r0
    w_prev = ramp_strength(w0, target, years, 0)
    for t in range(1, years + 1):
        w_t = ramp_strength(w0, target, years, t)
        p = p + r
        r = r - d * (w_t - w_prev)
        w_prev = w_t
    return p <= 0


def required_judges(p0, r0, d, w0, floor, years) -> tuple[int, str]:
    n = 0
    while not clears_within(p0, r0, d, w0, n, years):
        n += 1
        if n > 100_000:
            raise RuntimeError("search cap exceeded")
    required = max(n, math.ceil(floor))
    return required, ("floored_at_sanctioned" if math.ceil(floor) > n else "computed")


def zero_rate_judges(r_yearly: float, d_yearly: float) -> int:
    k = 0
    while r_yearly - d_yearly * k > 0:
        k += 1
        if k > 100_000:
            raise RuntimeError("search cap exceeded")
    return k


def main() -> None:
    per_court = load_rows()
    strength = load_strength()
    windows = json.loads((DATA_DIR / "windows.json").read_text())
    overrides = {
        o["court_id"]: o for o in json.loads((DATA_DIR / "overrides.json").read_text())
    }

    report_rows = []
    for cid in sorted(per_court):
        info = strength[cid]
        rows = apply_window(per_court[cid], windows.get(cid, {"kind": "full"}))
        override = overrides.get(cid)

        if override and override.get("daily_rate_override") is not None:
            rate_daily = float(override["daily_rate_override"])
        else:
            xs = np.array([(r["date"] - EPOCH).days for r in rows], dtype=float)
            ys = np.array([r["pending"] for r in rows], dtype=float)
            rate_daily = float(np.polyfit(xs, ys, 1)[0])

        if override and override.get("p0_override") is not None:
            p0 = float(override["p0_override"])
        else:
            p0 = float(rows[-1]["pending"])

        disposal = [r["disposed"] for r in rows if r["disposed"] is not None]
        d_daily = (sum(disposal) / len(disposal)) / 30.0 / info["working"] if disposal else 0.0

        r0 = rate_daily * DAYS_PER_YEAR
        d_year = d_daily * DAYS_PER_YEAR
        w0 = info["working"]
        sanctioned = info["sanctioned"]

        years = {
            y: years_to_clear(p0, r0, d_year, w0, sanctioned, y) for y in RAMP_YEARS
        }
        judges = {y: required_judges(p0, r0, d_year, w0, sanctioned, y) for y in SOLVE_YEARS}
        delta = zero_rate_judges(r0, d_year)

        report_rows.append(
            {
                "court_id": cid,
                "name": info["name"],
                "sanctioned": sanctioned,
                "working": w0,
                "p0": p0,
                "rate_daily": rate_daily,
                "d_daily": d_daily,
                "load_ratio": p0 / w0,
                "years_10y_ramp": years[10],
                "years_20y_ramp": years[20],
                "judges_5y": judges[5][0],
                "judges_5y_binding": judges[5][1],
                "judges_15y": judges[15][0],
                "judges_15y_binding": judges[15][1],
                "zero_rate_delta": delta,
                "zero_rate_within_vacancy": delta <= sanctioned - w0,
            }
        )

    clearing_10 = [r["years_10y_ramp"] for r in report_rows if r["years_10y_ramp"] is not None]
    clearing_20 = [r["years_20y_ramp"] for r in report_rows if r["years_20y_ramp"] is not None]
    aggregates = {
        "mean_years_10y_ramp": sum(clearing_10) / len(clearing_10),
        "mean_years_20y_ramp": sum(clearing_20) / len(clearing_20),
        "never_clears_count": sum(1 for r in report_rows if r["years_10y_ramp"] is None),
        "totals": {
            "judges_5y": sum(r["judges_5y"] for r in report_rows),
            "judges_15y": sum(r["judges_15y"] for r in report_rows),
            "sanctioned": sum(r["sanctioned"] for r in report_rows),
            "working": sum(r["working"] for r in report_rows),
        },
    }

    out = {"rows": report_rows, "aggregates": aggregates}
    with (DATA_DIR / "expected_report.json").open("w") as fh:
        json.dump(out, fh, indent=2, sort_keys=True)
        fh.write("\n")
    print(
        f"oracle: {len(report_rows)} courts, "
        f"{aggregates['never_clears_count']} never clear -> expected_report.json"
    )


if __name__ == "__main__":
    main()
