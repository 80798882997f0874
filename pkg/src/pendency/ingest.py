"""Snapshot/strength file parsing, data-quality checks, windows, overrides.

CSV is the canonical interchange (one row per court per date); a JSON array
with identical field names is accepted as an alternate. Missing dates are
simply absent rows; nothing is imputed.
"""

from __future__ import annotations

import csv
import io
import json
import logging
from dataclasses import dataclass, field, replace
from datetime import date, timedelta
from enum import Enum
from pathlib import Path
from typing import IO, Mapping, Sequence

from .domain import CourtRecord, DataSource, SnapshotObservation, SnapshotSeries
from .errors import ConfigError, DomainError, InsufficientData, ParseError

logger = logging.getLogger(__name__)

SNAPSHOT_COLUMNS = (
    "date",
    "court_id",
    "pending_civil",
    "pending_criminal",
    "pending_writ",
    "pending_total",
    "filed_monthly",
    "disposed_monthly",
)
STRENGTH_COLUMNS = ("court_id", "name", "sanctioned", "working_avg")

# Sanity range for window dates; the portal did not exist before the 2000s.
_MIN_WINDOW_DATE = date(1990, 1, 1)
_MAX_WINDOW_DATE = date(2100, 1, 1)


@dataclass(frozen=True)
class WindowSpec:
    """Which slice of a series to analyze: everything, or a recent cut."""

    kind: str  # "full" | "since" | "last_n_days"
    since_date: date | None = None
    n_days: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "full":
            return
        if self.kind == "since":
            if self.since_date is None:
                raise DomainError("since window needs a date")
            if not _MIN_WINDOW_DATE <= self.since_date <= _MAX_WINDOW_DATE:
                raise DomainError(f"implausible window date {self.since_date}")
            return
        if self.kind == "last_n_days":
            if self.n_days is None or self.n_days < 2:
                raise DomainError("last_n_days window needs n >= 2")
            return
        raise DomainError(f"unknown window kind {self.kind!r}")

    @classmethod
    def full(cls) -> "WindowSpec":
        return cls("full")

    @classmethod
    def since(cls, d: date) -> "WindowSpec":
        return cls("since", since_date=d)

    @classmethod
    def last_n_days(cls, n: int) -> "WindowSpec":
        return cls("last_n_days", n_days=n)

    def to_json(self) -> dict:
        if self.kind == "since":
            return {"kind": "since", "date": self.since_date.isoformat()}
        if self.kind == "last_n_days":
            return {"kind": "last_n_days", "n": self.n_days}
        return {"kind": "full"}

    @classmethod
    def from_json(cls, obj: Mapping) -> "WindowSpec":
        kind = obj.get("kind")
        if kind == "full":
            return cls.full()
        if kind == "since":
            return cls.since(date.fromisoformat(obj["date"]))
        if kind == "last_n_days":
            return cls.last_n_days(int(obj["n"]))
        raise ConfigError(f"unknown window kind {kind!r}")

    def describe(self) -> str:
        if self.kind == "since":
            return f"since {self.since_date.isoformat()}"
        if self.kind == "last_n_days":
            return f"last {self.n_days} days"
        return "full"


@dataclass(frozen=True)
class OverrideEntry:
    """Manually sourced p0/rate for a court whose portal series is unusable."""

    court_id: str
    p0_override: float | None = None
    daily_rate_override: float | None = None
    reason: str = ""
    source: str = ""

    def __post_init__(self) -> None:
        if self.p0_override is None and self.daily_rate_override is None:
            raise DomainError(f"{self.court_id}: override sets no fields")


class Severity(str, Enum):
    PASS = "pass"
    WARN = "warn"
    ERROR = "error"


@dataclass(frozen=True)
class Finding:
    court_id: str
    date: date | None
    check: str
    severity: Severity
    detail: str

    def sort_key(self):
        return (self.court_id, self.date or date.min, self.check)


@dataclass(frozen=True)
class ValidationReport:
    """All findings for a dataset, deterministically ordered."""

    findings: tuple[Finding, ...]

    def counts(self) -> dict[str, int]:
        out = {s.value: 0 for s in Severity}
        for f in self.findings:
            out[f.severity.value] += 1
        return out

    def worst(self) -> Severity:
        sevs = {f.severity for f in self.findings}
        for s in (Severity.ERROR, Severity.WARN):
            if s in sevs:
                return s
        return Severity.PASS

    def to_text(self) -> str:
        lines = ["court_id,date,check,severity,detail"]
        for f in self.findings:
            d = f.date.isoformat() if f.date else ""
            lines.append(f"{f.court_id},{d},{f.check},{f.severity.value},{f.detail}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Dataset:
    """Parsed courts plus their snapshot series.

    ``provenance`` records where the data came from and is excluded from
    equality so that round-tripping through files compares clean.
    """

    courts: tuple[CourtRecord, ...]
    series: Mapping[str, SnapshotSeries]
    overrides: Mapping[str, OverrideEntry] = field(default_factory=dict)
    provenance: Mapping[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        ids = [c.court_id for c in self.courts]
        if len(ids) != len(set(ids)):
            dupes = sorted({i for i in ids if ids.count(i) > 1})
            raise DomainError(f"duplicate court ids: {', '.join(dupes)}")
        known = set(ids)
        missing = sorted(set(self.series) - known)
        if missing:
            raise DomainError(f"series without a court record: {', '.join(missing)}")

    @property
    def court_ids(self) -> list[str]:
        return sorted(c.court_id for c in self.courts)

    def court(self, court_id: str) -> CourtRecord:
        for c in self.courts:
            if c.court_id == court_id:
                return c
        raise ConfigError(f"unknown court {court_id!r}")

    def series_for(self, court_id: str) -> SnapshotSeries:
        return self.series.get(court_id, SnapshotSeries(court_id, ()))


def _to_text_stream(source: bytes | str | IO) -> IO[str]:
    if isinstance(source, bytes):
        return io.StringIO(source.decode("utf-8"))
    if isinstance(source, str):
        return io.StringIO(source)
    if hasattr(source, "read"):
        probe = source.read(0)
        if isinstance(probe, bytes):
            return io.TextIOWrapper(source, encoding="utf-8")
        return source
    raise ParseError(f"unsupported input type {type(source).__name__}")


def _parse_int(raw: str | None, column: str, line: int) -> int:
    if raw is None or raw.strip() == "":
        raise ParseError(f"column {column!r}: missing value", line)
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"column {column!r}: not an integer: {raw!r}", line) from None


def _parse_opt_int(raw: str | None, column: str, line: int) -> int | None:
    if raw is None or raw.strip() == "":
        return None
    return _parse_int(raw, column, line)


def _parse_date(raw: str, line: int) -> date:
    try:
        return date.fromisoformat(raw)
    except ValueError:
        raise ParseError(f"bad date {raw!r} (want YYYY-MM-DD)", line) from None


def parse_snapshot_csv(source: bytes | str | IO) -> Dataset:
    """Parse snapshot rows into a Dataset.

    Courts appear as stub records (name = id, strengths unknown) until
    strength data is attached. Unknown columns are ignored with a warning;
    a duplicate (court_id, date) pair is an error.
    """
    stream = _to_text_stream(source)
    reader = csv.DictReader(stream)
    if reader.fieldnames is None:
        raise ParseError("empty input: missing header row")
    header = [h.strip() for h in reader.fieldnames]
    missing = [c for c in SNAPSHOT_COLUMNS if c not in header]
    if missing:
        raise ParseError(f"missing required columns: {', '.join(missing)}", line=1)
    for extra in [h for h in header if h not in SNAPSHOT_COLUMNS]:
        logger.warning("snapshot input: ignoring unknown column %r", extra)

    rows: dict[str, dict[date, SnapshotObservation]] = {}
    for rec in reader:
        line = reader.line_num
        if rec.get(None):
            raise ParseError("row has more cells than the header", line)
        cid = (rec["court_id"] or "").strip()
        if not cid:
            raise ParseError("empty court_id", line)
        raw_date = rec.get("date")
        if raw_date is None or raw_date.strip() == "":
            raise ParseError("empty date", line)
        d = _parse_date(raw_date.strip(), line)
        obs = SnapshotObservation(
            date=d,
            pending_civil=_parse_int(rec["pending_civil"], "pending_civil", line),
            pending_criminal=_parse_int(
                rec["pending_criminal"], "pending_criminal", line
            ),
            pending_writ=_parse_int(rec["pending_writ"], "pending_writ", line),
            pending_total=_parse_int(rec["pending_total"], "pending_total", line),
            filed_monthly=_parse_opt_int(rec.get("filed_monthly"), "filed_monthly", line),
            disposed_monthly=_parse_opt_int(
                rec.get("disposed_monthly"), "disposed_monthly", line
            ),
        )
        per_court = rows.setdefault(cid, {})
        if d in per_court:
            raise ParseError(f"duplicate observation for ({cid}, {d})", line)
        per_court[d] = obs

    courts = tuple(
        CourtRecord(court_id=cid, name=cid) for cid in sorted(rows)
    )
    series = {
        cid: SnapshotSeries(cid, tuple(obs[d] for d in sorted(obs)))
        for cid, obs in rows.items()
    }
    return Dataset(courts=courts, series=series, provenance={"snapshots": "csv"})


def parse_snapshot_json(source: bytes | str | IO) -> Dataset:
    """JSON alternate: an array of row objects with the CSV field names."""
    text = _to_text_stream(source).read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, list):
        raise ParseError("expected a JSON array of row objects")
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(SNAPSHOT_COLUMNS))
    writer.writeheader()
    for row in payload:
        writer.writerow({c: ("" if row.get(c) is None else row.get(c)) for c in SNAPSHOT_COLUMNS})
    ds = parse_snapshot_csv(buf.getvalue())
    return replace(ds, provenance={"snapshots": "json"})


def serialize_snapshot_csv(ds: Dataset) -> str:
    """Inverse of parse_snapshot_csv; rows sorted by (court_id, date)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SNAPSHOT_COLUMNS)
    for cid in sorted(ds.series):
        for o in ds.series[cid].observations:
            writer.writerow(
                [
                    o.date.isoformat(),
                    cid,
                    o.pending_civil,
                    o.pending_criminal,
                    o.pending_writ,
                    o.pending_total,
                    "" if o.filed_monthly is None else o.filed_monthly,
                    "" if o.disposed_monthly is None else o.disposed_monthly,
                ]
            )
    return buf.getvalue()


def parse_strength_csv(source: bytes | str | IO) -> list[CourtRecord]:
    stream = _to_text_stream(source)
    reader = csv.DictReader(stream)
    if reader.fieldnames is None:
        raise ParseError("empty input: missing header row")
    missing = [c for c in STRENGTH_COLUMNS if c not in reader.fieldnames]
    if missing:
        raise ParseError(f"missing required columns: {', '.join(missing)}", line=1)
    records = []
    seen = set()
    for rec in reader:
        line = reader.line_num
        cid = (rec["court_id"] or "").strip()
        if not cid:
            raise ParseError("empty court_id", line)
        if cid in seen:
            raise ParseError(f"duplicate strength row for {cid}", line)
        seen.add(cid)
        try:
            sanctioned = float(rec["sanctioned"])
            working = float(rec["working_avg"])
        except (TypeError, ValueError):
            raise ParseError(f"bad strength numbers for {cid}", line) from None
        rec_obj = CourtRecord(
            court_id=cid,
            name=(rec["name"] or cid).strip(),
            sanctioned_strength=sanctioned,
            working_strength=working,
        )
        for warning in rec_obj.strength_warnings():
            logger.warning("strength input: %s", warning)
        records.append(rec_obj)
    return records


def attach_strength(ds: Dataset, records: Sequence[CourtRecord]) -> Dataset:
    """Replace stub court records with strength-bearing ones.

    Strength rows for courts absent from the snapshots are kept (a court may
    be covered only by overrides); snapshot courts without a strength row
    stay as stubs and will fail loudly if the pipeline needs their strength.
    """
    by_id = {r.court_id: r for r in records}
    merged = []
    for court in ds.courts:
        incoming = by_id.pop(court.court_id, None)
        merged.append(replace(incoming, data_source=court.data_source) if incoming else court)
    merged.extend(by_id[cid] for cid in sorted(by_id))
    return replace(ds, courts=tuple(merged))


def _sum_finding(
    label: str,
    civil: int,
    criminal: int,
    writ: int,
    total: int,
    *,
    court_id: str = "",
    on: date | None = None,
) -> Finding:
    components = civil + criminal + writ
    if components == total:
        return Finding(court_id, on, f"{label}_sum", Severity.PASS, "components match total")
    return Finding(
        court_id,
        on,
        f"{label}_sum",
        Severity.WARN,
        f"components sum to {components}, total says {total}, "
        f"discrepancy {components - total:+d}",
    )


def validate_component_sum(
    label: str, civil: int, criminal: int, writ: int, total: int
) -> Finding:
    """Check a civil+criminal+writ breakdown against its published total."""
    return _sum_finding(label, civil, criminal, writ, total)


def validate_snapshot(obs: SnapshotObservation) -> list[Finding]:
    """Data-quality findings for one row: sum check, sign check, pairing."""
    findings = [
        _sum_finding(
            "pending",
            obs.pending_civil,
            obs.pending_criminal,
            obs.pending_writ,
            obs.pending_total,
            on=obs.date,
        )
    ]

    negative = [
        name
        for name, value in (
            ("pending_civil", obs.pending_civil),
            ("pending_criminal", obs.pending_criminal),
            ("pending_writ", obs.pending_writ),
            ("pending_total", obs.pending_total),
            ("filed_monthly", obs.filed_monthly),
            ("disposed_monthly", obs.disposed_monthly),
        )
        if value is not None and value < 0
    ]
    findings.append(
        Finding(
            "",
            obs.date,
            "nonnegative",
            Severity.ERROR if negative else Severity.PASS,
            f"negative counts: {', '.join(negative)}" if negative else "all counts >= 0",
        )
    )

    pair_ok = (obs.filed_monthly is None) == (obs.disposed_monthly is None)
    findings.append(
        Finding(
            "",
            obs.date,
            "monthly_pair",
            Severity.PASS if pair_ok else Severity.WARN,
            "filed/disposed present together"
            if pair_ok
            else "only one of filed_monthly/disposed_monthly present",
        )
    )
    return findings


def validate_dataset(ds: Dataset) -> ValidationReport:
    findings: list[Finding] = []
    for cid in sorted(ds.series):
        for obs in ds.series[cid].observations:
            findings.extend(replace(f, court_id=cid) for f in validate_snapshot(obs))
    for court in ds.courts:
        for warning in court.strength_warnings():
            findings.append(
                Finding(court.court_id, None, "strength_range", Severity.WARN, warning)
            )
    return ValidationReport(tuple(sorted(findings, key=Finding.sort_key)))


def select_window(series: SnapshotSeries, spec: WindowSpec) -> SnapshotSeries:
    """Slice a series per the window spec; < 2 surviving points is an error."""
    if spec.kind == "full":
        kept = series.observations
    elif spec.kind == "since":
        kept = tuple(o for o in series.observations if o.date >= spec.since_date)
    else:  # last_n_days
        if series.observations:
            cutoff = series.observations[-1].date - timedelta(days=spec.n_days - 1)
            kept = tuple(o for o in series.observations if o.date >= cutoff)
        else:
            kept = ()
    if len(kept) < 2:
        raise InsufficientData(
            f"{series.court_id}: window {spec.describe()!r} keeps {len(kept)} "
            f"observation(s); need at least 2"
        )
    return SnapshotSeries(series.court_id, kept)


def apply_overrides(ds: Dataset, overrides: Sequence[OverrideEntry]) -> Dataset:
    """Register manual p0/rate values; overridden courts are re-sourced."""
    known = set(c.court_id for c in ds.courts)
    for entry in overrides:
        if entry.court_id not in known:
            raise ConfigError(f"override references unknown court {entry.court_id!r}")
    if not overrides:
        return ds
    by_id = {e.court_id: e for e in overrides}
    courts = tuple(
        replace(c, data_source=DataSource.EXTERNAL_OVERRIDE) if c.court_id in by_id else c
        for c in ds.courts
    )
    merged = dict(ds.overrides)
    merged.update(by_id)
    return replace(ds, courts=courts, overrides=merged)


def parse_overrides_json(source: bytes | str | IO) -> list[OverrideEntry]:
    text = _to_text_stream(source).read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, list):
        raise ParseError("overrides file must be a JSON array")
    entries = []
    for obj in payload:
        try:
            entries.append(
                OverrideEntry(
                    court_id=obj["court_id"],
                    p0_override=obj.get("p0_override"),
                    daily_rate_override=obj.get("daily_rate_override"),
                    reason=obj.get("reason", ""),
                    source=obj.get("source", ""),
                )
            )
        except KeyError as exc:
            raise ParseError(f"override entry missing {exc}") from None
    return entries


def parse_windows_json(source: bytes | str | IO) -> dict[str, WindowSpec]:
    text = _to_text_stream(source).read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(payload, dict):
        raise ParseError("windows file must map court_id to a window spec")
    return {cid: WindowSpec.from_json(spec) for cid, spec in sorted(payload.items())}


def load_dataset(
    snapshots: Path | str,
    strength: Path | str | None = None,
    overrides: Path | str | None = None,
    windows: Path | str | None = None,
) -> tuple[Dataset, dict[str, WindowSpec]]:
    """Assemble a Dataset (and window map) from files.

    Every court with a snapshot series must have a strength row; analysis
    needs the bench numbers, so a gap here is a configuration error.
    """
    snapshots = Path(snapshots)
    with snapshots.open("rb") as fh:
        if snapshots.suffix.lower() == ".json":
            ds = parse_snapshot_json(fh)
        else:
            ds = parse_snapshot_csv(fh)
    provenance = {"snapshots": str(snapshots)}

    if strength is not None:
        strength = Path(strength)
        with strength.open("rb") as fh:
            records = parse_strength_csv(fh)
        ds = attach_strength(ds, records)
        provenance["strength"] = str(strength)
        gaps = [
            c.court_id
            for c in ds.courts
            if c.court_id in ds.series and c.sanctioned_strength is None
        ]
        if gaps:
            raise ConfigError(
                f"no strength data for courts: {', '.join(sorted(gaps))}"
            )

    if overrides is not None:
        overrides = Path(overrides)
        with overrides.open("rb") as fh:
            ds = apply_overrides(ds, parse_overrides_json(fh))
        provenance["overrides"] = str(overrides)

    window_map: dict[str, WindowSpec] = {}
    if windows is not None:
        windows = Path(windows)
        with windows.open("rb") as fh:
            window_map = parse_windows_json(fh)
        provenance["windows"] = str(windows)

    return replace(ds, provenance=provenance), window_map
