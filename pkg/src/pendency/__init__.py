"""Court backlog forecasting and judge-staffing policy engine."""

from .domain import (
    DAYS_PER_YEAR,
    CourtRecord,
    DataSource,
    RatesBundle,
    SnapshotObservation,
    SnapshotSeries,
    annualize,
    disposal_rate_per_judge_day,
    load_ratio,
    vacancy,
)
from .errors import (
    ConfigError,
    DegenerateFit,
    DomainError,
    HorizonExceeded,
    Infeasible,
    InsufficientData,
    ParseError,
    PendencyError,
)
from .ingest import (
    Dataset,
    OverrideEntry,
    ValidationReport,
    WindowSpec,
    apply_overrides,
    load_dataset,
    parse_snapshot_csv,
    select_window,
    validate_dataset,
    validate_snapshot,
)
from .projection import (
    ClearanceOutcome,
    Scenario,
    StaffingSchedule,
    Trajectory,
    apply_disposal_floor,
    build_ramp,
    final_rate,
    project,
    run_years,
    years_to_clear,
)
from .report import PipelineConfig, ReportBundle, emit, run_pipeline
from .solver import (
    Binding,
    SolverRequest,
    SolverResult,
    Sufficiency,
    classify_sufficiency,
    judges_to_zero_rate,
    required_judges,
)
from .trend import PendencyTrend, RegressionFit, ols_fit, pendency_rate

__version__ = "0.1.0"
