"""HTTP/JSON facade for what-if scenario evaluation.

The dataset is loaded once at startup and never mutated; every response is a
pure function of (dataset, request), so concurrent requests need no
coordination. Endpoint results match the corresponding library calls exactly.
"""

from __future__ import annotations

from contextlib import asynccontextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Literal, Mapping

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .domain import annualize
from .errors import Infeasible, PendencyError
from .ingest import WindowSpec, load_dataset
from .projection import (
    Scenario,
    apply_disposal_floor,
    build_ramp,
    final_rate,
    project,
)
from .report import court_rates
from .solver import SolverRequest, required_judges


@dataclass(frozen=True)
class CourtInputs:
    """Per-court numbers precomputed at load time."""

    court_id: str
    name: str
    sanctioned: float
    working: float
    p0: float
    rate_daily: float
    d_daily: float


@dataclass(frozen=True)
class ServiceState:
    courts: tuple[CourtInputs, ...]

    def court(self, court_id: str) -> CourtInputs | None:
        for c in self.courts:
            if c.court_id == court_id:
                return c
        return None


def state_from_files(paths: Mapping[str, Path | None]) -> ServiceState:
    ds, windows = load_dataset(
        paths["snapshots"], paths["strength"], paths.get("overrides"), paths.get("windows")
    )
    courts = []
    for cid in ds.court_ids:
        court, trend, d_daily = court_rates(ds, cid, windows.get(cid, WindowSpec.full()))
        courts.append(
            CourtInputs(
                court_id=cid,
                name=court.name,
                sanctioned=court.sanctioned_strength,
                working=court.working_strength,
                p0=trend.p0,
                rate_daily=trend.daily_rate,
                d_daily=d_daily,
            )
        )
    return ServiceState(courts=tuple(courts))


class ScenarioRequest(BaseModel):
    court_id: str
    ramp_years: int = Field(default=10, ge=0)
    target_strength: Literal["sanctioned"] | float = "sanctioned"
    disposal_floor: float | None = Field(default=None, ge=0)
    target_years: int | None = Field(default=None, ge=2)


class CourtInfo(BaseModel):
    court_id: str
    name: str
    sanctioned: float
    working: float
    p0: float
    rate_daily: float
    d_daily: float


class TrajectoryRow(BaseModel):
    t: int
    p: float
    r: float
    w: float


class ScenarioResponse(BaseModel):
    court_id: str
    inputs: ScenarioRequest
    trajectory: list[TrajectoryRow]
    verdict: Literal["clears_in", "never_clears"]
    years_to_clear: int | None
    final_rate: float
    required_judges: int | None = None
    binding: str | None = None


def _scenario(court: CourtInputs, req: ScenarioRequest, target: float) -> Scenario:
    d_daily = court.d_daily
    if req.disposal_floor is not None:
        d_daily = apply_disposal_floor(d_daily, req.disposal_floor)
    return Scenario(
        p0=court.p0,
        r0=annualize(court.rate_daily),
        d=annualize(d_daily),
        schedule=build_ramp(court.working, target, req.ramp_years),
    )


def _respond(court: CourtInputs, req: ScenarioRequest, scenario: Scenario, **extra) -> ScenarioResponse:
    traj = project(scenario)
    cleared = traj.final.pending <= 0
    return ScenarioResponse(
        court_id=court.court_id,
        inputs=req,
        trajectory=[
            TrajectoryRow(t=p.t, p=p.pending, r=p.rate, w=p.strength)
            for p in traj.points
        ],
        verdict="clears_in" if cleared else "never_clears",
        years_to_clear=traj.final.t if cleared else None,
        final_rate=final_rate(scenario),
        **extra,
    )


def create_app(
    state: ServiceState | None = None,
    paths: Mapping[str, Path | None] | None = None,
) -> FastAPI:
    """Build the app; pass ``state`` directly or ``paths`` to load at startup."""

    @asynccontextmanager
    async def lifespan(app: FastAPI):
        if app.state.store is None and paths is not None:
            app.state.store = state_from_files(paths)
        yield

    app = FastAPI(title="pendency scenario service", lifespan=lifespan)
    app.state.store = state
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    def store() -> ServiceState:
        st = app.state.store
        if st is None:
            raise HTTPException(status_code=503, detail="dataset not loaded yet")
        return st

    def court_or_404(st: ServiceState, court_id: str) -> CourtInputs:
        court = st.court(court_id)
        if court is None:
            raise HTTPException(status_code=404, detail=f"unknown court {court_id!r}")
        return court

    @app.get("/courts", response_model=list[CourtInfo])
    def list_courts() -> list[CourtInfo]:
        ordered = sorted(store().courts, key=lambda c: c.court_id)
        return [CourtInfo(**c.__dict__) for c in ordered]

    @app.post("/project", response_model=ScenarioResponse)
    def project_scenario(req: ScenarioRequest) -> ScenarioResponse:
        court = court_or_404(store(), req.court_id)
        target = (
            court.sanctioned if req.target_strength == "sanctioned" else float(req.target_strength)
        )
        try:
            return _respond(court, req, _scenario(court, req, target))
        except PendencyError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.post("/solve", response_model=ScenarioResponse)
    def solve_scenario(req: ScenarioRequest) -> ScenarioResponse:
        court = court_or_404(store(), req.court_id)
        if req.target_years is None:
            raise HTTPException(status_code=422, detail="target_years is required")
        d_daily = court.d_daily
        if req.disposal_floor is not None:
            d_daily = apply_disposal_floor(d_daily, req.disposal_floor)
        try:
            result = required_judges(
                SolverRequest(
                    p0=court.p0,
                    r0=annualize(court.rate_daily),
                    d=annualize(d_daily),
                    w0=court.working,
                    sanctioned_floor=court.sanctioned,
                    target_years=req.target_years,
                )
            )
            # show the clearing path at the solved strength
            scenario = Scenario(
                p0=court.p0,
                r0=annualize(court.rate_daily),
                d=annualize(d_daily),
                schedule=build_ramp(
                    court.working, float(result.required_judges), req.target_years
                ),
            )
            return _respond(
                court,
                req,
                scenario,
                required_judges=result.required_judges,
                binding=result.binding.value,
            )
        except Infeasible as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        except PendencyError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    return app
