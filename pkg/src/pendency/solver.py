"""Inverse staffing questions.

Two of them: the smallest bench that clears the backlog within a deadline
(strength ramping linearly from today's bench to the answer over exactly that
many years), and the extra judges needed to stop the backlog growing at all.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, Infeasible
from .projection import Scenario, build_ramp, run_years


class Binding(str, Enum):
    COMPUTED = "computed"
    FLOORED = "floored_at_sanctioned"


class Sufficiency(str, Enum):
    WITHIN_VACANCY = "within_vacancy"
    EXCEEDS_SANCTIONED = "exceeds_sanctioned"


@dataclass(frozen=True)
class SolverRequest:
    """Clear p0 within target_years, never recommending below the floor.

    target_years must be at least 2: the first year's growth is already
    locked in by r0, so no bench size can clear anything in one step.
    """

    p0: float
    r0: float
    d: float
    w0: float
    sanctioned_floor: float
    target_years: int

    def __post_init__(self) -> None:
        if self.target_years < 2:
            raise DomainError(
                "target_years must be >= 2; the first year's rate is fixed, "
                "so a one-year clearance is impossible"
            )
        if self.p0 < 0:
            raise DomainError(f"p0 must be >= 0, got {self.p0}")
        if self.d < 0:
            raise DomainError(f"disposal rate must be >= 0, got {self.d}")
        if self.w0 < 0 or self.sanctioned_floor < 0:
            raise DomainError("strengths must be >= 0")


@dataclass(frozen=True)
class SolverResult:
    required_judges: int
    binding: Binding
    verified: bool


def _clears_by_deadline(req: SolverRequest, strength: int) -> bool:
    schedule = build_ramp(req.w0, float(strength), req.target_years)
    traj = run_years(Scenario(req.p0, req.r0, req.d, schedule), req.target_years)
    return traj.final.pending <= 0.0


def required_judges(req: SolverRequest) -> SolverResult:
    """Minimal integer bench clearing the backlog by the deadline.

    Closed form first: with a T-year ramp to N, the deadline pendency is
    p0 + T*r0 - d*(N - w0)*(T-1)/2, so N* = w0 + 2*(p0 + T*r0)/(d*(T-1)).
    Ceil, then nudge by forward simulation to absorb float drift, then apply
    the sanctioned floor. The returned value is always re-verified against
    the simulator.
    """
    T = req.target_years
    unassisted = req.p0 + T * req.r0  # deadline pendency with no change in rate
    if req.d == 0:
        if unassisted > 0:
            raise Infeasible(
                "judges dispose nothing (d = 0) and the backlog does not "
                "drain on its own"
            )
        minimal = 0
    else:
        n_star = req.w0 + 2.0 * unassisted / (req.d * (T - 1))
        minimal = max(0, math.ceil(n_star))
        while minimal > 0 and _clears_by_deadline(req, minimal - 1):
            minimal -= 1
        while not _clears_by_deadline(req, minimal):
            minimal += 1

    floor = math.ceil(req.sanctioned_floor)
    required = max(minimal, floor)
    binding = Binding.FLOORED if floor > minimal else Binding.COMPUTED

    verified = _clears_by_deadline(req, required)
    if verified and binding is Binding.COMPUTED and required >= 1 and req.d > 0:
        verified = not _clears_by_deadline(req, required - 1)
    return SolverResult(required_judges=required, binding=binding, verified=verified)


def judges_to_zero_rate(r_yearly: float, d_yearly: float) -> int:
    """Additional judges that bring the yearly backlog growth to <= 0."""
    if r_yearly <= 0:
        return 0
    if d_yearly <= 0:
        raise Infeasible("backlog is growing but judges dispose nothing (d = 0)")
    k = math.ceil(r_yearly / d_yearly)
    # float drift can push ceil one too high across an exact division
    if k > 0 and r_yearly - d_yearly * (k - 1) <= 0:
        k -= 1
    return k


def classify_sufficiency(delta: int, sanctioned: float, working: float) -> Sufficiency:
    """Can ``delta`` extra judges be found by just filling the vacancy?"""
    if delta <= sanctioned - working:
        return Sufficiency.WITHIN_VACANCY
    return Sufficiency.EXCEEDS_SANCTIONED
