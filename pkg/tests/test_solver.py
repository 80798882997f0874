import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pendency import (
    Binding,
    DomainError,
    Infeasible,
    Scenario,
    SolverRequest,
    Sufficiency,
    build_ramp,
    classify_sufficiency,
    judges_to_zero_rate,
    required_judges,
    run_years,
    years_to_clear,
)


def deadline_pending(req: SolverRequest, strength: int) -> float:
    schedule = build_ramp(req.w0, float(strength), req.target_years)
    return run_years(Scenario(req.p0, req.r0, req.d, schedule), req.target_years).final.pending


class TestRequiredJudges:
    def test_hand_worked_case(self):
        req = SolverRequest(p0=1000, r0=0, d=100, w0=10, sanctioned_floor=0, target_years=5)
        result = required_judges(req)
        assert result.required_judges == 15
        assert result.binding is Binding.COMPUTED
        assert result.verified
        # the clearing path at the answer, year by year
        traj = run_years(
            Scenario(1000, 0, 100, build_ramp(10, 15, 5)), 5
        )
        assert [p.pending for p in traj.points] == [1000, 1000, 900, 700, 400, 0]
        assert deadline_pending(req, 14) > 0

    def test_nothing_to_clear_floors_at_sanctioned(self):
        for d in (0.5, 2.0, 77.0):
            req = SolverRequest(p0=0, r0=-5, d=d, w0=10, sanctioned_floor=13, target_years=5)
            result = required_judges(req)
            assert result.required_judges == 13
            assert result.binding is Binding.FLOORED
            assert result.verified

    def test_target_years_must_be_at_least_two(self):
        with pytest.raises(DomainError, match="one-year clearance is impossible"):
            SolverRequest(p0=10, r0=0, d=1, w0=1, sanctioned_floor=0, target_years=1)

    def test_zero_disposal_growing_backlog_is_infeasible(self):
        req = SolverRequest(p0=100, r0=10, d=0, w0=5, sanctioned_floor=0, target_years=5)
        with pytest.raises(Infeasible):
            required_judges(req)

    def test_zero_disposal_draining_backlog_is_fine(self):
        req = SolverRequest(p0=100, r0=-50, d=0, w0=5, sanctioned_floor=8, target_years=5)
        result = required_judges(req)
        assert result.required_judges == 8
        assert result.binding is Binding.FLOORED
        assert result.verified

    def test_monotone_in_deadline(self):
        rng = random.Random(3)
        for _ in range(100):
            p0 = rng.uniform(0, 1e6)
            r0 = rng.uniform(-1e3, 1e4)
            d = rng.uniform(1, 1e3)
            w0 = rng.uniform(0, 100)
            prev = None
            for T in (2, 3, 5, 8, 15, 30):
                req = SolverRequest(p0=p0, r0=r0, d=d, w0=w0, sanctioned_floor=0, target_years=T)
                n = required_judges(req).required_judges
                if prev is not None:
                    assert n <= prev
                prev = n

    def test_agrees_with_simulator_on_random_requests(self):
        rng = random.Random(4)
        for _ in range(300):
            req = SolverRequest(
                p0=rng.uniform(0, 1e6),
                r0=rng.uniform(-1e4, 1e4),
                d=rng.uniform(0.5, 1e4),
                w0=rng.uniform(0, 100),
                sanctioned_floor=rng.choice([0, 0, rng.uniform(0, 200)]),
                target_years=rng.randint(2, 30),
            )
            result = required_judges(req)
            assert result.verified
            n = result.required_judges
            assert deadline_pending(req, n) <= 0
            if result.binding is Binding.COMPUTED and n >= 1:
                assert deadline_pending(req, n - 1) > 0

    @given(
        r0=st.integers(-100, 1000),
        d=st.integers(1, 50),
        n_minus_w0=st.integers(0, 200),
        w0=st.integers(0, 100),
        T=st.integers(2, 40),
    )
    def test_ramp_drain_sums_to_closed_form(self, r0, d, n_minus_w0, w0, T):
        """The yearly rates under a T-year ramp telescope to the closed form."""
        dN = Fraction(n_minus_w0)
        total = sum(Fraction(r0) - Fraction(d) * dN * Fraction(t, T) for t in range(T))
        assert total == T * Fraction(r0) - Fraction(d) * dN * Fraction(T - 1, 2)


class TestZeroRate:
    def test_exact_division(self):
        assert judges_to_zero_rate(360, 36) == 10

    def test_already_shrinking(self):
        assert judges_to_zero_rate(-500, 40) == 0

    def test_ceiling(self):
        assert judges_to_zero_rate(365, 36) == 11

    def test_zero_rate_needs_no_one(self):
        assert judges_to_zero_rate(0, 36) == 0

    def test_growing_with_zero_disposal_is_infeasible(self):
        with pytest.raises(Infeasible):
            judges_to_zero_rate(10, 0)

    @given(
        r=st.floats(0.001, 1e6),
        d=st.floats(0.001, 1e4),
    )
    def test_delta_is_minimal(self, r, d):
        k = judges_to_zero_rate(r, d)
        assert r - d * k <= 0
        if k > 0:
            assert r - d * (k - 1) > 0


class TestClassifySufficiency:
    def test_within(self):
        assert classify_sufficiency(10, 50, 25) is Sufficiency.WITHIN_VACANCY

    def test_exceeds(self):
        assert classify_sufficiency(40, 85, 52) is Sufficiency.EXCEEDS_SANCTIONED

    def test_zero_delta_always_within(self):
        assert classify_sufficiency(0, 5, 5) is Sufficiency.WITHIN_VACANCY

    def test_boundary_is_within(self):
        assert classify_sufficiency(33, 85, 52) is Sufficiency.WITHIN_VACANCY

    def test_exceeding_vacancy_means_sanctioned_ramp_never_clears(self):
        rng = random.Random(5)
        checked = 0
        while checked < 100:
            r0 = rng.uniform(1, 1e4)
            d = rng.uniform(0.5, 100)
            w0 = rng.uniform(1, 100)
            sanctioned = w0 + rng.uniform(0, 50)
            if abs(r0 - d * (sanctioned - w0)) < 1e-6:
                continue  # exact boundary excluded: delta == vacancy there
            delta = judges_to_zero_rate(r0, d)
            if classify_sufficiency(delta, sanctioned, w0) is Sufficiency.EXCEEDS_SANCTIONED:
                outcome = years_to_clear(
                    Scenario(1e5, r0, d, build_ramp(w0, sanctioned, 10))
                )
                assert outcome.never_clears
            checked += 1
