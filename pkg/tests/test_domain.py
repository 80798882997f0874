import math
from datetime import date

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pendency import (
    CourtRecord,
    DomainError,
    RatesBundle,
    SnapshotObservation,
    SnapshotSeries,
    annualize,
    disposal_rate_per_judge_day,
    load_ratio,
    vacancy,
)

judge_counts = st.integers(min_value=1, max_value=10**4).map(float)
case_counts = st.integers(min_value=0, max_value=10**7).map(float)


class TestLoadRatio:
    def test_simple_division(self):
        assert load_ratio(780, 10) == 78.0

    def test_heaviest_bench(self):
        # 19374 cases per judge on a 25-judge bench
        assert load_ratio(484350, 25) == 19374.0

    def test_zero_pendency(self):
        assert load_ratio(0, 5) == 0.0

    def test_no_judges(self):
        with pytest.raises(DomainError, match="no working judges"):
            load_ratio(100, 0)
        with pytest.raises(DomainError):
            load_ratio(100, -3)

    @given(p=case_counts, w=judge_counts, k=st.integers(1, 1000).map(float))
    def test_homogeneous_in_scale(self, p, w, k):
        assert load_ratio(k * p, k * w) == pytest.approx(load_ratio(p, w), rel=1e-12)


class TestDisposalRate:
    def test_round_numbers(self):
        assert disposal_rate_per_judge_day(1800, 10) == 6.0

    def test_aggregate_bench(self):
        got = disposal_rate_per_judge_day(111996, 672)
        assert got == 111996 / 30.0 / 672
        assert got == pytest.approx(5.5554, abs=5e-5)

    def test_zero_disposals(self):
        assert disposal_rate_per_judge_day(0, 4) == 0.0

    def test_errors(self):
        with pytest.raises(DomainError):
            disposal_rate_per_judge_day(100, 0)
        with pytest.raises(DomainError):
            disposal_rate_per_judge_day(-5, 3)

    @given(m=case_counts, w=judge_counts)
    def test_inverts_to_monthly_total(self, m, w):
        back = disposal_rate_per_judge_day(m, w) * 30.0 * w
        assert back == pytest.approx(m, rel=1e-12, abs=1e-12)


class TestAnnualize:
    def test_unit_rate(self):
        assert annualize(1.0) == 360.0

    def test_national_average(self):
        assert annualize(5.93) == pytest.approx(2134.8, rel=1e-12)

    def test_zero(self):
        assert annualize(0.0) == 0.0

    def test_custom_year_length(self):
        assert annualize(2.0, days_per_year=365.0) == 730.0

    @given(a=st.floats(-1e6, 1e6), b=st.floats(-1e6, 1e6))
    def test_additive(self, a, b):
        assert annualize(a + b) == pytest.approx(
            annualize(a) + annualize(b), rel=1e-12, abs=1e-9
        )

    @given(x=st.floats(-1e6, 1e6))
    def test_odd(self, x):
        assert annualize(-x) == -annualize(x)


class TestVacancy:
    def test_national_totals(self):
        count, fraction = vacancy(1079, 672)
        assert count == 407
        assert fraction == pytest.approx(0.3772, abs=5e-5)

    def test_fully_staffed(self):
        assert vacancy(10, 10) == (0, 0.0)

    def test_single_court(self):
        count, fraction = vacancy(85, 52)
        assert count == 33
        assert fraction == pytest.approx(0.3882, abs=5e-5)

    def test_over_strength_goes_negative(self):
        count, fraction = vacancy(10, 12)
        assert count == -2
        assert fraction == -0.2

    def test_bad_sanctioned(self):
        with pytest.raises(DomainError):
            vacancy(0, 5)

    @given(
        s=st.integers(1, 10**4).map(float),
        w=st.integers(0, 10**4).map(float),
    )
    def test_count_plus_working_is_sanctioned(self, s, w):
        count, _ = vacancy(s, w)
        assert count + w == s


class TestCourtRecord:
    def test_sanctioned_must_be_at_least_one(self):
        with pytest.raises(DomainError):
            CourtRecord("XX", "X", sanctioned_strength=0, working_strength=1)

    def test_over_strength_is_a_warning_not_an_error(self):
        rec = CourtRecord("XX", "X", sanctioned_strength=10, working_strength=12)
        assert any("exceeds sanctioned" in w for w in rec.strength_warnings())

    def test_nonpositive_working_is_a_warning(self):
        rec = CourtRecord("XX", "X", sanctioned_strength=10, working_strength=0)
        assert any("not positive" in w for w in rec.strength_warnings())

    def test_clean_record_has_no_warnings(self):
        assert CourtRecord("XX", "X", 10, 8).strength_warnings() == []

    def test_stub_record_allowed(self):
        assert CourtRecord("XX", "XX").sanctioned_strength is None


class TestSeriesAndBundles:
    def _obs(self, d: date, total: int = 100) -> SnapshotObservation:
        return SnapshotObservation(d, 50, 30, total - 80, total)

    def test_series_requires_increasing_dates(self):
        with pytest.raises(DomainError, match="strictly increase"):
            SnapshotSeries(
                "XX", (self._obs(date(2020, 1, 2)), self._obs(date(2020, 1, 1)))
            )

    def test_empty_series_allowed(self):
        assert len(SnapshotSeries("XX", ())) == 0

    def test_rates_bundle_rejects_negative_p0(self):
        with pytest.raises(DomainError):
            RatesBundle(daily_pendency_rate=1.0, daily_disposal_per_judge=1.0, p0=-1)

    def test_rates_bundle_allows_negative_trend(self):
        bundle = RatesBundle(daily_pendency_rate=-3.0, daily_disposal_per_judge=1.5, p0=0)
        assert bundle.daily_pendency_rate == -3.0

    def test_rates_bundle_rejects_negative_disposal(self):
        with pytest.raises(DomainError):
            RatesBundle(daily_pendency_rate=0.0, daily_disposal_per_judge=-0.1, p0=10)
