"""Riemann-zeta kernel: exact Bernoulli rationals, Euler-Maclaurin
evaluation on the non-negative real line, and the independent
alternating-series route used to cross-check it."""
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mzr import (
    DomainError,
    EulerMaclaurinConfig,
    M_MAX,
    ParameterRangeError,
    PoleProximityError,
    bernoulli,
    bernoulli_table,
    riemann_zeta,
    riemann_zeta_alternating,
    riemann_zeta_grid,
)
from mzr.riemann_kernel import default_config

# Values computed independently at 40 decimal digits and frozen here;
# the library never sees them except through these assertions.
ZETA_SPOTS = {
    0.1: -0.6030375198562417,
    0.25: -0.8132784052618917,
    0.5: -1.4603545088095868,
    0.9: -9.4301140194022524,
    1.5: 2.6123753486854883,
    3.0: 1.2020569031595943,
    5.5: 1.0252045799546857,
    12.75: 1.0001460147983355,
    40.0: 1.0000000000009095,
}


class TestBernoulli:
    def test_basic_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == Fraction(-1, 2)
        assert bernoulli(2) == Fraction(1, 6)
        assert bernoulli(3) == 0
        assert bernoulli(10) == Fraction(5, 66)
        assert bernoulli(12) == Fraction(-691, 2730)

    def test_odd_indices_vanish(self):
        for n in range(3, 2 * M_MAX, 2):
            assert bernoulli(n) == 0

    def test_values_are_exact_rationals(self):
        assert all(isinstance(bernoulli(n), Fraction) for n in range(8))

    def test_defining_recurrence(self):
        # sum_{j=0}^{n} C(n+1, j) B_j = 0 for every n >= 1, exactly.
        for n in range(1, 2 * M_MAX + 1):
            acc = sum(math.comb(n + 1, j) * bernoulli(j) for j in range(n + 1))
            assert acc == 0

    def test_table_is_shared_and_complete(self):
        table = bernoulli_table()
        assert len(table.values) == 2 * M_MAX + 1
        assert table.values[12] == Fraction(-691, 2730)
        assert bernoulli_table() is table

    @pytest.mark.parametrize("bad", [-1, 2 * M_MAX + 1, 1.5, "3", None])
    def test_range_errors(self, bad):
        with pytest.raises(ParameterRangeError):
            bernoulli(bad)


class TestClassicalValues:
    def test_even_integer_closed_forms(self):
        assert riemann_zeta(2.0) == pytest.approx(math.pi**2 / 6.0, rel=1e-14)
        assert riemann_zeta(4.0) == pytest.approx(math.pi**4 / 90.0, rel=1e-14)
        assert riemann_zeta(6.0) == pytest.approx(math.pi**6 / 945.0, rel=1e-14)

    def test_value_at_zero(self):
        assert riemann_zeta(0.0) == pytest.approx(-0.5, rel=1e-14)

    @pytest.mark.parametrize("s,expected", sorted(ZETA_SPOTS.items()))
    def test_frozen_spot_values(self, s, expected):
        assert riemann_zeta(s) == pytest.approx(expected, rel=1e-13)

    def test_large_argument_tends_to_one(self):
        # zeta(60) - 1 = 8.7e-19, under half an ulp of 1.0, so the double
        # collapses to exactly 1.0; strict excess is only visible while
        # 2^-s stays above the 2^-53 resolution.
        assert riemann_zeta(60.0) >= 1.0
        assert riemann_zeta(60.0) == pytest.approx(1.0, rel=1e-13)
        assert riemann_zeta(30.0) > 1.0


class TestDomain:
    def test_negative_axis_rejected(self):
        with pytest.raises(DomainError):
            riemann_zeta(-0.5)

    @pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf])
    def test_non_finite_rejected(self, bad):
        with pytest.raises(DomainError):
            riemann_zeta(bad)

    @pytest.mark.parametrize("s", [1.0, 1.0 + 5e-9, 1.0 - 5e-9])
    def test_pole_guard(self, s):
        with pytest.raises(PoleProximityError) as info:
            riemann_zeta(s)
        assert info.value.k == 1
        assert info.value.order == 1

    def test_just_outside_guard_is_finite(self):
        # Simple pole with residue 1: zeta(1 + eps) ~ 1/eps.
        assert riemann_zeta(1.0 + 2e-8) > 1e7
        assert riemann_zeta(1.0 - 2e-8) < -1e7


class TestShape:
    def test_negative_on_critical_segment(self):
        values = riemann_zeta_grid(np.linspace(0.0, 0.9999, 500))
        assert np.all(values < 0.0)

    def test_strictly_decreasing_beyond_one(self):
        values = riemann_zeta_grid(np.linspace(1.01, 10.0, 400))
        assert np.all(np.diff(values) < 0.0)


class TestAlternatingSeriesAgreement:
    """The alternating-series route shares only the domain guard with the
    Euler-Maclaurin route, so agreement is a genuine cross-check."""

    def test_agreement_on_convergent_band(self):
        grid = np.linspace(1.5, 40.0, 300)
        reference = riemann_zeta_grid(grid)
        for s, ref in zip(grid, reference):
            alt = riemann_zeta_alternating(float(s))
            assert alt == pytest.approx(float(ref), rel=1e-12)

    @pytest.mark.parametrize("s", [0.0, 0.25, 0.5, 0.9, 1.25])
    def test_agreement_below_one(self, s):
        assert riemann_zeta_alternating(s) == pytest.approx(
            riemann_zeta(s), rel=1e-12
        )

    @given(st.floats(min_value=1.5, max_value=40.0))
    def test_agreement_property(self, s):
        assert riemann_zeta_alternating(s) == pytest.approx(
            riemann_zeta(s), rel=1e-12
        )


class TestConfiguration:
    def test_direct_term_doubling_is_converged(self):
        for s in (0.25, 2.0, 7.5, 25.0, 40.0):
            cfg = default_config(s)
            doubled = EulerMaclaurinConfig(
                direct_terms=2 * cfg.direct_terms,
                correction_terms=cfg.correction_terms,
            )
            assert riemann_zeta(s, cfg) == pytest.approx(
                riemann_zeta(s, doubled), rel=1e-13
            )

    def test_default_config_scaling(self):
        assert default_config(2.0).direct_terms == 20
        assert default_config(55.0).direct_terms == 65
        # Growth stops once the direct sum alone is past machine precision.
        assert default_config(500.0).direct_terms == 80

    def test_config_validation(self):
        with pytest.raises(ParameterRangeError):
            EulerMaclaurinConfig(direct_terms=1, correction_terms=12)
        with pytest.raises(ParameterRangeError):
            EulerMaclaurinConfig(direct_terms=20, correction_terms=0)
        with pytest.raises(ParameterRangeError):
            EulerMaclaurinConfig(direct_terms=20, correction_terms=M_MAX + 1)
        with pytest.raises(ParameterRangeError):
            EulerMaclaurinConfig(
                direct_terms=20, correction_terms=12, target_rel_error=0.0
            )


class TestGridEvaluation:
    def test_matches_scalar_path(self):
        s = np.array([0.0, 0.3, 0.7, 1.5, 2.0, 8.25, 20.0])
        grid = riemann_zeta_grid(s)
        for si, vi in zip(s, grid):
            assert float(vi) == pytest.approx(riemann_zeta(float(si)), rel=1e-12)

    def test_empty_input(self):
        assert riemann_zeta_grid(np.empty(0)).size == 0

    def test_grid_domain_errors(self):
        with pytest.raises(DomainError):
            riemann_zeta_grid(np.array([0.5, -0.1]))
        with pytest.raises(DomainError):
            riemann_zeta_grid(np.array([0.5, math.nan]))
        with pytest.raises(PoleProximityError):
            riemann_zeta_grid(np.array([0.5, 1.0, 2.0]))
