"""Tests for the bound catalog.

Frozen raw values were computed with mpmath at 50 digits from the
cataloged formulas in their plain (unscaled) form; matching them
certifies that the scaled rearrangements used here are algebraically
identical.
"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from marcumq.bounds import (
    BoundId,
    Regime,
    compute_zeta,
    eval_all,
    evaluate,
    lb1jp,
    lb1jp_small_ab_limit,
    lb2jp,
    literature_bound,
    regime_of,
    ub1jp,
    ub2jp,
)
from marcumq.errors import DomainError, RegimeError, SingularityError
from marcumq.oracle import QArgs

# mpmath (50 dps) references for raw values
UB1JP_01_01 = 1.0213296921469377
UB1JP_01_1 = 0.61628215725007798
LB1JP_01_01 = 0.99338142163946174
LB1JP_01_1 = 0.60703469237424598
LB1JP_1EM6_2 = 0.13533528323672547
UB2JP_2_1 = 0.91883967084408045
UB2JP_2_15 = 0.79708573745036376
UB2JP_2_2 = 0.63130803639161626
UB1JP_2_2 = 0.69885308496094156
LB2JP_20_191 = 0.82006995116439428
LB2JP_20_20 = 0.49984352969903128
ZETA_20_191 = 19.796265906654492
ZETA_2_1 = 0.82399354148295628
LB2A_20_195 = 0.66406637969246503
UB1A_01_01 = 1.1141620326061982
LB1A_01_1 = 0.41850943934458025
UB2A_2_19 = 0.71615480419959858
# stress point references
UB1JP_600_601 = 0.15892621023741584
LB1JP_600_601 = 0.158787466643162
UB2JP_600_599 = 0.84161593380681607
LB2JP_600_599 = 0.84147695878005662


class TestRegime:
    def test_tie_goes_to_b_ge_a(self):
        assert regime_of(QArgs(1.0, 1.0)) is Regime.BGeqA

    def test_classification(self):
        assert regime_of(QArgs(10.0, 12.0)) is Regime.BGeqA
        assert regime_of(QArgs(2.0, 1.0)) is Regime.BLtA


class TestUB1JP:
    def test_frozen(self):
        assert ub1jp(QArgs(0.1, 0.1)).raw == pytest.approx(UB1JP_01_01, rel=1e-13)
        assert ub1jp(QArgs(0.1, 1.0)).raw == pytest.approx(UB1JP_01_1, rel=1e-13)

    def test_clamped_at_one(self):
        ev = ub1jp(QArgs(0.1, 0.1))
        assert ev.raw > 1.0
        assert ev.clamped == 1.0
        assert ev.side == "upper"

    def test_a_zero_collapses_to_exact(self):
        for b in (0.3, 1.0, 2.5):
            assert ub1jp(QArgs(0.0, b)).raw == pytest.approx(math.exp(-b * b / 2), rel=1e-14)

    def test_wrong_regime(self):
        with pytest.raises(RegimeError):
            ub1jp(QArgs(2.0, 1.0))


class TestLB1JP:
    def test_frozen(self):
        assert lb1jp(QArgs(0.1, 0.1)).raw == pytest.approx(LB1JP_01_01, rel=1e-13)
        assert lb1jp(QArgs(0.1, 1.0)).raw == pytest.approx(LB1JP_01_1, rel=1e-13)

    def test_limit_branch_value(self):
        # ab = 2e-9 takes the analytic branch; direct reference 0.1353352832366127
        assert lb1jp(QArgs(1e-9, 2.0)).raw == pytest.approx(math.exp(-2.0), rel=1e-9)

    def test_limit_matches_direct_formula(self):
        # direct evaluation at a = 1e-6 against the small-ab branch
        direct = lb1jp(QArgs(1e-6, 2.0)).raw
        assert direct == pytest.approx(LB1JP_1EM6_2, rel=1e-12)
        limit = lb1jp_small_ab_limit(1e-6, 2.0)
        assert abs(direct - limit) / limit < 1e-8

    def test_a_zero_collapses_to_exact(self):
        assert lb1jp(QArgs(0.0, 2.0)).raw == pytest.approx(math.exp(-2.0), rel=1e-12)


class TestUB2JP:
    def test_frozen(self):
        assert ub2jp(QArgs(2.0, 1.0)).raw == pytest.approx(UB2JP_2_1, rel=1e-13)
        assert ub2jp(QArgs(2.0, 1.5)).raw == pytest.approx(UB2JP_2_15, rel=1e-13)

    def test_boundary_tie_allowed(self):
        assert ub2jp(QArgs(2.0, 2.0)).raw == pytest.approx(UB2JP_2_2, rel=1e-13)

    def test_continuous_at_tie(self):
        assert ub2jp(QArgs(2.0, 2.0 - 1e-9)).raw == pytest.approx(UB2JP_2_2, abs=1e-6)

    def test_family_gap_at_tie(self):
        # the two upper-bound families do not meet at b = a: at a = 2 the
        # b < a bound is tighter by a documented 6.75e-2
        gap = ub1jp(QArgs(2.0, 2.0)).raw - ub2jp(QArgs(2.0, 2.0)).raw
        assert gap == pytest.approx(UB1JP_2_2 - UB2JP_2_2, abs=1e-9)
        assert gap == pytest.approx(0.0675, abs=1e-3)

    def test_wrong_regime(self):
        with pytest.raises(RegimeError):
            ub2jp(QArgs(1.0, 2.0))


class TestLB2JP:
    def test_frozen(self):
        assert lb2jp(QArgs(20.0, 19.1)).raw == pytest.approx(LB2JP_20_191, rel=1e-13)
        assert lb2jp(QArgs(20.0, 20.0)).raw == pytest.approx(LB2JP_20_20, rel=1e-13)

    def test_published_boundary_row(self):
        assert lb2jp(QArgs(20.0, 20.0)).raw == pytest.approx(0.49984, abs=1e-4)

    def test_b_zero_is_one(self):
        assert lb2jp(QArgs(3.0, 0.0)).raw == 1.0

    def test_wrong_regime(self):
        with pytest.raises(RegimeError):
            lb2jp(QArgs(1.0, 2.0))


class TestZeta:
    def test_frozen(self):
        assert compute_zeta(QArgs(20.0, 19.1)) == pytest.approx(ZETA_20_191, rel=1e-13)
        assert compute_zeta(QArgs(2.0, 1.0)) == pytest.approx(ZETA_2_1, rel=1e-13)

    def test_small_ab_quadratic(self):
        # log I0(x) ~ x^2/4 for small x, so zeta ~ (ab)^2 / (4b)
        z = compute_zeta(QArgs(0.1, 0.1))
        assert z == pytest.approx(0.01 ** 2 / (4 * 0.1), rel=1e-3)

    def test_domain_error_at_zero(self):
        with pytest.raises(DomainError):
            compute_zeta(QArgs(0.0, 1.0))
        with pytest.raises(DomainError):
            compute_zeta(QArgs(1.0, 0.0))

    @given(
        st.floats(min_value=1e-3, max_value=100.0),
        st.floats(min_value=1e-3, max_value=100.0),
    )
    @settings(max_examples=200, deadline=None)
    def test_bounded_by_a(self, a, b):
        z = compute_zeta(QArgs(a, b))
        assert 0.0 < z < a


class TestLiterature:
    def test_frozen(self):
        assert literature_bound(BoundId.UB1A, QArgs(0.1, 0.1)).raw == pytest.approx(UB1A_01_01, rel=1e-13)
        assert literature_bound(BoundId.LB1A, QArgs(0.1, 1.0)).raw == pytest.approx(LB1A_01_1, rel=1e-13)
        assert literature_bound(BoundId.LB2A, QArgs(20.0, 19.5)).raw == pytest.approx(LB2A_20_195, rel=1e-12)
        assert literature_bound(BoundId.UB2A, QArgs(2.0, 1.9)).raw == pytest.approx(UB2A_2_19, rel=1e-13)

    def test_published_values(self):
        assert literature_bound(BoundId.UB1A, QArgs(0.1, 0.1)).raw == pytest.approx(1.11416, abs=1e-4)
        assert literature_bound(BoundId.LB2A, QArgs(20.0, 19.5)).raw == pytest.approx(0.66406, abs=1e-4)

    def test_lb2a_literal_transcription_is_broken(self):
        # the uncorrected form exceeds 1 and cannot be a useful lower bound
        lit = literature_bound(BoundId.LB2A, QArgs(20.0, 19.1), lb2a_literal=True)
        assert lit.raw > 1.0

    def test_ub1b_singular_at_tie(self):
        with pytest.raises(SingularityError):
            literature_bound(BoundId.UB1B, QArgs(1.0, 1.0))

    def test_lb2b_singular_at_tie(self):
        with pytest.raises(SingularityError):
            literature_bound(BoundId.LB2B, QArgs(2.0, 2.0))

    def test_lb2a_singular_at_b_zero(self):
        with pytest.raises(SingularityError):
            literature_bound(BoundId.LB2A, QArgs(2.0, 0.0))

    def test_regime_errors(self):
        with pytest.raises(RegimeError):
            literature_bound(BoundId.UB1A, QArgs(2.0, 1.0))
        with pytest.raises(RegimeError):
            literature_bound(BoundId.LB2C, QArgs(1.0, 2.0))

    def test_jp_ids_rejected(self):
        with pytest.raises(DomainError):
            literature_bound(BoundId.UB1JP, QArgs(0.1, 1.0))

    # every remaining catalog formula pinned against a plain-form
    # evaluation at 50 digits; matching certifies the scaled rearrangement
    @pytest.mark.parametrize(
        "bid,a,b,expected",
        [
            (BoundId.UB1B, 0.1, 0.7, 0.97448191331315069),
            (BoundId.UB1B, 3.0, 4.5, 0.97395740207504919),
            (BoundId.UB1C, 0.1, 0.7, 0.81412763721032149),
            (BoundId.UB1C, 3.0, 4.5, 0.28678263533837082),
            (BoundId.UB1D, 0.1, 0.7, 0.80958606519847065),
            (BoundId.UB1D, 3.0, 4.5, 0.22309061484861445),
            (BoundId.LB1B, 0.1, 0.7, 0.63538040743947956),
            (BoundId.LB1B, 3.0, 4.5, 3.6611620065631946e-13),
            (BoundId.LB1C, 0.1, 0.7, 0.77975510624241951),
            (BoundId.LB1C, 3.0, 4.5, 0.035591405864145294),
            (BoundId.LB1D, 0.1, 0.7, 0.7548530438730281),
            (BoundId.LB1D, 3.0, 4.5, 3.0584810551372012e-7),
            (BoundId.UB2D, 2.0, 1.3, 0.89587301330529122),
            (BoundId.UB2D, 20.0, 19.5, 0.80842993871799638),
            (BoundId.LB2B, 2.0, 1.3, -1.2362986806910519),
            (BoundId.LB2B, 20.0, 19.5, -34.299876103383816),
            (BoundId.LB2C, 2.0, 1.3, 0.20656668227761479),
            (BoundId.LB2C, 20.0, 19.5, 0.017833243022317987),
            (BoundId.LB2D, 2.0, 1.3, 0.82468309098086631),
            (BoundId.LB2D, 20.0, 19.5, 0.62169597436347837),
        ],
    )
    def test_catalog_frozen(self, bid, a, b, expected):
        ev = literature_bound(bid, QArgs(a, b))
        assert ev.raw == pytest.approx(expected, rel=1e-13)
        if expected < 0.0:
            assert ev.clamped == 0.0


class TestEvalAll:
    def test_count_b_ge_a(self):
        evals, skipped = eval_all(QArgs(0.1, 0.5))
        assert len(evals) == 10
        assert not skipped

    def test_count_b_lt_a(self):
        evals, skipped = eval_all(QArgs(2.0, 1.0))
        assert len(evals) == 8
        assert not skipped

    def test_tie_skips_ub1b(self):
        evals, skipped = eval_all(QArgs(1.0, 1.0))
        assert len(evals) == 9
        assert list(skipped) == [BoundId.UB1B]
        assert "singular" in skipped[BoundId.UB1B]

    @given(
        st.floats(min_value=0.0, max_value=50.0),
        st.floats(min_value=0.0, max_value=50.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_clamped_always_in_unit_interval(self, a, b):
        evals, _ = eval_all(QArgs(a, b))
        for ev in evals:
            assert 0.0 <= ev.clamped <= 1.0
            assert ev.side in ("upper", "lower")


class TestStressPoints:
    def test_beyond_plain_overflow(self):
        # ab = 359400..360600, far past where e^(ab) is representable
        assert ub1jp(QArgs(600.0, 601.0)).raw == pytest.approx(UB1JP_600_601, rel=1e-12)
        assert lb1jp(QArgs(600.0, 601.0)).raw == pytest.approx(LB1JP_600_601, rel=1e-12)
        assert ub2jp(QArgs(600.0, 599.0)).raw == pytest.approx(UB2JP_600_599, rel=1e-12)
        assert lb2jp(QArgs(600.0, 599.0)).raw == pytest.approx(LB2JP_600_599, rel=1e-12)

    def test_all_bounds_finite(self):
        for (a, b) in [(600.0, 599.0), (600.0, 601.0)]:
            evals, _ = eval_all(QArgs(a, b))
            assert evals
            for ev in evals:
                assert math.isfinite(ev.raw), ev
