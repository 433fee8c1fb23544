"""Scoring math: paper-table values, cap rule, exactness properties."""

import math
import random
from dataclasses import replace
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from twingauge.errors import DomainError, GateRefusal
from twingauge.fixtures import fixture
from twingauge.gatekeeper import Taxonomy
from twingauge.rational import decimal_string, display_2dp
from twingauge.schema import builtin_model
from twingauge.scorer import (
    RoundingPolicy,
    aggregate_weight_scores,
    assessment_from_doc,
    assessment_to_doc,
    dimension_maturity,
    normalize_weights,
    overall_score,
    score_assessment,
    score_report_from_doc,
    score_report_to_doc,
)

MODEL = builtin_model()
DIMS = ("Cap", "Cor", "Com", "Lc")

weight_maps = st.dictionaries(
    st.sampled_from(DIMS), st.integers(1, 5), min_size=4, max_size=4
).filter(lambda d: len(d) == 4)


class TestDimensionMaturity:
    def test_three_of_four_is_three_quarters(self):
        assert dimension_maturity(3, 4) == Fraction(3, 4)

    def test_top_level_is_one(self):
        for total in (2, 3, 4, 9):
            assert dimension_maturity(total, total) == 1

    def test_one_of_three(self):
        assert dimension_maturity(1, 3) == Fraction(1, 3)

    def test_out_of_range_rejected(self):
        with pytest.raises(DomainError):
            dimension_maturity(0, 3)
        with pytest.raises(DomainError):
            dimension_maturity(4, 3)
        with pytest.raises(DomainError):
            dimension_maturity(1, 1)


class TestNormalizeWeights:
    def test_cap_worked_example(self):
        # {5,2,1,1}: raw 5/9 exceeds the cap, remainder splits 2:1:1.
        wv = normalize_weights({"Cap": 5, "Cor": 2, "Com": 1, "Lc": 1})
        assert wv.weights == {
            "Cap": Fraction(1, 2),
            "Cor": Fraction(1, 4),
            "Com": Fraction(1, 8),
            "Lc": Fraction(1, 8),
        }
        assert wv.cap_applied

    def test_symmetric_scores(self):
        wv = normalize_weights({k: 1 for k in DIMS})
        assert wv.weights == {k: Fraction(1, 4) for k in DIMS}
        assert not wv.cap_applied

    def test_cap_with_equal_remainder(self):
        # Derived by hand: 5/8 > 1/2, the other three split 1/2 equally.
        wv = normalize_weights({"Cap": 5, "Cor": 1, "Com": 1, "Lc": 1})
        assert wv.weights == {
            "Cap": Fraction(1, 2),
            "Cor": Fraction(1, 6),
            "Com": Fraction(1, 6),
            "Lc": Fraction(1, 6),
        }
        assert sum(wv.weights.values()) == 1

    def test_google_map_weights_uncapped(self):
        wv = normalize_weights({"Cap": 5, "Cor": 3, "Com": 2, "Lc": 1})
        assert wv.weights == {
            "Cap": Fraction(5, 11),
            "Cor": Fraction(3, 11),
            "Com": Fraction(2, 11),
            "Lc": Fraction(1, 11),
        }
        assert not wv.cap_applied

    def test_two_dimensions_both_land_on_cap(self):
        wv = normalize_weights({"a": 5, "b": 1})
        assert wv.weights == {"a": Fraction(1, 2), "b": Fraction(1, 2)}
        assert wv.cap_applied

    def test_rejects_single_dimension_and_nonpositive(self):
        with pytest.raises(DomainError):
            normalize_weights({"a": 3})
        with pytest.raises(DomainError):
            normalize_weights({"a": 3, "b": 0})
        with pytest.raises(DomainError):
            normalize_weights({"a": 3, "b": -1})

    def test_accepts_rational_scores(self):
        wv = normalize_weights({"a": Fraction(7, 2), "b": Fraction(7, 2)})
        assert wv.weights == {"a": Fraction(1, 2), "b": Fraction(1, 2)}

    def test_exhaustive_builtin_scale(self):
        # All 5^4 = 625 single-rater weight vectors of the built-in model.
        at_cap_total = 0
        for scores in product(range(1, 6), repeat=4):
            wv = normalize_weights(dict(zip(DIMS, scores)))
            values = list(wv.weights.values())
            assert sum(values) == 1
            assert all(0 < w <= Fraction(1, 2) for w in values)
            at_cap = sum(1 for w in values if w == Fraction(1, 2))
            assert at_cap <= 1
            at_cap_total += at_cap
        assert at_cap_total > 0  # the cap really engages somewhere

    @given(weight_maps, st.sampled_from([2, 3, 7]))
    def test_scale_invariance(self, scores, c):
        scaled = {k: c * v for k, v in scores.items()}
        assert normalize_weights(scaled) == normalize_weights(scores)

    @given(weight_maps)
    def test_order_preservation(self, scores):
        wv = normalize_weights(scores)
        for a in scores:
            for b in scores:
                if scores[a] >= scores[b]:
                    assert wv.weights[a] >= wv.weights[b]

    @given(weight_maps)
    def test_idempotent_when_uncapped(self, scores):
        wv = normalize_weights(scores)
        if wv.cap_applied:
            return
        lcm = 1
        for w in wv.weights.values():
            lcm = lcm * w.denominator // math.gcd(lcm, w.denominator)
        again = normalize_weights({k: w * lcm for k, w in wv.weights.items()})
        assert again.weights == wv.weights


class TestOverallScore:
    def test_google_map_value(self):
        m = {"Cap": Fraction(3, 4), "Cor": Fraction(1, 3),
             "Com": Fraction(2, 3), "Lc": Fraction(1)}
        wv = normalize_weights({"Cap": 5, "Cor": 3, "Com": 2, "Lc": 1})
        total = overall_score(m, wv)
        assert total == Fraction(85, 132)
        assert abs(float(total) - 0.6436) <= 0.005  # printed value

    def test_lu2020_value(self):
        m = {"Cap": Fraction(1, 2), "Cor": Fraction(1, 3),
             "Com": Fraction(2, 3), "Lc": Fraction(1, 3)}
        wv = normalize_weights({"Cap": 5, "Cor": 2, "Com": 4, "Lc": 4})
        total = overall_score(m, wv)
        assert total == Fraction(43, 90)
        assert abs(float(total) - 0.4779) <= 0.005

    def test_all_top_levels_score_one(self):
        m = {k: Fraction(1) for k in DIMS}
        wv = normalize_weights({"Cap": 5, "Cor": 2, "Com": 1, "Lc": 1})
        assert overall_score(m, wv) == 1

    def test_key_mismatch_rejected(self):
        wv = normalize_weights({"a": 1, "b": 1})
        with pytest.raises(DomainError):
            overall_score({"a": Fraction(1)}, wv)


class TestScoreAssessment:
    def test_tesla(self):
        report = score_assessment(fixture("tesla"), MODEL)
        assert report.overall == Fraction(29, 42)
        assert display_2dp(report.overall) == "0.69"

    def test_liu2021(self):
        report = score_assessment(fixture("liu2021"), MODEL)
        assert report.overall == Fraction(7, 10)
        assert abs(float(report.overall) - 0.702) <= 0.005

    def test_gate_refusal_carries_verdict(self):
        with pytest.raises(GateRefusal) as err:
            score_assessment(fixture("living-heart"), MODEL)
        assert err.value.verdict.taxonomy is Taxonomy.DIGITAL_MODEL

    def test_report_dimension_records(self):
        report = score_assessment(fixture("google-map"), MODEL)
        by_key = {d.key: d for d in report.dimensions}
        assert by_key["Cap"].level == 3
        assert by_key["Cap"].maturity == Fraction(3, 4)
        assert by_key["Cap"].weight_score == 5
        assert by_key["Lc"].maturity == 1
        assert [d.key for d in report.dimensions] == list(DIMS)  # model order

    def test_wrong_model_ref_rejected(self):
        a = replace(fixture("tesla"), model_ref=replace(fixture("tesla").model_ref, id="other"))
        with pytest.raises(DomainError):
            score_assessment(a, MODEL)

    def test_out_of_scale_weight_rejected(self):
        a = fixture("tesla")
        a = replace(a, weight_scores={**a.weight_scores, "Cap": 6})
        with pytest.raises(DomainError):
            score_assessment(a, MODEL)

    def test_out_of_range_level_rejected(self):
        a = fixture("tesla")
        a = replace(a, levels={**a.levels, "Cor": 4})
        with pytest.raises(DomainError):
            score_assessment(a, MODEL)

    def test_policy_changes_rendering_only(self):
        exact = score_assessment(fixture("tesla"), MODEL, RoundingPolicy.EXACT)
        disp = score_assessment(fixture("tesla"), MODEL, RoundingPolicy.DISPLAY_2DP)
        assert exact.overall == disp.overall
        assert exact.dimensions == disp.dimensions

    def test_monotone_in_every_level(self):
        # 1000 random (levels, weights) pairs; raising one level raises the score.
        rng = random.Random(20240117)
        base = fixture("tesla")
        counts = {d.key: d.level_count for d in MODEL.dimensions}
        for _ in range(1000):
            levels = {k: rng.randint(1, counts[k]) for k in DIMS}
            weights = {k: rng.randint(1, 5) for k in DIMS}
            a = replace(base, levels=levels, weight_scores=weights)
            before = score_assessment(a, MODEL).overall
            key = rng.choice([k for k in DIMS if levels[k] < counts[k]] or list(DIMS))
            if levels[key] == counts[key]:
                continue
            bumped = replace(a, levels={**levels, key: levels[key] + 1})
            assert score_assessment(bumped, MODEL).overall > before

    def test_score_is_one_iff_all_levels_max(self):
        base = fixture("tesla")
        counts = {d.key: d.level_count for d in MODEL.dimensions}
        top = replace(base, levels=dict(counts))
        assert score_assessment(top, MODEL).overall == 1
        for k in DIMS:
            lowered = replace(top, levels={**counts, k: counts[k] - 1})
            assert score_assessment(lowered, MODEL).overall < 1

    def test_exact_matches_float_brute_force(self):
        # Independent oracle: Eq.-by-Eq. float recomputation, cap included.
        rng = random.Random(7)
        counts = {d.key: d.level_count for d in MODEL.dimensions}
        level_samples = [
            {k: rng.randint(1, counts[k]) for k in DIMS} for _ in range(50)
        ]
        base = fixture("tesla")
        for scores in product(range(1, 6), repeat=4):
            weights = dict(zip(DIMS, scores))
            for levels in level_samples[:2]:
                a = replace(base, levels=levels, weight_scores=weights)
                got = float(score_assessment(a, MODEL).overall)
                raw = {k: weights[k] / sum(weights.values()) for k in DIMS}
                over = [k for k, w in raw.items() if w > 0.5]
                if over:
                    rest = sum(weights.values()) - weights[over[0]]
                    raw = {
                        k: 0.5 if k == over[0] else 0.5 * weights[k] / rest
                        for k in DIMS
                    }
                want = sum(levels[k] / counts[k] * raw[k] for k in DIMS)
                assert abs(got - want) < 1e-12


class TestAggregation:
    def test_mean_is_exact(self):
        ratings = [
            {"Cap": 5, "Cor": 2, "Com": 3, "Lc": 1},
            {"Cap": 4, "Cor": 3, "Com": 3, "Lc": 2},
            {"Cap": 5, "Cor": 1, "Com": 2, "Lc": 1},
        ]
        mean = aggregate_weight_scores(ratings)
        assert mean["Cap"] == Fraction(14, 3)
        assert mean["Lc"] == Fraction(4, 3)
        wv = normalize_weights(mean)
        assert sum(wv.weights.values()) == 1

    def test_mismatched_raters_rejected(self):
        with pytest.raises(DomainError):
            aggregate_weight_scores([{"a": 1, "b": 1}, {"a": 1}])
        with pytest.raises(DomainError):
            aggregate_weight_scores([])


class TestRendering:
    def test_decimal_strings(self):
        assert decimal_string(Fraction(3, 4)) == "0.75"
        assert decimal_string(Fraction(85, 132)) == "0.643939393939"
        assert decimal_string(Fraction(1)) == "1"
        assert decimal_string(Fraction(0)) == "0"

    def test_display_2dp_half_up(self):
        assert display_2dp(Fraction(29, 42)) == "0.69"
        assert display_2dp(Fraction(7, 10)) == "0.70"
        assert display_2dp(Fraction(1)) == "1.00"
        assert display_2dp(Fraction(1, 8)) == "0.13"  # 0.125 rounds up
        assert display_2dp(Fraction(2, 7)) == "0.29"


class TestDocuments:
    def test_assessment_round_trip(self):
        for name in ("tesla", "living-heart"):
            a = fixture(name)
            assert assessment_from_doc(assessment_to_doc(a)) == a

    def test_score_report_round_trip(self):
        report = score_assessment(fixture("google-map"), MODEL)
        doc = score_report_to_doc(report)
        assert score_report_from_doc(doc) == report
        assert doc["overall"]["rational"] == "85/132"
        assert doc["overall"]["decimal"].startswith("0.643939")
        assert doc["overall"]["display"] == "0.64"
