#include <doctest.h>

#include "oscsec/monomial.hpp"
#include "oscsec/predictions.hpp"
#include "oscsec/survey.hpp"

using namespace oscsec;

TEST_CASE("osculating variety dimension") {
    CHECK(dim_osculating(2, 2, 4) == 7);
    CHECK(dim_osculating(0, 3, 5) == 3);
    CHECK(dim_osculating(3, 2, 3) == 9);
    CHECK_THROWS(dim_osculating(3, 2, 2));
}

TEST_CASE("two-point defect formula for d = k+1") {
    CHECK(delta_34A(2, 7, 2) == 10);
    CHECK(delta_34A(2, 3, 2) == 6);
    CHECK(delta_34A(1, 6, 2) == 3);
    CHECK_THROWS_AS(delta_34A(2, 3, 1), std::invalid_argument);
    for (int k = 1; k <= 10; ++k)
        for (int n = 1; n <= 10; ++n) CHECK(delta_34A(k, n, 2) == 2 + binomial_or_zero(k - 1 + n, n));
    // Alternating tail with vanishing binomials: k=1, s=3 keeps only h=2.
    CHECK(delta_34A(1, 5, 3) == 6 + 3 * 1);
}

TEST_CASE("d = k+1 with ambient expected dimension") {
    const Prediction a = predict_34B(2, 4, 2);
    CHECK(a.source == Source::P3_4Bi);
    CHECK(a.verdict == PredictedVerdict::defective);
    CHECK(a.delta_exact == 4);
    const Prediction b = predict_34B(2, 4, 3);
    CHECK(b.source == Source::P3_4Bii);
    CHECK(b.verdict == PredictedVerdict::regular_fills);
    const Prediction c = predict_34B(1, 3, 2);
    CHECK(c.source == Source::P3_4Bii);
    CHECK(c.verdict == PredictedVerdict::regular_fills);
    CHECK(is_k1_edge({1, 3, 2, 2}));
    CHECK(predict({1, 3, 2, 2}).has_caveat(kCaveatK1Edge));
    CHECK(predict_34B(2, 7, 2).source == Source::NONE);
    CHECK(predict_34B(2, 3, 3).source == Source::NONE);
}

TEST_CASE("prediction examples") {
    const Prediction p38 = predict({8, 2, 15, 3});
    CHECK(p38.source == Source::P3_8);
    CHECK(p38.verdict == PredictedVerdict::defective);
    CHECK(p38.delta_lower_bound == 1);

    const Prediction p37 = predict({2, 8, 4, 9});
    CHECK(p37.source == Source::P3_7);
    CHECK(p37.delta_lower_bound == 36);

    const Prediction l32 = predict({2, 2, 5, 4});
    CHECK(l32.source == Source::L3_2);
    CHECK(l32.verdict == PredictedVerdict::regular_fills);

    const Prediction bf = predict({2, 2, 4, 2});
    CHECK(bf.source == Source::BF);
    CHECK(bf.verdict == PredictedVerdict::defective);

    const Prediction cgg = predict({1, 2, 3, 2});
    CHECK(cgg.source == Source::CGG);
    CHECK(cgg.verdict == PredictedVerdict::defective);

    CHECK(predict({2, 7, 3, 2}).source == Source::P3_4A);
    CHECK(predict({2, 3, 3, 3}).source == Source::P3_4C);
    CHECK(predict({2, 3, 5, 2}).source == Source::P3_5);
    CHECK(predict({2, 3, 4, 2}).source == Source::P3_6B);
    CHECK(predict({2, 3, 4, 2}).delta_lower_bound == 1);
}

TEST_CASE("one point and k = 0") {
    const Prediction one = predict({2, 2, 4, 1});
    CHECK(one.source == Source::L2_3);
    CHECK(one.verdict == PredictedVerdict::regular_nonfill);
    CHECK(predict({3, 2, 4, 1}).verdict == PredictedVerdict::regular_nonfill);
    CHECK(predict({2, 1, 3, 1}).verdict == PredictedVerdict::regular_fills);
    CHECK(predict({0, 2, 2, 2}).source == Source::NONE);
    CHECK(predict({0, 2, 4, 5}).verdict == PredictedVerdict::unknown);
    CHECK(applicable_predictions({2, 2, 2, 3}).empty());
}

TEST_CASE("planar family d = k+2") {
    for (int k = 3; k <= 6; ++k) {
        const auto all = applicable_predictions({k, 2, k + 2, 2});
        bool found = false;
        for (const auto& p : all) found = found || (p.source == Source::C3_3 && p.delta_lower_bound == 1);
        CHECK(found);
        CHECK(predict({k, 2, k + 2, 3}).verdict == PredictedVerdict::regular_fills);
    }
}

TEST_CASE("k = 1 exceptions and proved region") {
    CHECK(predict({1, 4, 2, 2}).verdict == PredictedVerdict::defective);
    CHECK(predict({1, 3, 2, 2}).verdict == PredictedVerdict::regular_fills);
    CHECK(predict({1, 4, 3, 4}).verdict == PredictedVerdict::defective);
    CHECK(predict({1, 5, 3, 5}).verdict != PredictedVerdict::defective);
    CHECK(cgg_proved_region(2, 7, 9));
    CHECK(cgg_proved_region(9, 5, 5));
    CHECK_FALSE(cgg_proved_region(6, 3, 7));
    bool tagged = false;
    for (const auto& p : applicable_predictions({1, 6, 3, 7})) tagged = tagged || (p.source == Source::CGG && p.has_caveat(kCaveatConjectural));
    CHECK(tagged);
    CHECK_FALSE(predict({1, 2, 3, 2}).has_caveat(kCaveatConjectural));
}

TEST_CASE("edge cells carry the d = k+1 formula value") {
    const Prediction p = predict({1, 6, 2, 2});
    CHECK(p.source == Source::CGG);
    CHECK(p.has_caveat(kCaveatK1Edge));
    CHECK(p.formula_note == "P3.4A=3");
    CHECK(format_predicted_delta(p) == "P3.4A=3");
    CHECK(predict({1, 4, 2, 2}).formula_note == "P3.4Bii=fills");
    CHECK(predict({1, 5, 2, 2}).formula_note == "P3.4Bi=2");
    CHECK_FALSE(is_k1_edge({1, 3, 2, 3}));
    CHECK_FALSE(is_k1_edge({2, 4, 3, 2}));
}

TEST_CASE("delta formatting") {
    CHECK(format_predicted_delta(predict({2, 7, 3, 2})) == "=10");
    CHECK(format_predicted_delta(predict({2, 8, 4, 9})) == ">=36");
    CHECK(format_predicted_delta(predict({2, 2, 4, 2})).empty());
    CHECK(format_predicted_delta(predict({2, 2, 5, 4})) == "=0");
}

TEST_CASE("overlap conflicts are reported") {
    CHECK_FALSE(prediction_conflicts(applicable_predictions({1, 2, 3, 2})).empty());
    CHECK(prediction_conflicts(applicable_predictions({2, 7, 3, 2})).empty());
}

TEST_CASE("predict is total and deterministic") {
    for (int k = 0; k <= 6; ++k)
        for (int n = 1; n <= 6; ++n)
            for (int d = k; d <= 2 * k + 4; ++d)
                for (int s = 1; s <= 9; ++s) {
                    const ParameterCell cell{k, n, d, s};
                    const Prediction a = predict(cell);
                    const Prediction b = predict(cell);
                    CHECK(a.source == b.source);
                    CHECK(a.verdict == b.verdict);
                    CHECK(a.delta_exact == b.delta_exact);
                    CHECK(a.delta_lower_bound == b.delta_lower_bound);
                    CHECK((a.source == Source::NONE) == (a.verdict == PredictedVerdict::unknown));
                }
}

TEST_CASE("computed results honor every prediction on the desk grid") {
    SweepConfig config;
    for (int k = 0; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n)
            for (int d = k + 1; d <= 2 * k + 2; ++d)
                for (int s = 1; s <= n + 2; ++s) {
                    const ParameterCell cell{k, n, d, s};
                    if (is_k1_edge(cell)) continue;
                    const CellReport r = evaluate_cell(cell, config);
                    if (r.prediction.source == Source::NONE) continue;
                    CHECK_MESSAGE(r.row.agreement != Agreement::mismatch, cell.to_string() << " " << to_csv_line(r.row));
                }
}
