#ifndef OSCSEC_PREDICTIONS_HPP
#define OSCSEC_PREDICTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oscsec/tangent.hpp"

namespace oscsec {

/// Which closed-form result a prediction comes from.
enum class Source {
    L2_3,
    L3_2,
    C3_3,
    P3_4A,
    P3_4Bi,
    P3_4Bii,
    P3_4C,
    P3_5,
    P3_6A,
    P3_6B,
    P3_7,
    P3_8,
    CGG,
    BF,
    NONE,
};

std::string_view to_string(Source source);

enum class PredictedVerdict { regular_fills, regular_nonfill, defective, unknown };

std::string_view to_string(PredictedVerdict verdict);

inline constexpr std::string_view kCaveatK1Edge = "K1-EDGE";
inline constexpr std::string_view kCaveatConjectural = "CONJECTURAL";

struct Prediction {
    ParameterCell cell;
    Source source = Source::NONE;
    PredictedVerdict verdict = PredictedVerdict::unknown;
    std::optional<std::int64_t> delta_exact;
    std::optional<std::int64_t> delta_lower_bound;
    /// Semicolon-separated tags, e.g. "K1-EDGE" or "CONJECTURAL".
    std::string caveat;
    /// For K1-EDGE cells, what the d = k+1 formulas would have said
    /// (e.g. "P3.4A=3" or "P3.4Bii=fills").
    std::string formula_note;

    bool has_caveat(std::string_view tag) const;
};

/// min(N, n + C(k+n, n) - 1), projective.
std::int64_t dim_osculating(int k, int n, int d);

/// s^2 - s + sum_{h=2}^{s} (-1)^h C(s,h) C(k-(h-1)+n, n), with C(a, n) = 0
/// for a < n. Throws std::invalid_argument for s < 2.
std::int64_t delta_34A(int k, int n, int s);

/// d = k+1, s <= n-1, expected dimension ambient. Returns a NONE
/// prediction when those preconditions fail.
Prediction predict_34B(int k, int n, int s);

/// Region where the k = 1 exception list is a theorem rather than a
/// conjecture.
bool cgg_proved_region(int n, int d, int s);

/// k = 1, d = 2 and 2 <= s <= n-1: the d = k+1 relation counts miss the
/// products F_i F_j, so their formulas are unreliable there.
bool is_k1_edge(const ParameterCell& cell);

/// Every result whose hypotheses hold for the cell, strongest first:
/// L2.3 (s = 1); CGG and BF; exact tags P3.4A/B and C3.3; fill tags L3.2,
/// P3.4C and P3.5; bound-only tags P3.6A/B, P3.7 and P3.8. k = 0 with s >= 2
/// lies outside every hypothesis.
std::vector<Prediction> applicable_predictions(const ParameterCell& cell);

/// First entry of applicable_predictions, or a NONE prediction.
Prediction predict(const ParameterCell& cell);

/// Pairs of applicable predictions that cannot both hold (verdicts or
/// exact defects disagree, or a bound exceeds an exact value).
std::vector<std::string> prediction_conflicts(const std::vector<Prediction>& predictions);

/// "=4", ">=1", or "" when the prediction carries no defect value.
std::string format_predicted_delta(const Prediction& prediction);

}  // namespace oscsec

#endif  // OSCSEC_PREDICTIONS_HPP
