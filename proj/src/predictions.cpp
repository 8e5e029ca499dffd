#include "oscsec/predictions.hpp"

#include <algorithm>
#include <stdexcept>

#include "oscsec/monomial.hpp"

namespace oscsec {

namespace {

using i64 = std::int64_t;

i64 C(i64 a, i64 b) { return binomial_or_zero(a, b); }

// Affine sizes: R = C(n+d, n), A = s (C(k+n, n) + n).
i64 ambient(const ParameterCell& c) { return C(c.n + c.d, c.n); }
i64 secant_params(const ParameterCell& c) { return c.s * (C(c.k + c.n, c.n) + c.n); }
bool expected_fills(const ParameterCell& c) { return secant_params(c) >= ambient(c); }

PredictedVerdict regular_verdict(const ParameterCell& c) {
    return expected_fills(c) ? PredictedVerdict::regular_fills : PredictedVerdict::regular_nonfill;
}

Prediction make(const ParameterCell& cell, Source source, PredictedVerdict verdict) {
    Prediction p;
    p.cell = cell;
    p.source = source;
    p.verdict = verdict;
    if (verdict == PredictedVerdict::regular_fills || verdict == PredictedVerdict::regular_nonfill) p.delta_exact = 0;
    return p;
}

Prediction defective_exact(const ParameterCell& cell, Source source, i64 delta) {
    Prediction p = make(cell, source, PredictedVerdict::defective);
    p.delta_exact = delta;
    return p;
}

Prediction defective_bound(const ParameterCell& cell, Source source, i64 bound) {
    Prediction p = make(cell, source, PredictedVerdict::defective);
    p.delta_lower_bound = bound;
    return p;
}

std::optional<Prediction> rule_cgg(const ParameterCell& c) {
    if (c.k != 1 || c.s < 2 || c.d < 2) return std::nullopt;
    const bool exception = (c.d == 2 && c.n >= 2 * c.s) || (c.d == 3 && c.n == c.s && c.n >= 2 && c.n <= 4);
    Prediction p = exception ? make(c, Source::CGG, PredictedVerdict::defective) : make(c, Source::CGG, regular_verdict(c));
    if (!cgg_proved_region(c.n, c.d, c.s)) p.caveat = std::string(kCaveatConjectural);
    return p;
}

std::optional<Prediction> rule_bf(const ParameterCell& c) {
    if (c.k != 2 || c.n != 2 || c.s < 2 || c.d < 3) return std::nullopt;
    if (c.s == 2 && c.d == 4) return make(c, Source::BF, PredictedVerdict::defective);
    return make(c, Source::BF, regular_verdict(c));
}

std::optional<Prediction> rule_34AB(const ParameterCell& c) {
    if (c.d != c.k + 1 || c.s < 2 || c.s > c.n - 1) return std::nullopt;
    if (!expected_fills(c)) return defective_exact(c, Source::P3_4A, delta_34A(c.k, c.n, c.s));
    Prediction p = predict_34B(c.k, c.n, c.s);
    if (p.source == Source::NONE) return std::nullopt;
    return p;
}

std::optional<Prediction> rule_c33(const ParameterCell& c) {
    if (c.n != 2 || c.k < 1 || c.d != c.k + 2 || c.s < 2) return std::nullopt;
    if (c.s == 2) return defective_bound(c, Source::C3_3, 1);
    return make(c, Source::C3_3, regular_verdict(c));
}

std::optional<Prediction> rule_l32(const ParameterCell& c) {
    if (c.s < c.n + 1 || c.d < c.k + 1) return std::nullopt;
    const i64 j = c.s >= c.n + 2 ? 2 : 1;
    // d < k+1 + j (k+1)/n, cleared of the denominator.
    if (static_cast<i64>(c.n) * c.d < (static_cast<i64>(c.n) + j) * (c.k + 1)) {
        return make(c, Source::L3_2, PredictedVerdict::regular_fills);
    }
    return std::nullopt;
}

std::optional<Prediction> rule_34C(const ParameterCell& c) {
    if (c.d != c.k + 1 || c.s < 2 || c.s < c.n) return std::nullopt;
    return make(c, Source::P3_4C, PredictedVerdict::regular_fills);
}

std::optional<Prediction> rule_35(const ParameterCell& c) {
    if (c.s < 2 || c.s > c.n + 1 || c.d < 2 * c.k + 1) return std::nullopt;
    return make(c, Source::P3_5, regular_verdict(c));
}

std::optional<Prediction> rule_36(const ParameterCell& c) {
    if (c.s < 2 || c.s > c.n || c.d < c.k + 2 || c.d > 2 * c.k) return std::nullopt;
    if (expected_fills(c)) return defective_bound(c, Source::P3_6A, C(c.n - c.s + c.d, c.d));
    return defective_bound(c, Source::P3_6B, C(c.s, 2) * C(2 * c.k - c.d + c.n, c.n));
}

std::optional<Prediction> rule_37(const ParameterCell& c) {
    if (c.s != c.n + 1 || c.d < c.k + 2 || c.d > 2 * c.k || expected_fills(c)) return std::nullopt;
    return defective_bound(c, Source::P3_7, C(c.n + 1, 2) * C(2 * c.k - c.d + c.n, c.n));
}

std::optional<Prediction> rule_38(const ParameterCell& c) {
    if (c.s != c.n + 1 || c.d <= c.k + 2 || c.d > 2 * c.k || !expected_fills(c)) return std::nullopt;
    // n >= (k+2)/(d-k-2), cleared of the denominator (d-k-2 > 0 here).
    if (static_cast<i64>(c.n) * (c.d - c.k - 2) < c.k + 2) return std::nullopt;
    return defective_bound(c, Source::P3_8, C(static_cast<i64>(c.n + 1) * (c.d - c.k - 1) - (c.d + 1), c.n));
}

std::string verdict_or_delta(const Prediction& p) {
    if (p.delta_exact && p.verdict == PredictedVerdict::defective) return std::to_string(*p.delta_exact);
    if (p.verdict == PredictedVerdict::regular_fills) return "fills";
    if (p.verdict == PredictedVerdict::defective && p.delta_lower_bound) return ">=" + std::to_string(*p.delta_lower_bound);
    return std::string(to_string(p.verdict));
}

}  // namespace

std::string_view to_string(Source source) {
    switch (source) {
        case Source::L2_3: return "L2.3";
        case Source::L3_2: return "L3.2";
        case Source::C3_3: return "C3.3";
        case Source::P3_4A: return "P3.4A";
        case Source::P3_4Bi: return "P3.4Bi";
        case Source::P3_4Bii: return "P3.4Bii";
        case Source::P3_4C: return "P3.4C";
        case Source::P3_5: return "P3.5";
        case Source::P3_6A: return "P3.6A";
        case Source::P3_6B: return "P3.6B";
        case Source::P3_7: return "P3.7";
        case Source::P3_8: return "P3.8";
        case Source::CGG: return "CGG";
        case Source::BF: return "BF";
        case Source::NONE: return "NONE";
    }
    return "?";
}

std::string_view to_string(PredictedVerdict verdict) {
    switch (verdict) {
        case PredictedVerdict::regular_fills: return "regular-fills";
        case PredictedVerdict::regular_nonfill: return "regular-nonfill";
        case PredictedVerdict::defective: return "defective";
        case PredictedVerdict::unknown: return "unknown";
    }
    return "?";
}

bool Prediction::has_caveat(std::string_view tag) const {
    std::size_t start = 0;
    while (start <= caveat.size()) {
        const std::size_t end = std::min(caveat.find(';', start), caveat.size());
        if (std::string_view(caveat).substr(start, end - start) == tag) return true;
        start = end + 1;
    }
    return false;
}

std::int64_t dim_osculating(int k, int n, int d) {
    if (d < k) throw std::invalid_argument("dim_osculating needs d >= k");
    return std::min<i64>(C(n + d, n) - 1, n + C(k + n, n) - 1);
}

std::int64_t delta_34A(int k, int n, int s) {
    if (s < 2) throw std::invalid_argument("delta_34A needs s >= 2");
    i64 t = 0;
    for (int h = 2; h <= s; ++h) {
        const i64 term = C(s, h) * C(k - (h - 1) + n, n);
        t += (h % 2 == 0) ? term : -term;
    }
    return static_cast<i64>(s) * s - s + t;
}

Prediction predict_34B(int k, int n, int s) {
    const int d = k + 1;
    const ParameterCell cell{k, n, d, s};
    if (k < 0 || n < 1 || s < 2 || s > n - 1 || !expected_fills(cell)) return make(cell, Source::NONE, PredictedVerdict::unknown);
    // s < C(n-s+d, d-1) / d, cleared of the denominator.
    if (static_cast<i64>(s) * d < C(n - s + d, d - 1)) {
        return defective_exact(cell, Source::P3_4Bi, C(n - s + d, d) - static_cast<i64>(s) * (n - s + 1));
    }
    return make(cell, Source::P3_4Bii, PredictedVerdict::regular_fills);
}

bool cgg_proved_region(int n, int d, int s) {
    return s <= 5 || d == 2 || (d >= 3 && n >= s + 1) || (d >= 4 && s == n) ||
           3 * static_cast<i64>(s) >= C(n + 2, 2) + 3 || n == 2 || n == 3;
}

bool is_k1_edge(const ParameterCell& cell) {
    return cell.k == 1 && cell.d == 2 && cell.s >= 2 && cell.s <= cell.n - 1;
}

std::vector<Prediction> applicable_predictions(const ParameterCell& cell) {
    cell.validate();
    std::vector<Prediction> out;
    if (cell.d <= cell.k) return out;
    if (cell.s == 1) {
        const bool fills = dim_osculating(cell.k, cell.n, cell.d) == cell.ambient_dim();
        out.push_back(make(cell, Source::L2_3, fills ? PredictedVerdict::regular_fills : PredictedVerdict::regular_nonfill));
        return out;
    }
    if (cell.k == 0) return out;

    using Rule = std::optional<Prediction> (*)(const ParameterCell&);
    static constexpr Rule kSpecialized[] = {rule_34AB, rule_c33, rule_l32, rule_34C, rule_35,
                                            rule_36,   rule_37,  rule_38};
    std::vector<Prediction> specialized;
    for (Rule rule : kSpecialized) {
        if (auto p = rule(cell)) specialized.push_back(std::move(*p));
    }

    std::optional<Prediction> sharp = rule_cgg(cell);
    if (!sharp) sharp = rule_bf(cell);
    if (!sharp) {
        out = std::move(specialized);
    } else if (sharp->verdict == PredictedVerdict::defective) {
        out.push_back(std::move(*sharp));
        out.insert(out.end(), specialized.begin(), specialized.end());
    } else {
        // A regular CGG/BF verdict is authoritative, but a specialized result
        // that agrees with it is the more informative source.
        std::vector<Prediction> rest;
        for (Prediction& p : specialized) {
            (p.verdict == sharp->verdict ? out : rest).push_back(std::move(p));
        }
        out.push_back(std::move(*sharp));
        out.insert(out.end(), rest.begin(), rest.end());
    }

    if (is_k1_edge(cell) && !out.empty()) {
        Prediction& head = out.front();
        head.caveat = head.caveat.empty() ? std::string(kCaveatK1Edge) : std::string(kCaveatK1Edge) + ";" + head.caveat;
        for (const Prediction& p : out) {
            if (p.source == Source::P3_4A || p.source == Source::P3_4Bi || p.source == Source::P3_4Bii) {
                head.formula_note = std::string(to_string(p.source)) + "=" + verdict_or_delta(p);
            }
        }
    }
    return out;
}

Prediction predict(const ParameterCell& cell) {
    auto all = applicable_predictions(cell);
    if (all.empty()) return make(cell, Source::NONE, PredictedVerdict::unknown);
    return all.front();
}

std::vector<std::string> prediction_conflicts(const std::vector<Prediction>& predictions) {
    std::vector<std::string> out;
    auto is_regular = [](PredictedVerdict v) {
        return v == PredictedVerdict::regular_fills || v == PredictedVerdict::regular_nonfill;
    };
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        for (std::size_t j = i + 1; j < predictions.size(); ++j) {
            const Prediction& p = predictions[i];
            const Prediction& q = predictions[j];
            bool clash = false;
            if ((p.verdict == PredictedVerdict::defective && is_regular(q.verdict)) ||
                (q.verdict == PredictedVerdict::defective && is_regular(p.verdict))) {
                clash = true;
            } else if (p.delta_exact && q.delta_exact && *p.delta_exact != *q.delta_exact) {
                clash = true;
            } else if (p.delta_exact && q.delta_lower_bound && *p.delta_exact < *q.delta_lower_bound) {
                clash = true;
            } else if (q.delta_exact && p.delta_lower_bound && *q.delta_exact < *p.delta_lower_bound) {
                clash = true;
            }
            if (clash) {
                out.push_back(p.cell.to_string() + " " + std::string(to_string(p.source)) + "(" + verdict_or_delta(p) +
                              ") vs " + std::string(to_string(q.source)) + "(" + verdict_or_delta(q) + ")");
            }
        }
    }
    return out;
}

std::string format_predicted_delta(const Prediction& prediction) {
    std::string out;
    if (prediction.delta_exact) {
        out = "=" + std::to_string(*prediction.delta_exact);
    } else if (prediction.delta_lower_bound) {
        out = ">=" + std::to_string(*prediction.delta_lower_bound);
    }
    if (!prediction.formula_note.empty()) {
        if (!out.empty()) out += ";";
        out += prediction.formula_note;
    }
    return out;
}

}  // namespace oscsec
