#include "oscsec/survey.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <exception>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "oscsec/monomial.hpp"

namespace oscsec {

namespace {

using nlohmann::json;

std::string join_primes(const std::vector<std::uint64_t>& primes) {
    std::string out;
    for (std::uint64_t p : primes) {
        if (!out.empty()) out += ';';
        out += std::to_string(p);
    }
    return out;
}

std::vector<std::uint64_t> split_primes(std::string_view text) {
    std::vector<std::uint64_t> out;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = std::min(text.find(';', start), text.size());
        std::uint64_t value = 0;
        std::from_chars(text.data() + start, text.data() + end, value);
        out.push_back(value);
        start = end + 1;
    }
    return out;
}

int parse_int(std::string_view text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    }
    return value;
}

std::string optional_to_string(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

Agreement agreement_from_string(std::string_view text) {
    for (Agreement a : {Agreement::match, Agreement::bound_ok, Agreement::mismatch, Agreement::unpredicted,
                        Agreement::skipped}) {
        if (to_string(a) == text) return a;
    }
    throw std::invalid_argument("unknown agreement tag '" + std::string(text) + "'");
}

Conjecture39 conjecture_from_string(std::string_view text) {
    for (Conjecture39 c : {Conjecture39::consistent, Conjecture39::violation_candidate, Conjecture39::not_applicable}) {
        if (to_string(c) == text) return c;
    }
    throw std::invalid_argument("unknown conjecture39 tag '" + std::string(text) + "'");
}

std::string cache_key(const ParameterCell& cell, const SweepConfig& config) {
    return std::to_string(cell.k) + "," + std::to_string(cell.n) + "," + std::to_string(cell.d) + "," +
           std::to_string(cell.s) + "|" + join_primes(config.primes) + "|" + std::to_string(config.seed) + "|" +
           std::to_string(config.trials) + "|" + std::to_string(config.budget) + "|" + std::string(kCodeVersion);
}

}  // namespace

std::string_view to_string(Agreement a) {
    switch (a) {
        case Agreement::match: return "MATCH";
        case Agreement::bound_ok: return "BOUND-OK";
        case Agreement::mismatch: return "MISMATCH";
        case Agreement::unpredicted: return "UNPREDICTED";
        case Agreement::skipped: return "SKIPPED";
    }
    return "?";
}

bool SurveyRow::k1_edge() const {
    return caveat.find(kCaveatK1Edge) != std::string::npos;
}

Agreement compare(const Prediction& prediction, const SecantResult& computed) {
    switch (prediction.verdict) {
        case PredictedVerdict::unknown:
            return Agreement::unpredicted;
        case PredictedVerdict::regular_fills:
            return computed.verdict == Verdict::regular_fills ? Agreement::match : Agreement::mismatch;
        case PredictedVerdict::regular_nonfill:
            return computed.verdict == Verdict::regular_nonfill ? Agreement::match : Agreement::mismatch;
        case PredictedVerdict::defective:
            break;
    }
    if (computed.verdict != Verdict::defective) return Agreement::mismatch;
    if (prediction.delta_exact) return computed.defect == *prediction.delta_exact ? Agreement::match : Agreement::mismatch;
    if (prediction.delta_lower_bound) {
        return computed.defect >= *prediction.delta_lower_bound ? Agreement::bound_ok : Agreement::mismatch;
    }
    return Agreement::match;
}

IntRange parse_range(std::string_view text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string_view::npos) {
        const int v = parse_int(text);
        return {v, v};
    }
    return {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
}

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::csv;
    if (text == "json") return OutputFormat::json;
    if (text == "md") return OutputFormat::md;
    throw std::invalid_argument("unknown format '" + std::string(text) + "' (csv, json, md)");
}

std::vector<ParameterCell> enumerate_cells(const SweepConfig& config) {
    std::vector<ParameterCell> cells;
    for (int k = std::max(config.k.lo, 0); k <= config.k.hi; ++k) {
        for (int n = std::max(config.n.lo, 1); n <= config.n.hi; ++n) {
            const IntRange d_range = config.d.value_or(IntRange{k + 1, 2 * k + 2});
            for (int d = std::max(d_range.lo, k + 1); d <= d_range.hi; ++d) {
                for (int s = std::max(config.s.lo, 1); s <= config.s.hi; ++s) cells.push_back({k, n, d, s});
            }
        }
    }
    return cells;
}

std::uint64_t cell_cost(const ParameterCell& cell) {
    const std::uint64_t cols = forms_dimension(cell.n, cell.d);
    const std::uint64_t s = static_cast<std::uint64_t>(cell.s);
    const std::uint64_t cone_rows = s * (forms_dimension(cell.n, cell.k) + static_cast<std::uint64_t>(cell.n) + 1);
    const std::uint64_t fat_rows = s * forms_dimension(cell.n, cell.k + 1);
    return std::max(cone_rows, fat_rows) * cols;
}

std::uint64_t rerun_prime(const std::vector<std::uint64_t>& primes) {
    if (primes.size() >= 2) return primes[1];
    const std::uint64_t first = primes.empty() ? kDefaultPrime : primes.front();
    return first == kFallbackPrime ? kDefaultPrime : kFallbackPrime;
}

CellReport evaluate_cell(const ParameterCell& cell, const SweepConfig& config) {
    cell.validate();
    if (config.primes.empty()) throw std::invalid_argument("sweep needs at least one prime");
    const auto started = std::chrono::steady_clock::now();

    CellReport report;
    report.applicable = applicable_predictions(cell);
    report.prediction = report.applicable.empty() ? predict(cell) : report.applicable.front();

    SurveyRow& row = report.row;
    row.cell = cell;
    row.ambient_dim = cell.ambient_dim();
    row.exp_dim_proj = expected_dim(cell);
    row.prediction_source = std::string(to_string(report.prediction.source));
    row.predicted_verdict = std::string(to_string(report.prediction.verdict));
    row.predicted_delta = format_predicted_delta(report.prediction);
    row.caveat = report.prediction.caveat;
    row.primes = {config.primes.front()};
    row.seed = config.seed;
    row.trials = config.trials;

    if (cell_cost(cell) > config.budget) {
        row.verdict = "SKIPPED-BUDGET";
        row.agreement = Agreement::skipped;
        row.conjecture39 = Conjecture39::not_applicable;
        return report;
    }

    const std::uint64_t prime = config.primes.front();
    SecantResult secant = secant_dim(cell, prime, config.seed, config.trials);
    std::optional<Lemma31Record> classifier;
    if (cell.d > cell.k) classifier = lemma31_classify(cell, prime, config.seed, config.trials);

    auto conjecture = [&] {
        return classifier ? conjecture39_check(cell, secant, *classifier) : Conjecture39::not_applicable;
    };
    Agreement agreement = compare(report.prediction, secant);
    Conjecture39 c39 = conjecture();

    if (agreement == Agreement::mismatch || c39 == Conjecture39::violation_candidate) {
        // Randomized evidence of defectivity is one-sided; confirm on a
        // second prime with more trials before reporting.
        const std::uint64_t second = rerun_prime(config.primes);
        secant = merge_evidence(secant, secant_dim(cell, second, config.seed, config.trials * 3));
        if (classifier) {
            classifier = merge_evidence(*classifier, lemma31_classify(cell, second, config.seed, config.trials * 3));
        }
        agreement = compare(report.prediction, secant);
        c39 = conjecture();
    }

    row.computed_dim_proj = secant.proj_dim;
    row.defect = secant.defect;
    row.verdict = std::string(to_string(secant.verdict));
    row.agreement = agreement;
    row.conjecture39 = c39;
    row.primes = secant.primes;
    row.trials = secant.trials;
    if (config.timing) {
        row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started)
                             .count();
    }
    report.secant = std::move(secant);
    report.classifier = std::move(classifier);
    return report;
}

SurveyReport run_survey(const SweepConfig& config) {
    const auto cells = enumerate_cells(config);
    SurveyReport report;
    report.rows.resize(cells.size());
    std::vector<std::vector<std::string>> conflicts(cells.size());
    std::vector<bool> computed(cells.size(), false);

    std::unordered_map<std::string, SurveyRow> cache;
    if (!config.cache_path.empty()) {
        std::ifstream in(config.cache_path);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const json record = json::parse(line, nullptr, false);
            if (record.is_discarded() || !record.contains("key") || !record.contains("row")) continue;
            cache[record["key"].get<std::string>()] = row_from_json_line(record["row"].dump());
        }
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            try {
                conflicts[i] = prediction_conflicts(applicable_predictions(cells[i]));
                if (auto hit = cache.find(cache_key(cells[i], config)); hit != cache.end()) {
                    report.rows[i] = hit->second;
                    report.rows[i].caveat = predict(cells[i]).caveat;
                    if (!config.timing) report.rows[i].elapsed_ms = 0;
                    continue;
                }
                report.rows[i] = evaluate_cell(cells[i], config).row;
                computed[i] = true;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = cells.size();
                return;
            }
        }
    };
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1 || cells.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    if (!config.cache_path.empty()) {
        std::ofstream out(config.cache_path, std::ios::app);
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (!computed[i]) {
                ++report.cache_hits;
                continue;
            }
            json record;
            record["key"] = cache_key(cells[i], config);
            record["row"] = json::parse(to_json_line(report.rows[i]));
            out << record.dump() << '\n';
        }
    }

    // Rows were produced in cell order already; the sort documents the
    // contract independent of how cells are enumerated.
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const SurveyRow& a, const SurveyRow& b) { return a.cell < b.cell; });

    for (const SurveyRow& row : report.rows) {
        ++report.counts[row.agreement];
        if (row.agreement == Agreement::mismatch && !row.k1_edge()) ++report.surviving_mismatches;
        if (row.k1_edge()) {
            report.k1_edge_notes.push_back(row.cell.to_string() + " computed defect " + optional_to_string(row.defect) +
                                           " (" + row.verdict + "), prediction " + row.prediction_source + " " +
                                           row.predicted_verdict + ", formula " + row.predicted_delta);
        }
    }
    for (const auto& list : conflicts) report.prediction_conflicts.insert(report.prediction_conflicts.end(), list.begin(), list.end());

    // Least s filling P^N, per (k, n, d).
    for (std::size_t i = 0; i < report.rows.size();) {
        const ParameterCell& head = report.rows[i].cell;
        LeastFill entry{head.k, head.n, head.d, std::nullopt};
        std::size_t j = i;
        for (; j < report.rows.size() && report.rows[j].cell.k == head.k && report.rows[j].cell.n == head.n &&
               report.rows[j].cell.d == head.d;
             ++j) {
            if (!entry.s && report.rows[j].verdict == to_string(Verdict::regular_fills)) entry.s = report.rows[j].cell.s;
        }
        report.least_fill.push_back(entry);
        i = j;
    }
    for (std::size_t i = 1; i < report.least_fill.size(); ++i) {
        const LeastFill& prev = report.least_fill[i - 1];
        const LeastFill& cur = report.least_fill[i];
        if (prev.k != cur.k || prev.n != cur.n || !prev.s) continue;
        if (!cur.s || *cur.s > *prev.s) {
            report.monotonicity_notes.push_back("k=" + std::to_string(cur.k) + " n=" + std::to_string(cur.n) + ": least s " +
                                                std::to_string(*prev.s) + " at d=" + std::to_string(prev.d) + " but " +
                                                (cur.s ? std::to_string(*cur.s) : std::string("none in range")) +
                                                " at d=" + std::to_string(cur.d));
        }
    }
    return report;
}

std::string to_csv_line(const SurveyRow& r) {
    std::ostringstream out;
    out << r.cell.k << ',' << r.cell.n << ',' << r.cell.d << ',' << r.cell.s << ',' << r.ambient_dim << ','
        << r.exp_dim_proj << ',' << optional_to_string(r.computed_dim_proj) << ',' << optional_to_string(r.defect) << ','
        << r.verdict << ',' << r.prediction_source << ',' << r.predicted_verdict << ',' << r.predicted_delta << ','
        << to_string(r.agreement) << ',' << to_string(r.conjecture39) << ',' << join_primes(r.primes) << ',' << r.seed
        << ',' << r.trials << ',' << r.elapsed_ms;
    return out.str();
}

std::string to_json_line(const SurveyRow& r) {
    json j = json::object();
    j["k"] = r.cell.k;
    j["n"] = r.cell.n;
    j["d"] = r.cell.d;
    j["s"] = r.cell.s;
    j["ambient_dim"] = r.ambient_dim;
    j["exp_dim_proj"] = r.exp_dim_proj;
    j["computed_dim_proj"] = r.computed_dim_proj ? json(*r.computed_dim_proj) : json(nullptr);
    j["defect"] = r.defect ? json(*r.defect) : json(nullptr);
    j["verdict"] = r.verdict;
    j["prediction_source"] = r.prediction_source;
    j["predicted_verdict"] = r.predicted_verdict;
    j["predicted_delta"] = r.predicted_delta;
    j["agreement"] = std::string(to_string(r.agreement));
    j["conjecture39"] = std::string(to_string(r.conjecture39));
    j["prime"] = join_primes(r.primes);
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["elapsed_ms"] = r.elapsed_ms;
    return j.dump();
}

SurveyRow row_from_json_line(std::string_view line) {
    const json j = json::parse(line);
    SurveyRow r;
    r.cell = {j.at("k").get<int>(), j.at("n").get<int>(), j.at("d").get<int>(), j.at("s").get<int>()};
    r.ambient_dim = j.at("ambient_dim").get<std::int64_t>();
    r.exp_dim_proj = j.at("exp_dim_proj").get<std::int64_t>();
    if (!j.at("computed_dim_proj").is_null()) r.computed_dim_proj = j["computed_dim_proj"].get<std::int64_t>();
    if (!j.at("defect").is_null()) r.defect = j["defect"].get<std::int64_t>();
    r.verdict = j.at("verdict").get<std::string>();
    r.prediction_source = j.at("prediction_source").get<std::string>();
    r.predicted_verdict = j.at("predicted_verdict").get<std::string>();
    r.predicted_delta = j.at("predicted_delta").get<std::string>();
    r.agreement = agreement_from_string(j.at("agreement").get<std::string>());
    r.conjecture39 = conjecture_from_string(j.at("conjecture39").get<std::string>());
    r.primes = split_primes(j.at("prime").get<std::string>());
    r.seed = j.at("seed").get<std::uint64_t>();
    r.trials = j.at("trials").get<int>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

void write_rows(std::ostream& out, const std::vector<SurveyRow>& rows, OutputFormat format) {
    switch (format) {
        case OutputFormat::csv:
            out << kCsvHeader << '\n';
            for (const SurveyRow& r : rows) out << to_csv_line(r) << '\n';
            return;
        case OutputFormat::json:
            out << "[\n";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                out << "  " << to_json_line(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
            }
            out << "]\n";
            return;
        case OutputFormat::md: {
            std::vector<std::vector<std::string>> table;
            auto split = [](std::string_view line) {
                std::vector<std::string> cells;
                std::size_t start = 0;
                for (;;) {
                    const std::size_t end = line.find(',', start);
                    cells.emplace_back(line.substr(start, end == std::string_view::npos ? line.npos : end - start));
                    if (end == std::string_view::npos) break;
                    start = end + 1;
                }
                return cells;
            };
            table.push_back(split(kCsvHeader));
            for (const SurveyRow& r : rows) table.push_back(split(to_csv_line(r)));
            std::vector<std::size_t> width(table.front().size(), 3);
            for (const auto& line : table)
                for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
            auto emit = [&](const std::vector<std::string>& line) {
                out << '|';
                for (std::size_t c = 0; c < line.size(); ++c) out << ' ' << std::left << std::setw(static_cast<int>(width[c])) << line[c] << " |";
                out << '\n';
            };
            emit(table.front());
            out << '|';
            for (std::size_t w : width) out << ' ' << std::string(w, '-') << " |";
            out << '\n';
            for (std::size_t i = 1; i < table.size(); ++i) emit(table[i]);
            return;
        }
    }
}

void write_summary(std::ostream& out, const SurveyReport& report) {
    out << "cells: " << report.rows.size();
    if (report.cache_hits > 0) out << " (" << report.cache_hits << " from cache)";
    out << '\n';
    for (Agreement a : {Agreement::match, Agreement::bound_ok, Agreement::mismatch, Agreement::unpredicted,
                        Agreement::skipped}) {
        const auto it = report.counts.find(a);
        out << "  " << to_string(a) << ": " << (it == report.counts.end() ? 0 : it->second) << '\n';
    }
    out << "surviving MISMATCH (outside K1-EDGE): " << report.surviving_mismatches << '\n';
    out << "least s with O^s = P^N:\n";
    for (const LeastFill& lf : report.least_fill) {
        out << "  k=" << lf.k << " n=" << lf.n << " d=" << lf.d << ": "
            << (lf.s ? "s=" + std::to_string(*lf.s) : std::string("none in range")) << '\n';
    }
    if (!report.monotonicity_notes.empty()) {
        out << "least-fill s increasing in d:\n";
        for (const auto& note : report.monotonicity_notes) out << "  " << note << '\n';
    }
    if (!report.prediction_conflicts.empty()) {
        out << "overlapping results in conflict:\n";
        for (const auto& note : report.prediction_conflicts) out << "  " << note << '\n';
    }
    if (!report.k1_edge_notes.empty()) {
        out << "K1-EDGE cells:\n";
        for (const auto& note : report.k1_edge_notes) out << "  " << note << '\n';
    }
}

}  // namespace oscsec
