#ifndef OSCSEC_SURVEY_HPP
#define OSCSEC_SURVEY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "oscsec/fatpoints.hpp"
#include "oscsec/predictions.hpp"
#include "oscsec/tangent.hpp"

namespace oscsec {

inline constexpr std::string_view kCodeVersion = "oscsec-1.0.0";
inline constexpr std::uint64_t kDefaultSeed = 20060101;
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

inline constexpr std::string_view kCsvHeader =
    "k,n,d,s,ambient_dim,exp_dim_proj,computed_dim_proj,defect,verdict,prediction_source,predicted_verdict,"
    "predicted_delta,agreement,conjecture39,prime,seed,trials,elapsed_ms";

enum class Agreement { match, bound_ok, mismatch, unpredicted, skipped };

std::string_view to_string(Agreement a);

/// One line of the answer table.
struct SurveyRow {
    ParameterCell cell;
    std::int64_t ambient_dim = 0;
    std::int64_t exp_dim_proj = 0;
    /// Empty for cells skipped by the budget cap.
    std::optional<std::int64_t> computed_dim_proj;
    std::optional<std::int64_t> defect;
    /// regular-fills, regular-nonfill, defective or SKIPPED-BUDGET.
    std::string verdict;
    std::string prediction_source;
    std::string predicted_verdict;
    std::string predicted_delta;
    Agreement agreement = Agreement::unpredicted;
    Conjecture39 conjecture39 = Conjecture39::not_applicable;
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = 0;
    int trials = 0;
    std::int64_t elapsed_ms = 0;
    /// Not part of the table: caveat tags of the prediction.
    std::string caveat;

    bool k1_edge() const;
};

/// Compare a prediction against a computed result.
Agreement compare(const Prediction& prediction, const SecantResult& computed);

/// Inclusive integer range; empty when lo > hi.
struct IntRange {
    int lo = 0;
    int hi = -1;

    bool empty() const { return lo > hi; }
    friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// "a..b" or "a". Throws std::invalid_argument on anything else.
IntRange parse_range(std::string_view text);

enum class OutputFormat { csv, json, md };

OutputFormat parse_format(std::string_view text);

struct SweepConfig {
    IntRange k{1, 2};
    IntRange n{2, 3};
    /// nullopt means d = k+1 .. 2k+2 per k.
    std::optional<IntRange> d;
    IntRange s{2, 5};
    std::vector<std::uint64_t> primes{kDefaultPrime};
    std::uint64_t seed = kDefaultSeed;
    int trials = 3;
    int jobs = 1;
    std::string out_path;
    OutputFormat format = OutputFormat::csv;
    std::uint64_t budget = kDefaultBudget;
    /// Record wall time per cell; off keeps output byte-identical.
    bool timing = false;
    /// Optional JSON-lines result cache.
    std::string cache_path;
};

/// Cells of the sweep in (k, n, d, s) order, restricted to d >= k+1.
std::vector<ParameterCell> enumerate_cells(const SweepConfig& config);

/// Largest matrix (entries) the cell needs: the stacked cones or the
/// (k+2)-fat point condition matrix.
std::uint64_t cell_cost(const ParameterCell& cell);

/// The second prime used for reruns.
std::uint64_t rerun_prime(const std::vector<std::uint64_t>& primes);

/// Everything `dim` computes for a cell.
struct CellReport {
    SurveyRow row;
    std::optional<SecantResult> secant;
    Prediction prediction;
    std::optional<Lemma31Record> classifier;
    std::vector<Prediction> applicable;
};

/// Secant dimension, prediction, fat-point classifier and the defectivity
/// cross-check for one cell. A MISMATCH or VIOLATION-CANDIDATE triggers a rerun
/// with three times the trials on a second prime.
CellReport evaluate_cell(const ParameterCell& cell, const SweepConfig& config);

struct LeastFill {
    int k;
    int n;
    int d;
    std::optional<int> s;  // nullopt: no swept s fills
};

struct SurveyReport {
    std::vector<SurveyRow> rows;
    std::map<Agreement, int> counts;
    std::vector<LeastFill> least_fill;
    std::vector<std::string> monotonicity_notes;
    std::vector<std::string> prediction_conflicts;
    std::vector<std::string> k1_edge_notes;
    int surviving_mismatches = 0;
    int cache_hits = 0;
};

/// Evaluates every cell with `config.jobs` workers; rows come back sorted
/// by (k, n, d, s) regardless of completion order.
SurveyReport run_survey(const SweepConfig& config);

void write_rows(std::ostream& out, const std::vector<SurveyRow>& rows, OutputFormat format);
void write_summary(std::ostream& out, const SurveyReport& report);

std::string to_csv_line(const SurveyRow& row);
std::string to_json_line(const SurveyRow& row);
SurveyRow row_from_json_line(std::string_view line);

}  // namespace oscsec

#endif  // OSCSEC_SURVEY_HPP
