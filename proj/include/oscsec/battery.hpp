#ifndef OSCSEC_BATTERY_HPP
#define OSCSEC_BATTERY_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "oscsec/field.hpp"
#include "oscsec/survey.hpp"

namespace oscsec {

struct BatteryOptions {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;
    int trials = 3;
    /// Worker count for the parallel half of the reproducibility sweep.
    int jobs = 4;
    /// Corrupts one expected value; the battery must then fail.
    bool tamper = false;
    /// The sweep criterion is by far the slowest; tests may skip it.
    bool include_survey = true;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

/// Runs the acceptance criteria in order. A criterion passes only when its
/// checks hold and it finishes inside its time budget. Each result is also
/// streamed to `progress` when given.
std::vector<CriterionResult> run_battery(const BatteryOptions& options, std::ostream* progress = nullptr);

/// "PASS  [ 3] title (0.01 s / 5 s): detail"
std::string format_result(const CriterionResult& result);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace oscsec

#endif  // OSCSEC_BATTERY_HPP
