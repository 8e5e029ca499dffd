#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "oscsec/battery.hpp"
#include "oscsec/fatpoints.hpp"
#include "oscsec/predictions.hpp"
#include "oscsec/survey.hpp"

namespace oscsec::cli {

namespace {

int default_jobs() {
    if (const char* env = std::getenv("OSCSEC_JOBS")) {
        try {
            const int jobs = std::stoi(env);
            if (jobs >= 1) return jobs;
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

struct DimArgs {
    int k = -1, n = -1, d = -1, s = -1;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;
    int trials = 3;
    std::string format = "csv";
};

struct SurveyArgs {
    std::string k = "1..2", n = "2..3", d = "auto", s = "2..5";
    std::vector<std::uint64_t> primes;
    std::uint64_t seed = kDefaultSeed;
    int trials = 3;
    int jobs = 0;
    std::string out;
    std::string format = "csv";
    std::uint64_t budget = kDefaultBudget;
    std::string cache;
    bool timing = false;
};

struct CheckArgs {
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;
    int trials = 3;
    int jobs = 0;
    bool skip_survey = false;
    bool tamper = false;
};

int cmd_dim(const DimArgs& a, std::ostream& out) {
    const ParameterCell cell{a.k, a.n, a.d, a.s};
    cell.validate();
    if (cell.d < cell.k + 1) throw std::invalid_argument("dim needs d >= k+1");
    SweepConfig config;
    config.primes = {a.prime};
    config.seed = a.seed;
    config.trials = a.trials;
    config.budget = std::numeric_limits<std::uint64_t>::max();
    const CellReport report = evaluate_cell(cell, config);
    write_rows(out, {report.row}, parse_format(a.format));

    out << "# affine rank " << report.secant->affine_rank << " of " << cell.ambient_affine() << '\n';
    for (const Prediction& p : report.applicable) {
        out << "# applicable: " << to_string(p.source) << ' ' << to_string(p.verdict);
        if (const auto delta = format_predicted_delta(p); !delta.empty()) out << ' ' << delta;
        if (!p.caveat.empty()) out << " [" << p.caveat << ']';
        out << '\n';
    }
    if (report.prediction.has_caveat(kCaveatK1Edge)) {
        out << "# K1-EDGE: formula " << report.prediction.formula_note << ", computed defect " << report.secant->defect
            << '\n';
    }
    if (report.classifier) {
        const Lemma31Record& c = *report.classifier;
        out << "# fat points: X h0=" << c.x.h0 << " h1=" << c.x.h1 << ", T h0=" << c.t.h0 << " h1=" << c.t.h1
            << ", l(Y)=" << c.length_y << ", cases " << c.fired_cases();
        if (c.predicts_defective()) out << ", defect >= " << c.delta_lower_bound();
        out << '\n';
    }
    if (cell.k == 0) {
        const std::int64_t waring = waring_dim(cell.n, cell.d, cell.s, a.prime, a.seed, a.trials);
        out << "# double points: dim " << waring << " (N - h0), "
            << (waring == report.secant->proj_dim ? "agrees" : "DISAGREES") << '\n';
    }
    return kExitOk;
}

int cmd_survey(const SurveyArgs& a, std::ostream& out, std::ostream& err) {
    SweepConfig config;
    config.k = parse_range(a.k);
    config.n = parse_range(a.n);
    if (a.d != "auto") config.d = parse_range(a.d);
    config.s = parse_range(a.s);
    if (!a.primes.empty()) config.primes = a.primes;
    for (std::uint64_t p : config.primes) static_cast<void>(PrimeField(p));
    config.seed = a.seed;
    if (a.trials < 1) throw std::invalid_argument("--trials must be at least 1");
    config.trials = a.trials;
    config.jobs = a.jobs > 0 ? a.jobs : default_jobs();
    config.format = parse_format(a.format);
    config.budget = a.budget;
    config.cache_path = a.cache;
    config.timing = a.timing;

    std::ofstream file;
    if (!a.out.empty()) {
        file.open(a.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "cannot write " << a.out << '\n';
            return kExitIo;
        }
    }
    const SurveyReport report = run_survey(config);
    std::ostream& rows = a.out.empty() ? out : file;
    write_rows(rows, report.rows, config.format);
    if (!a.out.empty()) {
        file.close();
        if (!file) {
            err << "failed writing " << a.out << '\n';
            return kExitIo;
        }
    }
    write_summary(a.out.empty() ? err : out, report);
    return report.surviving_mismatches == 0 ? kExitOk : kExitMismatch;
}

int cmd_check(const CheckArgs& a, std::ostream& out) {
    BatteryOptions options;
    options.prime = a.prime;
    options.seed = a.seed;
    options.trials = a.trials;
    options.jobs = a.jobs > 0 ? a.jobs : default_jobs();
    options.tamper = a.tamper;
    options.include_survey = !a.skip_survey;
    const auto results = run_battery(options, &out);
    const auto passed = std::count_if(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
    out << passed << '/' << results.size() << " criteria passed\n";
    return all_passed(results) ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Terracini rank computations for secants of osculating Veronese varieties", "oscsec"};
    app.require_subcommand(1);

    DimArgs dim;
    CLI::App* dim_cmd = app.add_subcommand("dim", "Compute one cell and compare with closed-form results");
    dim_cmd->add_option("-k", dim.k, "Osculation order")->required();
    dim_cmd->add_option("-n", dim.n, "Dimension of P^n")->required();
    dim_cmd->add_option("-d", dim.d, "Degree of the embedding")->required();
    dim_cmd->add_option("-s", dim.s, "Number of points")->required();
    dim_cmd->add_option("--prime", dim.prime, "Field characteristic");
    dim_cmd->add_option("--seed", dim.seed, "Master seed");
    dim_cmd->add_option("--trials", dim.trials, "Random trials")->check(CLI::PositiveNumber);
    dim_cmd->add_option("--format", dim.format, "csv, json or md");

    SurveyArgs survey;
    CLI::App* survey_cmd = app.add_subcommand("survey", "Sweep a grid of cells");
    survey_cmd->add_option("--k", survey.k, "Range a..b");
    survey_cmd->add_option("--n", survey.n, "Range a..b");
    survey_cmd->add_option("--d", survey.d, "Range a..b or auto (k+1..2k+2)");
    survey_cmd->add_option("--s", survey.s, "Range a..b");
    survey_cmd->add_option("--prime", survey.primes, "Field characteristic; repeat for the rerun prime");
    survey_cmd->add_option("--seed", survey.seed, "Master seed");
    survey_cmd->add_option("--trials", survey.trials, "Random trials per cell");
    survey_cmd->add_option("--jobs", survey.jobs, "Worker threads (default OSCSEC_JOBS or hardware)");
    survey_cmd->add_option("--out", survey.out, "Output file (default stdout)");
    survey_cmd->add_option("--format", survey.format, "csv, json or md");
    survey_cmd->add_option("--budget", survey.budget, "Max matrix entries per cell");
    survey_cmd->add_option("--cache", survey.cache, "JSON-lines result cache");
    survey_cmd->add_flag("--timing", survey.timing, "Record elapsed_ms (output no longer reproducible)");

    CheckArgs check;
    CLI::App* check_cmd = app.add_subcommand("check-paper", "Run the acceptance battery");
    check_cmd->add_option("--prime", check.prime, "Field characteristic");
    check_cmd->add_option("--seed", check.seed, "Master seed");
    check_cmd->add_option("--trials", check.trials, "Random trials")->check(CLI::PositiveNumber);
    check_cmd->add_option("--jobs", check.jobs, "Workers for the sweep criterion");
    check_cmd->add_flag("--skip-survey", check.skip_survey, "Skip the sweep criterion");
    check_cmd->add_flag("--tamper", check.tamper, "Corrupt one expected value (harness self-test)")->group("");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        if (dim_cmd->parsed()) return cmd_dim(dim, out);
        if (survey_cmd->parsed()) return cmd_survey(survey, out, err);
        return cmd_check(check, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitIo;
    }
}

}  // namespace oscsec::cli
