#include "oscsec/battery.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

#include "oscsec/apolarity.hpp"
#include "oscsec/fatpoints.hpp"
#include "oscsec/monomial.hpp"
#include "oscsec/predictions.hpp"
#include "oscsec/seed.hpp"
#include "oscsec/tangent.hpp"

namespace oscsec {

namespace {

// Collects the outcome of the individual checks of one criterion.
class Checks {
public:
    void expect(bool ok, const std::string& what) {
        if (ok) {
            ++passed_;
        } else {
            failures_.push_back(what);
        }
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }

    bool ok() const { return failures_.empty(); }

    std::string summary() const {
        std::ostringstream out;
        if (failures_.empty()) {
            out << passed_ << " checks";
        } else {
            out << failures_.size() << " failed";
            for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) out << (i ? "; " : ": ") << failures_[i];
            if (failures_.size() > 5) out << "; ...";
        }
        for (const auto& n : notes_) out << "; " << n;
        return out.str();
    }

private:
    int passed_ = 0;
    std::vector<std::string> failures_;
    std::vector<std::string> notes_;
};

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<void(Checks&)> run;
};

std::string show(const ParameterCell& c, const SecantResult& r) {
    return c.to_string() + " dim " + std::to_string(r.proj_dim) + " defect " + std::to_string(r.defect);
}

std::vector<Criterion> criteria(const BatteryOptions& o) {
    const std::uint64_t p = o.prime;
    const std::uint64_t seed = o.seed;
    const int trials = o.trials;
    auto secant = [=](int k, int n, int d, int s) { return secant_dim({k, n, d, s}, p, seed, trials); };

    std::vector<Criterion> list;

    list.push_back({1, "tangential Veronese defect for k=1", 2.0, [=](Checks& c) {
                        const auto a = secant(1, 2, 3, 2);
                        const std::int64_t want_dim = o.tamper ? 9 : 8;
                        c.expect(a.proj_dim == want_dim && a.defect == 1, show(a.cell, a) + ", want dim " + std::to_string(want_dim) + " defect 1");
                        const auto b = secant(1, 3, 3, 3);
                        c.expect(b.verdict == Verdict::defective, show(b.cell, b) + ", want defective");
                    }});

    list.push_back({2, "planar k=2 exceptions", 5.0, [=](Checks& c) {
                        const auto a = secant(2, 2, 4, 2);
                        c.expect(a.proj_dim == 13 && a.defect == 1, show(a.cell, a) + ", want dim 13 defect 1");
                        for (auto [s, d] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {3, 5}, {4, 4}}) {
                            const auto r = secant(2, 2, d, s);
                            c.expect(r.defect == 0, show(r.cell, r) + ", want defect 0");
                        }
                    }});

    list.push_back({3, "two points, d=k+1, small expected dimension", 5.0, [=](Checks& c) {
                        const auto r = secant(2, 7, 3, 2);
                        c.expect(r.affine_rank == 76, show(r.cell, r) + ", want affine rank 76");
                        c.expect(r.defect == 10 && delta_34A(2, 7, 2) == 10,
                                 "defect " + std::to_string(r.defect) + " vs closed form " + std::to_string(delta_34A(2, 7, 2)));
                    }});

    list.push_back({4, "d=k+1, expected dimension ambient", 1.0, [=](Checks& c) {
                        const auto a = secant(2, 4, 3, 2);
                        c.expect(a.defect == 4, show(a.cell, a) + ", want defect 4");
                        const auto b = secant(2, 4, 3, 3);
                        c.expect(b.verdict == Verdict::regular_fills && b.proj_dim == 34, show(b.cell, b) + ", want P^34");
                    }});

    list.push_back({5, "d=k+1 with s >= n fills", 1.0, [=](Checks& c) {
                        const auto r = secant(2, 3, 3, 3);
                        c.expect(r.verdict == Verdict::regular_fills && r.proj_dim == 19, show(r.cell, r) + ", want P^19");
                    }});

    list.push_back({6, "regularity for d >= 2k+1", 2.0, [=](Checks& c) {
                        const auto a = secant(2, 2, 5, 3);
                        c.expect(a.verdict == Verdict::regular_fills && a.proj_dim == 20, show(a.cell, a) + ", want P^20");
                        const auto b = secant(2, 3, 5, 2);
                        c.expect(b.proj_dim == 25 && b.defect == 0, show(b.cell, b) + ", want dim 25 defect 0");
                    }});

    list.push_back({7, "defect bounds for k+2 <= d <= 2k", 5.0, [=](Checks& c) {
                        const auto a = secant(2, 2, 4, 2);
                        const auto pa = predict(a.cell);
                        c.expect(a.defect == 1, show(a.cell, a) + ", want defect 1");
                        c.expect(binomial(4, 4) == 1 && a.defect >= 1, "bound C(4,4) on " + a.cell.to_string());
                        const auto b = secant(2, 3, 4, 2);
                        c.expect(b.defect == 1, show(b.cell, b) + ", want defect 1");
                        const auto pb = predict(b.cell);
                        c.expect(pb.delta_lower_bound && b.defect >= *pb.delta_lower_bound && *pb.delta_lower_bound == 1,
                                 "prediction bound on " + b.cell.to_string() + " is " + format_predicted_delta(pb));
                        c.note(a.cell.to_string() + " predicted by " + std::string(to_string(pa.source)));
                    }});

    list.push_back({8, "s = n+1 bound, large case", 60.0, [=](Checks& c) {
                        const auto r = secant(2, 8, 4, 9);
                        const auto pr = predict(r.cell);
                        c.expect(r.defect >= 36, show(r.cell, r) + ", want defect >= 36");
                        c.expect(pr.source == Source::P3_7 && pr.delta_lower_bound == 36,
                                 "prediction " + std::string(to_string(pr.source)) + " " + format_predicted_delta(pr));
                        c.note("computed defect " + std::to_string(r.defect));
                    }});

    list.push_back({9, "s = n+1 bound with ambient expected dimension", 5.0, [=](Checks& c) {
                        const auto r = secant(8, 2, 15, 3);
                        c.expect(r.expdim_proj == 135 && r.cell.ambient_dim() == 135, "expected dim " + std::to_string(r.expdim_proj));
                        c.expect(r.defect >= 1, show(r.cell, r) + ", want defect >= 1");
                        c.note("computed defect " + std::to_string(r.defect));
                    }});

    list.push_back({10, "many points fill for small d", 1.0, [=](Checks& c) {
                        for (const ParameterCell& cell : {ParameterCell{2, 2, 5, 4}, ParameterCell{2, 2, 4, 3}}) {
                            const auto r = secant_dim(cell, p, seed, trials);
                            c.expect(r.verdict == Verdict::regular_fills, show(cell, r) + ", want fills");
                        }
                    }});

    list.push_back({11, "planar family d=k+2", 10.0, [=](Checks& c) {
                        for (int k = 1; k <= 5; ++k) {
                            const ParameterCell two{k, 2, k + 2, 2};
                            const auto r = secant_dim(two, p, seed, trials);
                            c.expect(r.verdict == Verdict::defective && r.defect >= 1, show(two, r) + ", want defective");
                            const auto t = postulation(2, k + 2, {k + 2, k + 2}, p, seed, trials);
                            c.expect(t.h0 == 1, two.to_string() + " h0 of T is " + std::to_string(t.h0) + ", want 1");
                            if (k >= 2) {
                                const ParameterCell three{k, 2, k + 2, 3};
                                const auto r3 = secant_dim(three, p, seed, trials);
                                c.expect(r3.defect == 0, show(three, r3) + ", want regular");
                            }
                        }
                    }});

    list.push_back({12, "double points and k=0", 30.0, [=](Checks& c) {
                        const auto veronese = waring_dim(2, 2, 2, p, seed, trials);
                        c.expect(veronese == 3, "waring_dim(2,2,2) = " + std::to_string(veronese) + ", expected 3");
                        c.expect(waring_dim(2, 4, 5, p, seed, trials) == 13, "waring_dim(2,4,5) != 13");
                        c.expect(waring_dim(1, 3, 2, p, seed, trials) == 3, "waring_dim(1,3,2) != 3");
                        for (int n = 1; n <= 3; ++n) {
                            for (int d = 1; d <= 6; ++d) {
                                for (int s = 1; s <= 6; ++s) {
                                    const auto r = secant_dim({0, n, d, s}, p, seed, trials);
                                    const auto w = waring_dim(n, d, s, p, seed, trials);
                                    c.expect(r.proj_dim == w, show(r.cell, r) + " vs double points " + std::to_string(w));
                                }
                            }
                        }
                    }});

    list.push_back({13, "structural property suites", 120.0, [=](Checks& c) {
                        const PrimeField field(p);
                        // Primal rank against the apolar side on every trial.
                        int duality = 0;
                        for (int k = 0; k <= 3; ++k)
                            for (int n = 1; n <= 3; ++n)
                                for (int d = k + 1; d <= k + 3; ++d)
                                    for (int s = 1; s <= 4; ++s) {
                                        try {
                                            secant_dim({k, n, d, s}, p, seed, trials, SecantOptions{true});
                                            duality += trials;
                                        } catch (const std::logic_error& e) {
                                            c.expect(false, e.what());
                                        }
                                    }
                        c.note(std::to_string(duality) + " duality trials");

                        int draws = 0;
                        for (int k = 0; k <= 3; ++k)
                            for (int n = 1; n <= 3; ++n)
                                for (int d = k + 2; d <= k + 5; ++d) {
                                    c.expect(power_perp_identity(n, d, k, field) && power_perp_identity(n, d, k + 1, field),
                                             "power perp identity at n=" + std::to_string(n) + " d=" + std::to_string(d));
                                    for (int i = 0; i < 20; ++i) {
                                        const Form f = random_form(n, k, derive_seed(seed, {13, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n),
                                                                                            static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(i)}),
                                                                   field);
                                        const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n) + " d=" + std::to_string(d);
                                        c.expect(sandwich_check(k, n, d, f), "sandwich " + at);
                                        c.expect(degree_stability_check(k, n, d, f), "degree stability " + at);
                                        ++draws;
                                    }
                                }
                        c.note(std::to_string(draws) + " sandwich draws");

                        for (int k = 0; k <= 4; ++k)
                            for (int n = 1; n <= 4; ++n)
                                for (int d = k + 1; d <= k + 4; ++d) {
                                    const ParameterCell cell{k, n, d, 1};
                                    for (int i = 0; i < 50; ++i) {
                                        const auto cones = draw_cones(cell, field, derive_seed(seed, {27}), i);
                                        const auto& w = cones.front().basis;
                                        const auto r = static_cast<std::int64_t>(rank(w));
                                        c.expect(r == tangent_cone_rank(k, n), "cone rank " + std::to_string(r) + " at " + cell.to_string());
                                        c.expect(static_cast<std::size_t>(r) + kernel_basis(w).rows() == w.cols(),
                                                 "rank-nullity at " + cell.to_string());
                                    }
                                }

                        std::mt19937_64 rng(derive_seed(seed, {13, 99}));
                        for (int i = 0; i < 200; ++i) {
                            const std::size_t rows = 1 + rng() % 12;
                            const std::size_t cols = 1 + rng() % 12;
                            BasisMatrix m(rows, cols, field);
                            for (std::size_t r = 0; r < rows; ++r)
                                for (std::size_t col = 0; col < cols; ++col)
                                    m.set(r, col, rng() % 3 == 0 ? uniform_residue(rng, field) : 0);
                            c.expect(rank(m) + kernel_basis(m).rows() == cols, "rank-nullity on a random matrix");
                        }
                    }});

    if (o.include_survey) {
        list.push_back({14, "sweep reproducibility and agreement", 600.0, [=](Checks& c) {
                            SweepConfig config;
                            config.k = {0, 3};
                            config.n = {1, 4};
                            config.d = std::nullopt;
                            config.s = {1, 6};
                            config.primes = {p};
                            config.seed = seed;
                            config.trials = trials;

                            auto render = [](const SurveyReport& r) {
                                std::ostringstream out;
                                write_rows(out, r.rows, OutputFormat::csv);
                                return out.str();
                            };
                            config.jobs = 1;
                            const SurveyReport serial = run_survey(config);
                            config.jobs = std::max(2, o.jobs);
                            const SurveyReport parallel = run_survey(config);
                            const SurveyReport again = run_survey(config);
                            const std::string text = render(serial);
                            c.expect(text == render(parallel), "serial and parallel output differ");
                            c.expect(text == render(again), "repeated runs differ");
                            c.expect(serial.surviving_mismatches == 0,
                                     std::to_string(serial.surviving_mismatches) + " MISMATCH rows outside K1-EDGE");
                            for (const SurveyRow& row : serial.rows) {
                                if (row.agreement == Agreement::mismatch && !row.k1_edge()) c.expect(false, "mismatch at " + row.cell.to_string());
                                if (row.k1_edge()) {
                                    c.expect(row.defect.has_value() && !row.predicted_delta.empty(),
                                             "K1-EDGE row " + row.cell.to_string() + " lacks formula or computed defect");
                                }
                            }

                            // Outside the swept n range but named explicitly.
                            const ParameterCell edge{1, 6, 2, 2};
                            const auto r = secant_dim(edge, p, seed, trials);
                            const auto formula = delta_34A(1, 6, 2);
                            c.expect(r.defect == 4 && formula == 3,
                                     edge.to_string() + " formula " + std::to_string(formula) + " computed " + std::to_string(r.defect));
                            c.note(std::to_string(serial.rows.size()) + " cells");
                            c.note(edge.to_string() + ": formula defect " + std::to_string(formula) + ", computed " + std::to_string(r.defect));
                            c.note(std::to_string(serial.k1_edge_notes.size()) + " K1-EDGE rows reported");
                        }});
    }
    return list;
}

}  // namespace

std::vector<CriterionResult> run_battery(const BatteryOptions& options, std::ostream* progress) {
    std::vector<CriterionResult> results;
    for (const Criterion& criterion : criteria(options)) {
        CriterionResult result;
        result.id = criterion.id;
        result.title = criterion.title;
        result.budget_seconds = criterion.budget_seconds;
        Checks checks;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.run(checks);
        } catch (const std::exception& e) {
            checks.expect(false, std::string("exception: ") + e.what());
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = result.seconds < result.budget_seconds;
        result.passed = checks.ok() && in_time;
        result.detail = checks.summary();
        if (!in_time) result.detail += "; over time budget";
        if (progress) *progress << format_result(result) << '\n' << std::flush;
        results.push_back(std::move(result));
    }
    return results;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream out;
    out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << r.id << "] " << r.title << " (" << std::fixed
        << std::setprecision(2) << r.seconds << " s / " << std::setprecision(0) << r.budget_seconds << " s): " << r.detail;
    return out.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
}

}  // namespace oscsec
