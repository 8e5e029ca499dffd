#include "oscsec/fatpoints.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "oscsec/monomial.hpp"
#include "oscsec/seed.hpp"

namespace oscsec {

namespace {

// Multi-indices over the n affine variables x_0..x_{n-1} of total degree t.
std::vector<std::vector<int>> affine_directions(int n, int t) {
    if (n == 1) return {{t}};
    std::vector<std::vector<int>> out;
    for (const ExponentVector& e : monomial_basis(n - 1, t)) out.emplace_back(e.exponents().begin(), e.exponents().end());
    return out;
}

}  // namespace

std::int64_t FatPointScheme::length() const {
    std::int64_t total = 0;
    for (int m : multiplicities) total += static_cast<std::int64_t>(forms_dimension(n, m - 1));
    return total;
}

FatPointScheme random_fat_points(int n, const std::vector<int>& multiplicities, const PrimeField& field,
                                 std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("fat points need n >= 1");
    for (int m : multiplicities) {
        if (m < 1) throw std::invalid_argument("fat point multiplicities must be positive");
    }
    FatPointScheme scheme{n, field, {}, multiplicities};
    std::mt19937_64 rng(seed);
    std::set<std::vector<Residue>> seen;
    while (scheme.points.size() < multiplicities.size()) {
        std::vector<Residue> p(static_cast<std::size_t>(n) + 1, 1);
        for (int v = 0; v < n; ++v) p[static_cast<std::size_t>(v)] = uniform_residue(rng, field);
        if (seen.insert(p).second) scheme.points.push_back(std::move(p));
    }
    return scheme;
}

BasisMatrix condition_matrix(const FatPointScheme& scheme, int d) {
    const int n = scheme.n;
    const PrimeField& field = scheme.field;
    if (d < 0) throw std::invalid_argument("condition_matrix needs d >= 0");
    if (static_cast<std::uint64_t>(d) >= field.modulus()) throw std::invalid_argument("condition_matrix needs p > d");
    if (scheme.points.size() != scheme.multiplicities.size()) {
        throw std::invalid_argument("fat point scheme has mismatched points and multiplicities");
    }
    {
        std::set<std::vector<Residue>> distinct(scheme.points.begin(), scheme.points.end());
        if (distinct.size() != scheme.points.size()) throw std::invalid_argument("fat points must be pairwise distinct");
    }

    const auto basis = monomial_basis(n, d);
    BasisMatrix out(0, basis.size(), field);
    std::vector<Residue> row(basis.size());
    // powers[v][e] = P_v^e
    std::vector<std::vector<Residue>> powers(static_cast<std::size_t>(n) + 1,
                                             std::vector<Residue>(static_cast<std::size_t>(d) + 1));
    for (std::size_t i = 0; i < scheme.points.size(); ++i) {
        const auto& point = scheme.points[i];
        if (point.size() != static_cast<std::size_t>(n) + 1) throw std::invalid_argument("point has the wrong dimension");
        for (std::size_t v = 0; v < powers.size(); ++v) {
            powers[v][0] = 1;
            for (int e = 1; e <= d; ++e) powers[v][static_cast<std::size_t>(e)] = field.mul(powers[v][static_cast<std::size_t>(e) - 1], point[v]);
        }
        for (int order = 0; order < scheme.multiplicities[i]; ++order) {
            for (const auto& alpha : affine_directions(n, order)) {
                for (std::size_t col = 0; col < basis.size(); ++col) {
                    Residue value = 1;
                    for (std::size_t v = 0; v <= static_cast<std::size_t>(n) && value != 0; ++v) {
                        const int e = basis[col][v];
                        const int a = v < alpha.size() ? alpha[v] : 0;
                        if (e < a) {
                            value = 0;
                            break;
                        }
                        for (int t = 0; t < a; ++t) value = field.mul(value, static_cast<Residue>(e - t));
                        value = field.mul(value, powers[v][static_cast<std::size_t>(e - a)]);
                    }
                    row[col] = value;
                }
                out.append_row(row);
            }
        }
    }
    return out;
}

PostulationResult postulation_from_rank(int n, int d, std::int64_t length, std::int64_t rank) {
    PostulationResult r;
    r.ambient = static_cast<std::int64_t>(forms_dimension(n, d));
    r.length = length;
    r.rank = rank;
    r.h0 = r.ambient - rank;
    r.h1 = length - rank;
    r.exp_h0 = std::max<std::int64_t>(0, r.ambient - length);
    r.exp_h1 = std::max<std::int64_t>(0, length - r.ambient);
    r.regular = rank == std::min(length, r.ambient);
    return r;
}

PostulationResult postulation(int n, int d, const std::vector<int>& multiplicities, std::uint64_t prime,
                              std::uint64_t seed, int trials) {
    if (trials < 1) throw std::invalid_argument("postulation needs at least one trial");
    const PrimeField field(prime);
    std::int64_t best = 0;
    std::int64_t length = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const auto scheme = random_fat_points(
            n, multiplicities, field,
            derive_seed(seed, {static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(SeedRole::fat_point)}));
        length = scheme.length();
        best = std::max(best, static_cast<std::int64_t>(rank(condition_matrix(scheme, d))));
    }
    return postulation_from_rank(n, d, length, best);
}

std::int64_t waring_dim(int n, int d, int s, std::uint64_t prime, std::uint64_t seed, int trials) {
    if (s < 1) throw std::invalid_argument("waring_dim needs s >= 1");
    const PostulationResult r = postulation(n, d, std::vector<int>(static_cast<std::size_t>(s), 2), prime, seed, trials);
    return r.ambient - 1 - r.h0;
}

std::string_view to_string(CaseStatus status) {
    switch (status) {
        case CaseStatus::fired:
            return "fired";
        case CaseStatus::not_fired:
            return "not-fired";
        case CaseStatus::not_applicable:
            return "n/a";
    }
    return "?";
}

std::int64_t Lemma31Record::delta_lower_bound() const {
    return std::max(c_bound.value_or(0), d_bound.value_or(0));
}

std::string Lemma31Record::fired_cases() const {
    std::string out;
    auto add = [&out](const char* tag) {
        if (!out.empty()) out += '+';
        out += tag;
    };
    if (a == CaseStatus::fired) add("a");
    if (b == CaseStatus::fired) add("b");
    if (c) add("c");
    if (d) add("d");
    return out.empty() ? "none" : out;
}

Lemma31Record lemma31_classify(const ParameterCell& cell, std::uint64_t prime, std::uint64_t seed, int trials) {
    cell.validate();
    if (cell.d <= cell.k) throw std::invalid_argument("lemma31_classify needs d >= k+1 in " + cell.to_string());
    const auto s = static_cast<std::size_t>(cell.s);
    const std::uint64_t points_seed =
        derive_seed(seed, {static_cast<std::uint64_t>(cell.k), static_cast<std::uint64_t>(cell.n),
                           static_cast<std::uint64_t>(cell.d), static_cast<std::uint64_t>(cell.s),
                           static_cast<std::uint64_t>(SeedRole::fat_point)});

    // Same seed, so X and T are supported on the same points.
    const PostulationResult x = postulation(cell.n, cell.d, std::vector<int>(s, cell.k + 1), prime, points_seed, trials);
    const PostulationResult t = postulation(cell.n, cell.d, std::vector<int>(s, cell.k + 2), prime, points_seed, trials);
    return classify_postulations(cell, x, t);
}

Lemma31Record classify_postulations(const ParameterCell& cell, const PostulationResult& x, const PostulationResult& t) {
    Lemma31Record rec;
    rec.cell = cell;
    rec.x = x;
    rec.t = t;

    const std::int64_t ambient = cell.ambient_affine();
    rec.length_y = cell.s * tangent_cone_rank(cell.k, cell.n);
    rec.exp_h0_y = std::max<std::int64_t>(0, ambient - rec.length_y);
    rec.exp_h1_y = std::max<std::int64_t>(0, rec.length_y - ambient);

    const auto s64 = static_cast<std::int64_t>(cell.s);
    if (ambient >= s64 * static_cast<std::int64_t>(forms_dimension(cell.n, cell.k + 1))) {
        rec.a = rec.t.h1 == 0 ? CaseStatus::fired : CaseStatus::not_fired;
    }
    if (ambient <= s64 * static_cast<std::int64_t>(forms_dimension(cell.n, cell.k))) {
        rec.b = rec.x.h0 == 0 ? CaseStatus::fired : CaseStatus::not_fired;
    }
    if (rec.x.h1 > rec.exp_h1_y) {
        rec.c = true;
        rec.c_bound = rec.x.h1 - rec.exp_h1_y;
    }
    if (rec.t.h0 > rec.exp_h0_y) {
        rec.d = true;
        rec.d_bound = rec.t.h0 - rec.exp_h0_y;
    }
    return rec;
}

Lemma31Record merge_evidence(const Lemma31Record& a, const Lemma31Record& b) {
    if (a.cell != b.cell) throw std::invalid_argument("merge_evidence: classifier records for different cells");
    const ParameterCell& c = a.cell;
    const auto x = postulation_from_rank(c.n, c.d, a.x.length, std::max(a.x.rank, b.x.rank));
    const auto t = postulation_from_rank(c.n, c.d, a.t.length, std::max(a.t.rank, b.t.rank));
    return classify_postulations(c, x, t);
}

std::string_view to_string(Conjecture39 status) {
    switch (status) {
        case Conjecture39::consistent:
            return "CONSISTENT";
        case Conjecture39::violation_candidate:
            return "VIOLATION-CANDIDATE";
        case Conjecture39::not_applicable:
            return "N/A";
    }
    return "?";
}

Conjecture39 conjecture39_check(const ParameterCell& cell, const SecantResult& secant, const Lemma31Record& classifier) {
    if (secant.cell != cell || classifier.cell != cell) {
        throw std::invalid_argument("conjecture39_check: records belong to different cells");
    }
    if (secant.verdict == Verdict::defective && !classifier.predicts_defective()) {
        return Conjecture39::violation_candidate;
    }
    return Conjecture39::consistent;
}

}  // namespace oscsec
