#include "oscsec/tangent.hpp"

#include <algorithm>
#include <stdexcept>

#include "oscsec/apolarity.hpp"
#include "oscsec/monomial.hpp"
#include "oscsec/seed.hpp"

namespace oscsec {

void ParameterCell::validate() const {
    if (k < 0) throw std::invalid_argument("k must be >= 0 in " + to_string());
    if (n < 1) throw std::invalid_argument("n must be >= 1 in " + to_string());
    if (s < 1) throw std::invalid_argument("s must be >= 1 in " + to_string());
    if (d < k) throw std::invalid_argument("d must be >= k in " + to_string());
}

std::int64_t ParameterCell::ambient_affine() const {
    return static_cast<std::int64_t>(forms_dimension(n, d));
}

std::int64_t ParameterCell::ambient_dim() const { return ambient_affine() - 1; }

std::string ParameterCell::to_string() const {
    return "(k=" + std::to_string(k) + ",n=" + std::to_string(n) + ",d=" + std::to_string(d) +
           ",s=" + std::to_string(s) + ")";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::regular_fills:
            return "regular-fills";
        case Verdict::regular_nonfill:
            return "regular-nonfill";
        case Verdict::defective:
            return "defective";
    }
    return "?";
}

BasisMatrix osculating_space_basis(const Form& linear, int k, int d) {
    if (linear.degree() != 1) throw std::invalid_argument("osculating space needs a linear form");
    if (k < 0 || d < k) throw std::invalid_argument("osculating space needs 0 <= k <= d");
    const Form power = linear_power(linear, d - k);
    std::vector<Form> rows;
    for (const ExponentVector& m : monomial_basis(linear.n(), k)) rows.push_back(multiply_monomial(power, m));
    return BasisMatrix::from_forms(rows);
}

TangentCone tangent_cone(const Form& linear, const Form& osculating, int k, int d) {
    if (d <= k) throw std::invalid_argument("tangent cone needs d >= k+1 (d = k fills the ambient space)");
    if (osculating.degree() != k) throw std::invalid_argument("osculating form must have degree k");
    if (linear.degree() != 1) throw std::invalid_argument("tangent cone needs a linear form");
    if (linear.n() != osculating.n() || linear.field() != osculating.field()) {
        throw std::invalid_argument("tangent cone: L and F live in different rings");
    }
    BasisMatrix basis = osculating_space_basis(linear, k, d);
    const Form lf = multiply(linear_power(linear, d - k - 1), osculating);
    for (int i = 0; i <= linear.n(); ++i) {
        basis.append_row(multiply(lf, Form::variable(linear.n(), i, linear.field())).coefficients());
    }
    return TangentCone{linear, osculating, k, d, std::move(basis)};
}

std::int64_t tangent_cone_rank(int k, int n) {
    return static_cast<std::int64_t>(forms_dimension(n, k)) + n;
}

std::int64_t expected_affine(const ParameterCell& cell) {
    return std::min(cell.ambient_affine(), cell.s * tangent_cone_rank(cell.k, cell.n));
}

std::int64_t expected_dim(const ParameterCell& cell) { return expected_affine(cell) - 1; }

std::vector<TangentCone> draw_cones(const ParameterCell& cell, const PrimeField& field, std::uint64_t master_seed,
                                    int trial) {
    std::vector<TangentCone> cones;
    cones.reserve(static_cast<std::size_t>(cell.s));
    for (int i = 0; i < cell.s; ++i) {
        const Form linear = random_form(
            cell.n, 1, cell_seed(master_seed, cell.k, cell.n, cell.d, cell.s, trial, SeedRole::linear_form, i), field);
        const Form osc = random_form(
            cell.n, cell.k,
            cell_seed(master_seed, cell.k, cell.n, cell.d, cell.s, trial, SeedRole::osculating_form, i), field);
        cones.push_back(tangent_cone(linear, osc, cell.k, cell.d));
    }
    return cones;
}

void finalize(SecantResult& result) {
    const ParameterCell& cell = result.cell;
    result.proj_dim = result.affine_rank - 1;
    result.expdim_proj = expected_dim(cell);
    result.defect = result.expdim_proj - result.proj_dim;
    if (result.defect < 0) throw std::logic_error("rank exceeds the expected dimension for " + cell.to_string());
    if (result.defect > 0) {
        result.verdict = Verdict::defective;
    } else {
        result.verdict = result.proj_dim == cell.ambient_dim() ? Verdict::regular_fills : Verdict::regular_nonfill;
    }
}

SecantResult secant_dim(const ParameterCell& cell, std::uint64_t prime, std::uint64_t master_seed, int trials,
                        const SecantOptions& options) {
    cell.validate();
    if (trials < 1) throw std::invalid_argument("secant_dim needs at least one trial");
    const PrimeField field(prime);
    if (static_cast<std::uint64_t>(cell.d) >= prime) throw std::invalid_argument("prime must exceed d");

    SecantResult result;
    result.cell = cell;
    result.primes = {prime};
    result.master_seed = master_seed;
    result.trials = trials;

    if (cell.d == cell.k) {
        // L^0 F ranges over all of R_k = R_d.
        result.affine_rank = cell.ambient_affine();
        finalize(result);
        return result;
    }

    for (int trial = 0; trial < trials; ++trial) {
        const auto cones = draw_cones(cell, field, master_seed, trial);
        std::vector<BasisMatrix> blocks;
        blocks.reserve(cones.size());
        for (const TangentCone& c : cones) blocks.push_back(c.basis);
        const auto r = static_cast<std::int64_t>(rank(stack(blocks)));
        if (options.check_duality) {
            const auto dual = static_cast<std::int64_t>(dual_codim(cones));
            if (r + dual != cell.ambient_affine()) {
                throw std::logic_error("rank " + std::to_string(r) + " + dual codimension " + std::to_string(dual) +
                                       " != C(n+d,n) for " + cell.to_string());
            }
        }
        result.trial_ranks.push_back(r);
        result.affine_rank = std::max(result.affine_rank, r);
    }
    finalize(result);
    return result;
}

SecantResult merge_evidence(const SecantResult& a, const SecantResult& b) {
    if (a.cell != b.cell) throw std::invalid_argument("merge_evidence: results for different cells");
    SecantResult merged = a;
    for (std::uint64_t p : b.primes) {
        if (std::find(merged.primes.begin(), merged.primes.end(), p) == merged.primes.end()) merged.primes.push_back(p);
    }
    merged.trials = a.trials + b.trials;
    merged.trial_ranks.insert(merged.trial_ranks.end(), b.trial_ranks.begin(), b.trial_ranks.end());
    merged.affine_rank = std::max(a.affine_rank, b.affine_rank);
    finalize(merged);
    return merged;
}

}  // namespace oscsec
