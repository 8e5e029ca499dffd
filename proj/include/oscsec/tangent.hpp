#ifndef OSCSEC_TANGENT_HPP
#define OSCSEC_TANGENT_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oscsec/field.hpp"
#include "oscsec/form.hpp"
#include "oscsec/matrix.hpp"

namespace oscsec {

/// One instance of the problem: the s-th secant variety of the k-th
/// osculating variety of the degree-d Veronese embedding of P^n.
struct ParameterCell {
    int k = 0;
    int n = 1;
    int d = 1;
    int s = 1;

    /// Throws std::invalid_argument unless k >= 0, n >= 1, s >= 1, d >= k.
    void validate() const;

    /// N = C(n+d, n) - 1.
    std::int64_t ambient_dim() const;
    /// C(n+d, n).
    std::int64_t ambient_affine() const;

    std::string to_string() const;

    friend auto operator<=>(const ParameterCell&, const ParameterCell&) = default;
};

enum class Verdict { regular_fills, regular_nonfill, defective };

std::string_view to_string(Verdict v);

/// Affine cone over the tangent space of O_{k,n,d} at L^{d-k} F: rows
/// L^{d-k} m for each monomial m of R_k, then L^{d-k-1} F x_i.
struct TangentCone {
    Form linear;
    Form osculating;
    int k;
    int d;
    BasisMatrix basis;
};

/// Rows L^{d-k} m, m running over the degree-k monomials.
BasisMatrix osculating_space_basis(const Form& linear, int k, int d);

/// Throws std::invalid_argument if d <= k or deg F != k.
TangentCone tangent_cone(const Form& linear, const Form& osculating, int k, int d);

/// Generic rank of a single tangent cone, C(k+n, n) + n.
std::int64_t tangent_cone_rank(int k, int n);

/// min(C(n+d,n) - 1, s C(k+n,n) + s n - 1), projective.
std::int64_t expected_dim(const ParameterCell& cell);
/// Affine version of expected_dim.
std::int64_t expected_affine(const ParameterCell& cell);

struct SecantResult {
    ParameterCell cell;
    std::int64_t affine_rank = 0;
    std::int64_t proj_dim = 0;
    std::int64_t expdim_proj = 0;
    std::int64_t defect = 0;
    Verdict verdict = Verdict::regular_nonfill;
    std::vector<std::uint64_t> primes;
    std::uint64_t master_seed = 0;
    int trials = 0;
    std::vector<std::int64_t> trial_ranks;
};

struct SecantOptions {
    /// Recompute each trial's rank through the apolar side and throw
    /// std::logic_error if rank + dual codimension != C(n+d, n).
    bool check_duality = false;
};

/// The s generic tangent cones of one trial.
std::vector<TangentCone> draw_cones(const ParameterCell& cell, const PrimeField& field, std::uint64_t master_seed,
                                    int trial);

/// Terracini: dim O^s = rank of the stacked tangent cones minus one, with
/// the rank maximized over independent random trials.
SecantResult secant_dim(const ParameterCell& cell, std::uint64_t prime, std::uint64_t master_seed, int trials,
                        const SecantOptions& options = {});

/// Fold evidence from another run of the same cell (e.g. a second prime):
/// the affine rank becomes the maximum and derived fields are recomputed.
SecantResult merge_evidence(const SecantResult& a, const SecantResult& b);

/// Recomputes proj_dim, defect and verdict from affine_rank.
void finalize(SecantResult& result);

}  // namespace oscsec

#endif  // OSCSEC_TANGENT_HPP
