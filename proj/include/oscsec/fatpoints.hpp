#ifndef OSCSEC_FATPOINTS_HPP
#define OSCSEC_FATPOINTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oscsec/field.hpp"
#include "oscsec/matrix.hpp"
#include "oscsec/tangent.hpp"

namespace oscsec {

/// A union of fat points m_i P_i in P^n. Points are stored in the affine
/// chart x_n = 1.
struct FatPointScheme {
    int n = 1;
    PrimeField field;
    std::vector<std::vector<Residue>> points;
    std::vector<int> multiplicities;

    /// Sum of C(m_i - 1 + n, n).
    std::int64_t length() const;
};

/// `multiplicities.size()` uniformly random points of the chart x_n = 1,
/// redrawn until pairwise distinct. Deterministic in the seed.
FatPointScheme random_fat_points(int n, const std::vector<int>& multiplicities, const PrimeField& field,
                                 std::uint64_t seed);

/// One row per (point, alpha) with alpha over x_0..x_{n-1} and
/// |alpha| <= m - 1; the entry in monomial column J is (d^alpha x^J)(P).
/// Throws std::invalid_argument on coincident points or p <= d.
BasisMatrix condition_matrix(const FatPointScheme& scheme, int d);

/// h^0 and h^1 of the ideal sheaf twisted by d, with the expected values.
struct PostulationResult {
    std::int64_t h0 = 0;
    std::int64_t h1 = 0;
    std::int64_t length = 0;
    std::int64_t ambient = 0;  // C(n+d, n)
    std::int64_t rank = 0;
    bool regular = false;
    std::int64_t exp_h0 = 0;
    std::int64_t exp_h1 = 0;
};

PostulationResult postulation_from_rank(int n, int d, std::int64_t length, std::int64_t rank);

/// Generic fat points with the given multiplicities; the rank of the
/// condition matrix is maximized over `trials` independent point draws.
PostulationResult postulation(int n, int d, const std::vector<int>& multiplicities, std::uint64_t prime,
                              std::uint64_t seed, int trials);

/// Projective dimension of the s-secant variety of the Veronese X_{n,d},
/// N - h^0 of s generic double points.
std::int64_t waring_dim(int n, int d, int s, std::uint64_t prime, std::uint64_t seed, int trials);

/// a) and b) carry a side inequality on C(n+d, n); when it fails the case
/// is not applicable rather than false.
enum class CaseStatus { fired, not_fired, not_applicable };

std::string_view to_string(CaseStatus status);

struct Lemma31Record {
    ParameterCell cell;
    PostulationResult x;  // s (k+1)-fat points
    PostulationResult t;  // s (k+2)-fat points
    std::int64_t length_y = 0;
    std::int64_t exp_h0_y = 0;
    std::int64_t exp_h1_y = 0;
    CaseStatus a = CaseStatus::not_applicable;
    CaseStatus b = CaseStatus::not_applicable;
    bool c = false;
    bool d = false;
    std::optional<std::int64_t> c_bound;
    std::optional<std::int64_t> d_bound;

    bool predicts_regular() const { return a == CaseStatus::fired || b == CaseStatus::fired; }
    bool predicts_defective() const { return c || d; }
    /// Largest defect lower bound from c) and d), 0 if neither fires.
    std::int64_t delta_lower_bound() const;
    /// e.g. "a", "c+d", "none".
    std::string fired_cases() const;
};

/// Evaluates cases a)-d) from the postulations of X and T.
Lemma31Record classify_postulations(const ParameterCell& cell, const PostulationResult& x, const PostulationResult& t);

/// Keeps the larger condition-matrix rank for X and for T, then
/// re-evaluates the cases.
Lemma31Record merge_evidence(const Lemma31Record& a, const Lemma31Record& b);

/// Fat-point bounds on the postulation of Y for the cell. Needs d >= k+1.
Lemma31Record lemma31_classify(const ParameterCell& cell, std::uint64_t prime, std::uint64_t seed, int trials);

enum class Conjecture39 { consistent, violation_candidate, not_applicable };

std::string_view to_string(Conjecture39 status);

/// Defective cells must be explained by case c) or d). Throws
/// std::invalid_argument if the records are for different cells.
Conjecture39 conjecture39_check(const ParameterCell& cell, const SecantResult& secant, const Lemma31Record& classifier);

}  // namespace oscsec

#endif  // OSCSEC_FATPOINTS_HPP
