#ifndef OSCSEC_MONOMIAL_HPP
#define OSCSEC_MONOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace oscsec {

/// Exact C(a, b); 0 when b > a. Throws std::overflow_error if the value
/// does not fit in 64 bits.
std::uint64_t binomial(std::uint64_t a, std::uint64_t b);

/// C(a, b) with the counting convention used throughout the defect
/// formulas: 0 whenever a < b or a < 0 or b < 0.
std::int64_t binomial_or_zero(std::int64_t a, std::int64_t b);

/// Dimension of R_d in n+1 variables, C(n+d, n).
std::size_t forms_dimension(int n, int d);

/// Exponents of a monomial x_0^{e_0} ... x_n^{e_n}.
class ExponentVector {
   public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> exponents);
    ExponentVector(std::initializer_list<int> exponents);

    /// Number of variables minus one.
    int n() const noexcept { return static_cast<int>(exponents_.size()) - 1; }
    int degree() const noexcept { return degree_; }
    int operator[](std::size_t i) const noexcept { return exponents_[i]; }
    std::span<const int> exponents() const noexcept { return exponents_; }

    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

   private:
    std::vector<int> exponents_;
    int degree_ = 0;
};

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);

// Canonical order within a fixed degree is graded reverse lexicographic,
// largest monomial first: x_0^d has index 0, x_n^d the last index.

/// Index of `m` in the canonical order of degree-|m| monomials.
std::size_t monomial_rank(std::span<const int> exponents);
inline std::size_t monomial_rank(const ExponentVector& m) { return monomial_rank(m.exponents()); }

/// Inverse of monomial_rank.
ExponentVector monomial_unrank(int n, int d, std::size_t index);

/// All C(n+d, n) degree-d monomials in canonical order. Throws
/// std::invalid_argument for n < 0 or d < 0.
std::vector<ExponentVector> monomial_basis(int n, int d);

}  // namespace oscsec

#endif  // OSCSEC_MONOMIAL_HPP
