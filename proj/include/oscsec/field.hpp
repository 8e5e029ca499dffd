#ifndef OSCSEC_FIELD_HPP
#define OSCSEC_FIELD_HPP

#include <compare>
#include <cstdint>

namespace oscsec {

/// A residue in [0, p). Containers store bare residues; the modulus lives
/// with the container (Form, BasisMatrix).
using Residue = std::uint64_t;

/// Default modulus, the Mersenne prime 2^31 - 1.
inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

/// Second prime used when a result needs independent confirmation.
inline constexpr std::uint64_t kFallbackPrime = 1000000007ULL;

bool is_prime(std::uint64_t value);

/// Arithmetic in GF(p) for a prime p < 2^32, so that a product of two
/// residues plus a residue fits in 64 bits.
class PrimeField {
   public:
    /// Throws std::invalid_argument unless p is a prime in [2, 2^32).
    explicit PrimeField(std::uint64_t p = kDefaultPrime);

    std::uint64_t modulus() const noexcept { return p_; }

    Residue reduce(std::uint64_t x) const noexcept { return x % p_; }
    Residue from_int(std::int64_t x) const noexcept;

    Residue add(Residue a, Residue b) const noexcept {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept { return (a * b) % p_; }
    /// a + b*c
    Residue fma(Residue a, Residue b, Residue c) const noexcept { return (a + b * c) % p_; }
    Residue pow(Residue base, std::uint64_t exponent) const noexcept;
    /// Throws std::domain_error on zero.
    Residue inv(Residue a) const;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint64_t p_;
};

struct FieldElement {
    Residue value = 0;
    std::uint64_t modulus = kDefaultPrime;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

}  // namespace oscsec

#endif  // OSCSEC_FIELD_HPP
