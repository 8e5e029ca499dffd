#include "oscsec/field.hpp"

#include <stdexcept>
#include <string>

namespace oscsec {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) result = mulmod64(result, base, m);
        base = mulmod64(base, base, m);
        e >>= 1;
    }
    return result;
}

}  // namespace

// Deterministic Miller-Rabin; these witnesses cover all 64-bit inputs.
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= (1ULL << 32)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " must be below 2^32");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
}

Residue PrimeField::from_int(std::int64_t x) const noexcept {
    const auto m = static_cast<std::int64_t>(p_);
    std::int64_t r = x % m;
    if (r < 0) r += m;
    return static_cast<Residue>(r);
}

Residue PrimeField::pow(Residue base, std::uint64_t exponent) const noexcept {
    Residue result = 1 % p_;
    base %= p_;
    while (exponent > 0) {
        if (exponent & 1) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1;
    }
    return result;
}

Residue PrimeField::inv(Residue a) const {
    if (a % p_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    return pow(a, p_ - 2);
}

}  // namespace oscsec
