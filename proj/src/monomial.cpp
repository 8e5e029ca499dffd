#include "oscsec/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oscsec {

std::uint64_t binomial(std::uint64_t a, std::uint64_t b) {
    if (b > a) return 0;
    b = std::min(b, a - b);
    // Each partial product C(a-b+i, i) is exact; the 128-bit intermediate
    // keeps the multiply from wrapping before the divide.
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= b; ++i) {
        result = result * (a - b + i) / i;
        if (result > std::numeric_limits<std::uint64_t>::max()) {
            throw std::overflow_error("binomial(" + std::to_string(a) + ", " + std::to_string(b) +
                                      ") overflows 64 bits");
        }
    }
    return static_cast<std::uint64_t>(result);
}

std::int64_t binomial_or_zero(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0 || b > a) return 0;
    const std::uint64_t value = binomial(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
    if (value > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        throw std::overflow_error("binomial value exceeds signed 64-bit range");
    }
    return static_cast<std::int64_t>(value);
}

std::size_t forms_dimension(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("forms_dimension needs n >= 0 and d >= 0");
    return static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(n + d), static_cast<std::uint64_t>(n)));
}

ExponentVector::ExponentVector(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw std::invalid_argument("exponent vector needs at least one variable");
    for (int e : exponents_) {
        if (e < 0) throw std::invalid_argument("negative exponent");
    }
    degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

ExponentVector::ExponentVector(std::initializer_list<int> exponents)
    : ExponentVector(std::vector<int>(exponents)) {}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
    if (a.n() != b.n()) throw std::invalid_argument("exponent vectors in different rings");
    std::vector<int> sum(a.exponents().begin(), a.exponents().end());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += b[i];
    return ExponentVector(std::move(sum));
}

std::size_t monomial_rank(std::span<const int> exponents) {
    // Reading variables from last to first, a smaller exponent comes
    // earlier; all monomials with a smaller exponent in x_v and the same
    // tail precede this one.
    int remaining = std::accumulate(exponents.begin(), exponents.end(), 0);
    std::size_t rank = 0;
    for (std::size_t v = exponents.size(); v-- > 1;) {
        const int e = exponents[v];
        const int vars_below = static_cast<int>(v) - 1;
        for (int j = 0; j < e; ++j) rank += forms_dimension(vars_below, remaining - j);
        remaining -= e;
    }
    return rank;
}

ExponentVector monomial_unrank(int n, int d, std::size_t index) {
    if (n < 0 || d < 0) throw std::invalid_argument("monomial_unrank needs n >= 0 and d >= 0");
    if (index >= forms_dimension(n, d)) throw std::out_of_range("monomial index out of range");
    std::vector<int> exps(static_cast<std::size_t>(n) + 1, 0);
    int remaining = d;
    for (int v = n; v >= 1; --v) {
        int j = 0;
        for (;; ++j) {
            const std::size_t block = forms_dimension(v - 1, remaining - j);
            if (index < block) break;
            index -= block;
        }
        exps[static_cast<std::size_t>(v)] = j;
        remaining -= j;
    }
    exps[0] = remaining;
    return ExponentVector(std::move(exps));
}

std::vector<ExponentVector> monomial_basis(int n, int d) {
    if (n < 1) throw std::invalid_argument("monomial_basis needs n >= 1, got " + std::to_string(n));
    if (d < 0) throw std::invalid_argument("monomial_basis needs d >= 0, got " + std::to_string(d));
    const std::size_t count = forms_dimension(n, d);
    std::vector<ExponentVector> basis;
    basis.reserve(count);
    for (std::size_t i = 0; i < count; ++i) basis.push_back(monomial_unrank(n, d, i));
    return basis;
}

}  // namespace oscsec
