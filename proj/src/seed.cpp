#include "oscsec/seed.hpp"

#include <limits>

namespace oscsec {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> labels) noexcept {
    std::uint64_t h = splitmix64(master);
    for (std::uint64_t label : labels) h = splitmix64(h ^ splitmix64(label + 0x632be59bd9b4e019ULL));
    return h;
}

std::uint64_t cell_seed(std::uint64_t master, int k, int n, int d, int s, int trial, SeedRole role,
                        int index) noexcept {
    return derive_seed(master, {static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(n),
                                static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(s),
                                static_cast<std::uint64_t>(trial), static_cast<std::uint64_t>(role),
                                static_cast<std::uint64_t>(index)});
}

Residue uniform_residue(std::mt19937_64& rng, const PrimeField& field) {
    const std::uint64_t p = field.modulus();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % p;
    }
}

}  // namespace oscsec
