#ifndef OSCSEC_SEED_HPP
#define OSCSEC_SEED_HPP

#include <cstdint>
#include <initializer_list>
#include <random>

#include "oscsec/field.hpp"

namespace oscsec {

/// What a derived seed is used for. Values are part of the reproducibility
/// contract: changing them changes every survey output.
enum class SeedRole : std::uint64_t {
    linear_form = 1,
    osculating_form = 2,
    fat_point = 3,
    scratch = 4,
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Hash a master seed together with any number of labels. Order matters.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> labels) noexcept;

/// Seed for one random object: a function of (master, cell, trial, role,
/// index) only, so results do not depend on evaluation order.
std::uint64_t cell_seed(std::uint64_t master, int k, int n, int d, int s, int trial, SeedRole role,
                        int index) noexcept;

/// Uniform residue in [0, p) by rejection on a 64-bit generator.
Residue uniform_residue(std::mt19937_64& rng, const PrimeField& field);

}  // namespace oscsec

#endif  // OSCSEC_SEED_HPP
