#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "oscsec/fatpoints.hpp"
#include "oscsec/monomial.hpp"
#include "oscsec/seed.hpp"
#include "oscsec/tangent.hpp"

using namespace oscsec;

namespace {

const PrimeField F{};
constexpr std::uint64_t kSeed = 20060101;

SecantResult run(int k, int n, int d, int s, int trials = 3) { return secant_dim({k, n, d, s}, kDefaultPrime, kSeed, trials); }

}  // namespace

TEST_CASE("cell validation and sizes") {
    CHECK_THROWS_AS((ParameterCell{-1, 2, 3, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ParameterCell{1, 0, 3, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ParameterCell{1, 2, 3, 0}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((ParameterCell{3, 2, 2, 1}.validate()), std::invalid_argument);
    CHECK_NOTHROW((ParameterCell{2, 2, 2, 1}.validate()));
    CHECK(ParameterCell{2, 7, 3, 2}.ambient_dim() == 119);
    CHECK(ParameterCell{2, 7, 3, 2}.ambient_affine() == 120);
    CHECK(ParameterCell{1, 2, 3, 2}.to_string() == "(k=1,n=2,d=3,s=2)");
}

TEST_CASE("osculating space bases") {
    const Form l = random_form(2, 1, 3, F);
    const BasisMatrix b0 = osculating_space_basis(l, 0, 4);
    REQUIRE(b0.rows() == 1);
    CHECK(same_row_space(b0, BasisMatrix::from_forms(std::vector<Form>{linear_power(l, 4)})));
    CHECK(rank(osculating_space_basis(l, 3, 3)) == forms_dimension(2, 3));

    const Form x0 = Form::variable(2, 0, F);
    const BasisMatrix b = osculating_space_basis(x0, 1, 3);
    CHECK(b.rows() == 3);
    CHECK(rank(b) == 3);
    std::vector<Form> want;
    for (int i = 0; i <= 2; ++i) want.push_back(multiply(linear_power(x0, 2), Form::variable(2, i, F)));
    CHECK(same_row_space(b, BasisMatrix::from_forms(want)));
    CHECK_THROWS_AS(osculating_space_basis(x0, 4, 3), std::invalid_argument);
}

TEST_CASE("tangent cone examples") {
    const Form l = random_form(2, 1, 10, F);
    const Form f = random_form(2, 2, 11, F);
    const TangentCone cone = tangent_cone(l, f, 2, 5);
    CHECK(rank(cone.basis) == 8);
    CHECK(cone.basis.cols() == 21);
    for (int n = 1; n <= 4; ++n) {
        const Form ln = random_form(n, 1, 20 + static_cast<std::uint64_t>(n), F);
        CHECK(rank(tangent_cone(ln, Form::constant(n, 1, F), 0, 4).basis) == static_cast<std::size_t>(n + 1));
    }
    // F divisible by L puts the second block inside the first.
    const Form degenerate = multiply(l, random_form(2, 1, 12, F));
    CHECK(rank(tangent_cone(l, degenerate, 2, 5).basis) < 8);
    CHECK_THROWS_AS(tangent_cone(l, f, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(tangent_cone(l, random_form(2, 3, 1, F), 2, 5), std::invalid_argument);
}

TEST_CASE("single tangent cone rank over a grid, 50 draws per cell") {
    for (int k = 0; k <= 4; ++k) {
        for (int n = 1; n <= 4; ++n) {
            for (int d = k + 1; d <= k + 4; ++d) {
                const ParameterCell cell{k, n, d, 1};
                for (int trial = 0; trial < 50; ++trial) {
                    const auto cones = draw_cones(cell, F, kSeed, trial);
                    REQUIRE(cones.size() == 1);
                    CHECK(static_cast<std::int64_t>(rank(cones[0].basis)) == tangent_cone_rank(k, n));
                }
            }
        }
    }
}

TEST_CASE("expected dimension") {
    CHECK(expected_dim({1, 2, 3, 2}) == 9);
    CHECK(expected_dim({2, 2, 4, 2}) == 14);
    CHECK(expected_dim({2, 7, 3, 2}) == 85);
    CHECK(expected_affine({2, 7, 3, 2}) == 86);
    CHECK(tangent_cone_rank(2, 2) == 8);
}

TEST_CASE("secant dimension examples") {
    const auto a = run(1, 2, 3, 2);
    CHECK(a.proj_dim == 8);
    CHECK(a.expdim_proj == 9);
    CHECK(a.defect == 1);
    CHECK(a.verdict == Verdict::defective);

    const auto b = run(2, 2, 4, 2);
    CHECK(b.proj_dim == 13);
    CHECK(b.expdim_proj == 14);
    CHECK(b.defect == 1);

    const auto c = run(2, 7, 3, 2);
    CHECK(c.affine_rank == 76);
    CHECK(c.expdim_proj == 85);
    CHECK(c.defect == 10);

    const auto e = run(1, 2, 2, 2);
    CHECK(e.proj_dim == 5);
    CHECK(e.verdict == Verdict::regular_fills);

    const auto f = run(2, 3, 5, 2);
    CHECK(f.verdict == Verdict::regular_nonfill);
    CHECK(f.proj_dim == 25);

    const auto same = run(3, 2, 3, 2);
    CHECK(same.verdict == Verdict::regular_fills);
    CHECK(same.proj_dim == 9);
    CHECK(same.trial_ranks.empty());
}

TEST_CASE("secant dimension argument checks") {
    CHECK_THROWS_AS(run(3, 2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(run(1, 2, 3, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(secant_dim({1, 2, 3, 2}, 3, kSeed, 1), std::invalid_argument);
    CHECK_THROWS_AS(secant_dim({1, 2, 3, 2}, 9, kSeed, 1), std::invalid_argument);
}

TEST_CASE("secant results agree with the finite-difference Jacobian") {
    for (int k = 0; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n)
            for (int d = k + 1; d <= k + 3; ++d)
                for (int s = 1; s <= 4; ++s) {
                    const auto r = run(k, n, d, s);
                    const auto jac = oracle::jacobian_rank(k, n, d, s, kDefaultPrime, 1000 + static_cast<std::uint64_t>(s));
                    CHECK_MESSAGE(r.affine_rank == static_cast<std::int64_t>(jac), ParameterCell{k, n, d, s}.to_string());
                }
}

TEST_CASE("affine ranks frozen from the Jacobian oracle") {
    // Values produced by oracle::jacobian_rank with the default prime.
    struct Row {
        ParameterCell cell;
        std::int64_t rank;
    };
    const std::vector<Row> frozen{
        {{1, 2, 3, 2}, 9},   {{1, 3, 3, 3}, 19},  {{2, 2, 4, 2}, 14}, {{2, 7, 3, 2}, 76}, {{2, 4, 3, 2}, 31},
        {{2, 4, 3, 3}, 35},  {{2, 3, 3, 3}, 20},  {{2, 3, 5, 2}, 26}, {{2, 3, 4, 2}, 25}, {{2, 2, 5, 4}, 21},
        {{2, 2, 4, 3}, 15},  {{0, 2, 4, 5}, 14},  {{1, 6, 2, 2}, 22}, {{1, 4, 2, 2}, 14}, {{1, 5, 2, 2}, 18},
        {{8, 2, 15, 3}, 132}, {{2, 2, 5, 3}, 21}, {{0, 2, 2, 2}, 5},  {{1, 3, 2, 2}, 10}, {{2, 2, 6, 3}, 24},
    };
    for (const Row& row : frozen) {
        const auto r = secant_dim(row.cell, kDefaultPrime, kSeed, 3);
        CHECK_MESSAGE(r.affine_rank == row.rank, row.cell.to_string());
    }
    // d = k+1 counts by inclusion-exclusion.
    CHECK(2 * 15 + 2 * 5 - 5 - 4 == 31);
    CHECK(2 * 36 + 2 * 8 - 8 - 4 == 76);
}

TEST_CASE("semicontinuity and trial bookkeeping") {
    for (int k = 0; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n)
            for (int d = k + 1; d <= k + 3; ++d)
                for (int s = 1; s <= 4; ++s) {
                    const ParameterCell cell{k, n, d, s};
                    const auto one = secant_dim(cell, kDefaultPrime, kSeed, 1);
                    const auto three = secant_dim(cell, kDefaultPrime, kSeed, 3);
                    REQUIRE(three.trial_ranks.size() == 3);
                    for (auto r : three.trial_ranks) CHECK(r <= expected_affine(cell));
                    CHECK(three.affine_rank == *std::max_element(three.trial_ranks.begin(), three.trial_ranks.end()));
                    CHECK(one.affine_rank <= three.affine_rank);
                    CHECK(three.defect >= 0);
                    CHECK((three.defect == 0) == (three.verdict != Verdict::defective));
                }
}

TEST_CASE("secant dimension is deterministic") {
    const auto a = run(2, 3, 4, 2);
    const auto b = run(2, 3, 4, 2);
    CHECK(a.trial_ranks == b.trial_ranks);
    CHECK(a.affine_rank == b.affine_rank);
    CHECK(a.primes == b.primes);
}

TEST_CASE("duality holds on every trial") {
    for (int k = 0; k <= 2; ++k)
        for (int n = 1; n <= 3; ++n)
            for (int d = k + 1; d <= k + 3; ++d)
                for (int s = 1; s <= 4; ++s)
                    CHECK_NOTHROW(secant_dim({k, n, d, s}, kDefaultPrime, kSeed, 2, SecantOptions{true}));
}

TEST_CASE("k = 0 matches the double point computation") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 1; d <= 6; ++d)
            for (int s = 1; s <= 6; ++s)
                CHECK_MESSAGE(run(0, n, d, s).proj_dim == waring_dim(n, d, s, kDefaultPrime, kSeed, 3),
                              ParameterCell{0, n, d, s}.to_string());
}

TEST_CASE("merging evidence") {
    auto a = run(1, 2, 3, 2);
    auto b = secant_dim({1, 2, 3, 2}, kFallbackPrime, kSeed, 9);
    const auto m = merge_evidence(a, b);
    CHECK(m.primes == std::vector<std::uint64_t>{kDefaultPrime, kFallbackPrime});
    CHECK(m.trials == 12);
    CHECK(m.defect == 1);
    CHECK_THROWS(merge_evidence(a, run(1, 2, 3, 3)));

    SecantResult bad = a;
    bad.affine_rank = expected_affine(bad.cell) + 1;
    CHECK_THROWS_AS(finalize(bad), std::logic_error);
}

TEST_CASE("small primes still certify fills") {
    const auto r = secant_dim({2, 2, 5, 3}, 101, kSeed, 3);
    CHECK(r.verdict == Verdict::regular_fills);
    const auto q = secant_dim({8, 2, 15, 3}, 101, kSeed, 3);
    CHECK(q.verdict == Verdict::defective);
}
