#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "funceq/linear_solver.hpp"
#include "funceq/solution_family.hpp"

using funceq::FamilyParams;
using funceq::FnTable;
using funceq::PrimeField;

TEST_CASE("closed-form members match their polynomial definition") {
    const PrimeField F(5);

    // (a, b, c) = (1, 0, 0): f = x, g = x^2.
    {
        const auto [f, g] = funceq::family_member(funceq::family_params(F, 1, 0, 0));
        for (std::uint32_t x = 0; x < 5; ++x) {
            CHECK(f(x) == x);
            CHECK(g(x) == F.mul(x, x));
        }
    }
    // (0, 1, 0): f = 0, g = x.
    {
        const auto [f, g] = funceq::family_member(funceq::family_params(F, 0, 1, 0));
        CHECK(f.is_zero());
        for (std::uint32_t x = 0; x < 5; ++x) CHECK(g(x) == x);
    }
    // (0, 0, 1): f = x^2, g = 3^{-1} x^3 = 2 x^3 mod 5.
    {
        const auto [f, g] = funceq::family_member(funceq::family_params(F, 0, 0, 1));
        for (std::uint32_t x = 0; x < 5; ++x) {
            CHECK(f(x) == F.mul(x, x));
            CHECK(g(x) == F.mul(2, F.mul(x, F.mul(x, x))));
        }
    }
}

TEST_CASE("every member solves the equation and lies in the kernel") {
    for (std::uint32_t p : {5u, 7u}) {
        const PrimeField F(p);
        const auto space = funceq::kernel(funceq::build_equation_system(F));
        for (std::uint32_t a = 0; a < p; ++a) {
            for (std::uint32_t b = 0; b < p; ++b) {
                for (std::uint32_t c = 0; c < p; ++c) {
                    const auto [f, g] =
                        funceq::family_member(FamilyParams{F, a, b, c});
                    CHECK(funceq::solves_equation(f, g));
                    CHECK(funceq::contains(space, f, g));
                }
            }
        }
    }
}

TEST_CASE("members with a = c = 0 are exactly the degenerate ones") {
    const PrimeField F(7);
    for (std::uint32_t b = 0; b < 7; ++b) {
        const auto [f, g] = funceq::family_member(FamilyParams{F, 0, b, 0});
        CHECK(f.is_zero());
        CHECK(funceq::is_additive(g));
    }
}

TEST_CASE("closed form requires 2 and 3 invertible") {
    CHECK_THROWS_AS(funceq::family_member(FamilyParams{PrimeField(2), 1, 0, 0}),
                    std::domain_error);
    CHECK_THROWS_AS(funceq::family_member(FamilyParams{PrimeField(3), 1, 0, 0}),
                    std::domain_error);
    CHECK_THROWS_AS(funceq::recover_params(FnTable::zero(PrimeField(3)),
                                           FnTable::zero(PrimeField(3))),
                    std::domain_error);
    CHECK_THROWS_AS(funceq::same_function_solutions(PrimeField(2)), std::domain_error);
    CHECK_THROWS_AS(funceq::verify_family_exhausts_kernel(PrimeField(3)), std::domain_error);
}

TEST_CASE("division-free presentation agrees with the closed form for p >= 5") {
    const PrimeField F(7);
    for (std::int64_t a : {0, 1, 3}) {
        for (std::int64_t b : {0, 2, 6}) {
            for (std::int64_t c : {0, 1, 5}) {
                const auto report =
                    funceq::family_member_general(funceq::family_params(F, a, b, c));
                REQUIRE(report.f.has_value());
                REQUIRE(report.g.has_value());
                CHECK(report.additive_part_consistent);
                // 4 f = 2 a x + 2 c x^2 scales the closed form by 1/2, and
                // 6 g = b x + 3 a x^2 + c x^3 by 1/6 in its linear term.
                const std::uint32_t half = F.inv(2);
                const std::uint32_t sixth = F.inv(6);
                const auto [f_s, g_s] = funceq::family_member(funceq::family_params(
                    F, F.mul(half, F.reduce(a)), F.mul(sixth, F.reduce(b)),
                    F.mul(half, F.reduce(c))));
                CHECK(*report.f == f_s);
                CHECK(*report.g == g_s);
                CHECK(funceq::solves_equation(*report.f, *report.g));
            }
        }
    }
}

TEST_CASE("division-free presentation degrades gracefully mod 2 and mod 3") {
    {
        const auto report =
            funceq::family_member_general(funceq::family_params(PrimeField(2), 1, 1, 1));
        CHECK_FALSE(report.f.has_value());
        CHECK_FALSE(report.g.has_value());
        CHECK(report.additive_part_consistent);
    }
    {
        const PrimeField F(3);
        // f is still determined: f = 2(a x + c x^2).
        const auto report = funceq::family_member_general(funceq::family_params(F, 1, 0, 1));
        REQUIRE(report.f.has_value());
        CHECK_FALSE(report.g.has_value());
        for (std::uint32_t x = 0; x < 3; ++x) {
            CHECK((*report.f)(x) == F.mul(2, F.add(x, F.mul(x, x))));
        }
        // x^3 = x mod 3 folds the cubic coefficient into the linear one, so
        // consistency demands b + c = 0.
        CHECK_FALSE(report.additive_part_consistent);
        CHECK(funceq::family_member_general(funceq::family_params(F, 1, 2, 1))
                  .additive_part_consistent);
        CHECK(funceq::family_member_general(funceq::family_params(F, 1, 0, 0))
                  .additive_part_consistent);
    }
}

TEST_CASE("parameters are recovered exactly from the tables") {
    for (std::uint32_t p : {5u, 7u}) {
        const PrimeField F(p);
        for (std::uint32_t a = 0; a < p; ++a) {
            for (std::uint32_t b = 0; b < p; ++b) {
                for (std::uint32_t c = 0; c < p; ++c) {
                    const FamilyParams params{F, a, b, c};
                    const auto [f, g] = funceq::family_member(params);
                    CHECK(funceq::recover_params(f, g) == params);
                }
            }
        }
    }
}

TEST_CASE("family exhausts the kernel for the verification primes") {
    for (std::uint32_t p : {5u, 7u, 13u}) {
        CHECK(funceq::verify_family_exhausts_kernel(PrimeField(p)));
    }
}

TEST_CASE("only the zero map pairs with itself") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        const PrimeField F(p);
        const auto diagonal = funceq::same_function_solutions(F);
        REQUIRE(diagonal.size() == 1);
        CHECK(diagonal[0].is_zero());
    }
}
