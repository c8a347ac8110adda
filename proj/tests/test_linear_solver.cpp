#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "funceq/linear_solver.hpp"

using funceq::FnTable;
using funceq::LinearSystem;
using funceq::PrimeField;
using funceq::SolutionSpace;

namespace {

// Row index of the ordered pair (x, y) in the row-major construction.
std::size_t row_of(std::uint32_t p, std::uint32_t x, std::uint32_t y) {
    return static_cast<std::size_t>(x) * p + y;
}

} // namespace

TEST_CASE("equation system rows accumulate coefficients on index collisions") {
    // p = 2, row (1, 1): x + y wraps to 0, so g(0) gets +1; the two -g(1)
    // terms and the two -1*f(1) terms cancel mod 2.
    {
        const PrimeField F(2);
        const LinearSystem sys = funceq::build_equation_system(F);
        REQUIRE(sys.rows.size() == 4);
        REQUIRE(sys.unknowns == 4);
        const auto& row = sys.rows[row_of(2, 1, 1)];
        CHECK(row == std::vector<std::uint32_t>{0, 0, 1, 0});
    }

    // p = 5, row (0, 0): g(0) collects +1 - 1 - 1 = -1 = 4; f(0) terms have
    // zero coefficients.
    {
        const PrimeField F(5);
        const LinearSystem sys = funceq::build_equation_system(F);
        REQUIRE(sys.rows.size() == 25);
        REQUIRE(sys.unknowns == 10);
        const auto& row00 = sys.rows[row_of(5, 0, 0)];
        CHECK(row00 == std::vector<std::uint32_t>{0, 0, 0, 0, 0, 4, 0, 0, 0, 0});

        // Row (1, 2): +g(3), -g(1), -g(2), -1*f(2), -2*f(1).
        const auto& row12 = sys.rows[row_of(5, 1, 2)];
        CHECK(row12 == std::vector<std::uint32_t>{0, 3, 4, 0, 0, 0, 4, 4, 1, 0});
    }
}

TEST_CASE("pairing system rows double on the diagonal") {
    const PrimeField F(7);
    const LinearSystem sys = funceq::build_pairing_system(F);
    REQUIRE(sys.unknowns == 7);
    // Row (1, 3): 1*f(3) + 3*f(1).
    CHECK(sys.rows[row_of(7, 1, 3)] == std::vector<std::uint32_t>{0, 3, 0, 1, 0, 0, 0});
    // Row (2, 2): coefficient 2 + 2 = 4 on f(2).
    CHECK(sys.rows[row_of(7, 2, 2)] == std::vector<std::uint32_t>{0, 0, 4, 0, 0, 0, 0});

    // Mod 2 the diagonal row (1, 1) cancels entirely.
    const PrimeField F2(2);
    const LinearSystem sys2 = funceq::build_pairing_system(F2);
    CHECK(sys2.rows[row_of(2, 1, 1)] == std::vector<std::uint32_t>{0, 0});
}

TEST_CASE("reduced echelon form has unit pivots and cleared pivot columns") {
    const PrimeField F(7);
    std::vector<std::vector<std::uint32_t>> rows = {
        {2, 4, 6},
        {1, 2, 5},
        {3, 6, 2},
    };
    const auto pivots = funceq::rref_in_place(rows, F);
    REQUIRE(pivots == std::vector<std::size_t>{0, 2});
    CHECK(rows[0] == std::vector<std::uint32_t>{1, 2, 0});
    CHECK(rows[1] == std::vector<std::uint32_t>{0, 0, 1});
    CHECK(rows[2] == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("kernel dimensions across small primes") {
    // Dimension 2 in the degenerate characteristics, 3 from p = 5 on.
    const std::vector<std::pair<std::uint32_t, std::size_t>> expected = {
        {2, 2}, {3, 2}, {5, 3}, {7, 3}, {11, 3}, {13, 3},
    };
    for (const auto& [p, dim] : expected) {
        const PrimeField F(p);
        const SolutionSpace space = funceq::kernel(funceq::build_equation_system(F));
        CHECK(space.dimension() == dim);
        CHECK(space.unknowns() == 2 * static_cast<std::size_t>(p));
    }
}

TEST_CASE("canonical kernel bases for the smallest primes") {
    {
        const SolutionSpace space =
            funceq::kernel(funceq::build_equation_system(PrimeField(2)));
        const std::vector<std::vector<std::uint32_t>> expected = {
            {0, 1, 0, 0},
            {0, 0, 0, 1},
        };
        CHECK(space.basis() == expected);
    }
    {
        const SolutionSpace space =
            funceq::kernel(funceq::build_equation_system(PrimeField(3)));
        const std::vector<std::vector<std::uint32_t>> expected = {
            {0, 1, 2, 0, 0, 2},
            {0, 0, 0, 0, 1, 2},
        };
        CHECK(space.basis() == expected);
    }
    {
        const SolutionSpace space =
            funceq::kernel(funceq::build_equation_system(PrimeField(5)));
        const std::vector<std::vector<std::uint32_t>> expected = {
            {0, 1, 0, 2, 2, 0, 0, 2, 4, 4},
            {0, 0, 1, 3, 1, 0, 0, 0, 1, 4},
            {0, 0, 0, 0, 0, 0, 1, 2, 3, 4},
        };
        CHECK(space.basis() == expected);
    }
}

TEST_CASE("pairing kernel is trivial for odd p and one-dimensional mod 2") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        const SolutionSpace space =
            funceq::kernel(funceq::build_pairing_system(PrimeField(p)));
        CHECK(space.dimension() == 0);
    }
    const SolutionSpace space2 = funceq::kernel(funceq::build_pairing_system(PrimeField(2)));
    REQUIRE(space2.dimension() == 1);
    CHECK(space2.basis()[0] == std::vector<std::uint32_t>{0, 1}); // the identity map
}

TEST_CASE("membership reduces against the basis") {
    const PrimeField F(5);
    const SolutionSpace space = funceq::kernel(funceq::build_equation_system(F));

    const FnTable square = FnTable::tabulate(F, [](std::uint32_t x) {
        return static_cast<std::int64_t>(x) * x;
    });
    const FnTable double_cube = FnTable::tabulate(F, [](std::uint32_t x) {
        return 2 * static_cast<std::int64_t>(x) * x * x;
    });
    CHECK(funceq::contains(space, square, double_cube));
    CHECK(funceq::contains(space, FnTable::zero(F), FnTable::zero(F)));

    const FnTable identity = FnTable::tabulate(F, [](std::uint32_t x) { return x; });
    CHECK_FALSE(funceq::contains(space, identity, FnTable::zero(F)));

    const std::vector<std::uint32_t> short_vec(3, 0);
    CHECK_THROWS_AS(funceq::contains(space, short_vec), std::invalid_argument);
}

TEST_CASE("span enumeration covers exactly p^dim vectors, kernel members solve") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        const PrimeField F(p);
        const SolutionSpace space = funceq::kernel(funceq::build_equation_system(F));
        const auto span = funceq::enumerate_span(space);

        std::uint64_t expected = 1;
        for (std::size_t i = 0; i < space.dimension(); ++i) expected *= p;
        REQUIRE(span.size() == expected);

        // No duplicates: the basis vectors are independent.
        auto sorted = span;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());

        for (const auto& vec : span) {
            const auto [f, g] = funceq::decode_pair(F, vec);
            CHECK(funceq::solves_equation(f, g));
        }
    }
}

TEST_CASE("exhaustive search at p = 2 finds the four degenerate pairs") {
    const PrimeField F(2);
    const auto solutions = funceq::brute_force_solutions(F);
    REQUIRE(solutions.size() == 4);
    // The equation is vacuous mod 2 beyond forcing f(0) = g(0) = 0, leaving
    // f, g in {zero, identity} independently; listed lexicographically.
    const std::vector<std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>>>
        expected = {
            {{0, 0}, {0, 0}},
            {{0, 0}, {0, 1}},
            {{0, 1}, {0, 0}},
            {{0, 1}, {0, 1}},
        };
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(solutions[i].first.values() == expected[i].first);
        CHECK(solutions[i].second.values() == expected[i].second);
    }
}

TEST_CASE("exhaustive search at p = 3 matches the linear/Frobenius family") {
    const PrimeField F(3);
    const auto solutions = funceq::brute_force_solutions(F);
    REQUIRE(solutions.size() == 9);
    // Every solution is f(x) = a x, g(x) = a x^2 + b x.
    for (const auto& [f, g] : solutions) {
        const std::uint32_t a = f(1);
        for (std::uint32_t x = 0; x < 3; ++x) {
            CHECK(f(x) == F.mul(a, x));
        }
        const std::uint32_t b = F.sub(g(1), a);
        for (std::uint32_t x = 0; x < 3; ++x) {
            CHECK(g(x) == F.add(F.mul(a, F.mul(x, x)), F.mul(b, x)));
        }
    }
}

TEST_CASE("exhaustive search agrees with the kernel span as a set") {
    for (std::uint32_t p : {2u, 3u}) {
        const PrimeField F(p);
        const SolutionSpace space = funceq::kernel(funceq::build_equation_system(F));
        auto span = funceq::enumerate_span(space);
        std::sort(span.begin(), span.end());

        std::vector<std::vector<std::uint32_t>> brute;
        for (const auto& [f, g] : funceq::brute_force_solutions(F)) {
            std::vector<std::uint32_t> vec(f.values());
            vec.insert(vec.end(), g.values().begin(), g.values().end());
            brute.push_back(std::move(vec));
        }
        std::sort(brute.begin(), brute.end());
        CHECK(span == brute);
    }
}

TEST_CASE("exhaustive search rejects intractable moduli") {
    CHECK_THROWS_AS(funceq::brute_force_solutions(PrimeField(7)), std::domain_error);
}

TEST_CASE("solver output is reproducible") {
    const PrimeField F(11);
    const SolutionSpace a = funceq::kernel(funceq::build_equation_system(F));
    const SolutionSpace b = funceq::kernel(funceq::build_equation_system(F));
    CHECK(a.basis() == b.basis());
}
