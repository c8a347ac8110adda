#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "funceq/prime_field.hpp"

namespace funceq {

/// A total function Z_p -> Z_p stored as its value table.
class FnTable {
public:
    FnTable(const PrimeField& field, std::vector<std::uint32_t> values);

    static FnTable zero(const PrimeField& field);

    /// Tabulates fn(x) for x = 0..p-1; results are reduced mod p.
    template <typename Fn>
    static FnTable tabulate(const PrimeField& field, Fn&& fn) {
        std::vector<std::uint32_t> values(field.modulus());
        for (std::uint32_t x = 0; x < field.modulus(); ++x) {
            values[x] = field.reduce(static_cast<std::int64_t>(fn(x)));
        }
        return FnTable(field, std::move(values));
    }

    const PrimeField& field() const { return field_; }
    std::uint32_t modulus() const { return field_.modulus(); }

    std::uint32_t operator()(std::uint32_t x) const { return values_[x]; }
    const std::vector<std::uint32_t>& values() const { return values_; }

    bool is_zero() const;

    auto operator<=>(const FnTable&) const = default;

private:
    PrimeField field_;
    std::vector<std::uint32_t> values_;
};

/// A function Z_p x Z_p -> Z_p stored row-major: value(x, y) = table[x*p + y].
class PairTable {
public:
    PairTable(const PrimeField& field, std::vector<std::uint32_t> values);

    template <typename Fn>
    static PairTable tabulate(const PrimeField& field, Fn&& fn) {
        const std::uint32_t p = field.modulus();
        std::vector<std::uint32_t> values(static_cast<std::size_t>(p) * p);
        for (std::uint32_t x = 0; x < p; ++x) {
            for (std::uint32_t y = 0; y < p; ++y) {
                values[static_cast<std::size_t>(x) * p + y] =
                    field.reduce(static_cast<std::int64_t>(fn(x, y)));
            }
        }
        return PairTable(field, std::move(values));
    }

    const PrimeField& field() const { return field_; }
    std::uint32_t modulus() const { return field_.modulus(); }

    std::uint32_t value(std::uint32_t x, std::uint32_t y) const {
        return values_[static_cast<std::size_t>(x) * field_.modulus() + y];
    }
    const std::vector<std::uint32_t>& values() const { return values_; }

    auto operator<=>(const PairTable&) const = default;

private:
    PrimeField field_;
    std::vector<std::uint32_t> values_;
};

/// Unhalved parity split: odd(x) = f(x) - f(-x), even(x) = f(x) + f(-x),
/// so that odd + even = 2 f. Avoiding the factor 1/2 keeps the split valid
/// in characteristic 2.
struct ParityParts {
    FnTable odd;
    FnTable even;
};

ParityParts parity_decompose(const FnTable& f);

bool is_odd(const FnTable& f);
bool is_even(const FnTable& f);

/// True iff f(x + y) = f(x) + f(y) for all pairs.
bool is_additive(const FnTable& f);

/// The additivity defect of g: F(x, y) = g(x+y) - g(x) - g(y).
PairTable cauchy_difference(const FnTable& g);

/// Checks that F is symmetric and satisfies the transfer identity
/// F(x+y, z) + F(x, y) = F(x, y+z) + F(y, z) for all triples.
/// Both hold automatically whenever F is the additivity defect of some g.
bool check_cocycle_and_symmetry(const PairTable& F);

namespace serial {
bool check_cocycle_and_symmetry(const PairTable& F);
}

/// One failing pair of the defining equation, with both sides evaluated.
struct EquationViolation {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;

    auto operator<=>(const EquationViolation&) const = default;
};

/// All pairs (x, y), in row-major order, violating
/// g(x+y) - g(x) - g(y) = x f(y) + y f(x).
std::vector<EquationViolation> check_equation(const FnTable& f, const FnTable& g);

/// Early-exit variant of check_equation for hot loops.
bool solves_equation(const FnTable& f, const FnTable& g);

/// Structural identities that every solution pair satisfies, in every
/// characteristic. Each flag is an exhaustive pointwise check.
struct SolutionIdentityReport {
    bool g_doubling = false;        // g(2x) - 2 g(x) = 2x f(x)
    bool even_g_factors = false;    // g(x) + g(-x) = x (f(x) - f(-x))
    bool f_doubling = false;        // f(2x) = 3 f(x) + f(-x)
    bool odd_part_doubling = false; // odd part: f_o(2x) = 2 f_o(x)
    bool even_part_doubling = false; // even part: f_e(2x) = 4 f_e(x)

    bool all() const {
        return g_doubling && even_g_factors && f_doubling && odd_part_doubling &&
               even_part_doubling;
    }

    auto operator<=>(const SolutionIdentityReport&) const = default;
};

/// Requires (f, g) to solve the defining equation; throws otherwise.
SolutionIdentityReport check_solution_identities(const FnTable& f, const FnTable& g);

namespace detail {
/// Identity scan without the precondition check, for callers that already
/// hold verified solutions (e.g. kernel members).
SolutionIdentityReport solution_identities_unchecked(const FnTable& f, const FnTable& g);
}

} // namespace funceq
