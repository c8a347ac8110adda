#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "funceq/fn_table.hpp"
#include "funceq/prime_field.hpp"

namespace funceq {

/// Parameters of the closed-form solution family: two additive slopes and a
/// quadratic/cubic coefficient, all residues in the same field.
struct FamilyParams {
    PrimeField field;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint32_t c = 0;

    auto operator<=>(const FamilyParams&) const = default;
};

FamilyParams family_params(const PrimeField& field, std::int64_t a, std::int64_t b,
                           std::int64_t c);

/// The closed-form pair f(x) = a x + c x^2, g(x) = b x + a x^2 + 3^{-1} c x^3.
/// Requires p >= 5, where 2 and 3 are invertible.
std::pair<FnTable, FnTable> family_member(const FamilyParams& params);

/// The division-free presentation 4 f(x) = 2 a x + 2 c x^2 and
/// 6 g(x) = b x + 3 a x^2 + c x^3, resolved as far as the characteristic
/// allows: both tables for p >= 5, f alone for p = 3, neither for p = 2.
struct GeneralFamilyReport {
    std::optional<FnTable> f;
    std::optional<FnTable> g;
    /// p = 3 collapses x^3 to x, so the two linear coefficients must agree;
    /// true whenever the characteristic imposes no such constraint.
    bool additive_part_consistent = true;
    std::string note;
};

GeneralFamilyReport family_member_general(const FamilyParams& params);

/// Recovers (a, b, c) from a family member via f(1), f(2), g(1). Requires
/// p >= 5; the result round-trips through family_member exactly.
FamilyParams recover_params(const FnTable& f, const FnTable& g);

/// Checks that the closed-form family and the kernel of the linear system are
/// the same set: dimension 3, every member solves, parameters injective.
/// Requires p >= 5.
bool verify_family_exhausts_kernel(const PrimeField& field);

namespace serial {
bool verify_family_exhausts_kernel(const PrimeField& field);
}

/// All f with (f, f) a solution pair, found by slicing the kernel with the
/// constraint f = g. Requires p >= 5 (expected answer: only the zero map).
std::vector<FnTable> same_function_solutions(const PrimeField& field);

} // namespace funceq
