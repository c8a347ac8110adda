#pragma once

#include <cstddef>

#include "funceq/fn_table.hpp"
#include "funceq/prime_field.hpp"

namespace funceq {

/// Three characterisations of the degenerate solutions (f vanishes and g is
/// additive), each computed independently on one solution pair.
struct AlienReport {
    bool is_alien = false;            // f = 0 and g additive
    bool even_f_criterion = false;    // f even and f(1) = 0
    bool odd_g_criterion = false;     // g odd and g(2) = 2 g(1)
    bool equivalent = false;          // the three flags agree
    bool in_theorem_scope = false;    // p >= 5; otherwise the report is informational
};

/// Requires (f, g) to solve the defining equation; throws otherwise.
AlienReport alien_report(const FnTable& f, const FnTable& g);

namespace detail {
/// Report without the precondition check, for callers that already hold
/// verified solutions.
AlienReport alien_report_unchecked(const FnTable& f, const FnTable& g);
}

/// True iff f solves the pairing equation x f(y) + y f(x) = 0 everywhere.
bool solves_pairing(const FnTable& f);

/// Checks the three-way equivalence of alien_report over the entire kernel of
/// the defining equation. Requires p >= 5.
bool verify_equivalence_over_kernel(const PrimeField& field);

namespace serial {
bool verify_equivalence_over_kernel(const PrimeField& field);
}

/// Every member of the pairing-equation kernel doubles to zero: 2 f = 0.
/// For odd p that kernel is {0}; mod 2 it also contains the identity map.
bool pairing_kernel_doubles_to_zero(const PrimeField& field);

/// Mod 2, the identity map solves the pairing equation while the constant 1
/// and x |-> x + 1 do not; confirms all three facts.
bool char_two_pairing_check();

/// Number of alien pairs among all solutions (kernel span for p >= 5,
/// exhaustive search for p <= 5; expected: p, the pairs f = 0, g = b x).
std::size_t alien_count(const PrimeField& field);

} // namespace funceq
