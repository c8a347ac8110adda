#include "funceq/alienation.hpp"

#include <stdexcept>
#include <vector>

#include "funceq/linear_solver.hpp"
#include "funceq/parallel.hpp"

namespace funceq {

namespace detail {

// Core without the solves_equation precondition check, for callers that
// already hold kernel members.
AlienReport alien_report_unchecked(const FnTable& f, const FnTable& g) {
    const PrimeField& F = f.field();
    AlienReport report;
    report.is_alien = f.is_zero() && is_additive(g);
    report.even_f_criterion = is_even(f) && f(1) == 0;
    report.odd_g_criterion =
        is_odd(g) && g(2 % F.modulus()) == F.add(g(1), g(1));
    report.equivalent = report.is_alien == report.even_f_criterion &&
                        report.even_f_criterion == report.odd_g_criterion;
    report.in_theorem_scope = F.modulus() >= 5;
    return report;
}

} // namespace detail

AlienReport alien_report(const FnTable& f, const FnTable& g) {
    if (!solves_equation(f, g)) {
        throw std::invalid_argument("alien_report: (f, g) does not solve the equation");
    }
    return detail::alien_report_unchecked(f, g);
}

bool solves_pairing(const FnTable& f) {
    const PrimeField& F = f.field();
    const std::uint32_t p = F.modulus();
    for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 0; y <= x; ++y) { // symmetric in (x, y)
            if (F.add(F.mul(x, f(y)), F.mul(y, f(x))) != 0) return false;
        }
    }
    return true;
}

bool verify_equivalence_over_kernel(const PrimeField& field) {
    if (field.modulus() < 5) {
        throw std::domain_error(
            "verify_equivalence_over_kernel: equivalence is only claimed for p >= 5");
    }
    const SolutionSpace space = kernel(build_equation_system(field));
    const std::vector<std::vector<std::uint32_t>> members = enumerate_span(space);
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(members.size()); ++i) {
        const auto [f, g] = decode_pair(field, members[static_cast<std::size_t>(i)]);
        ok = ok && detail::alien_report_unchecked(f, g).equivalent;
    }
    return ok;
}

namespace serial {

bool verify_equivalence_over_kernel(const PrimeField& field) {
    if (field.modulus() < 5) {
        throw std::domain_error(
            "verify_equivalence_over_kernel: equivalence is only claimed for p >= 5");
    }
    const SolutionSpace space = kernel(build_equation_system(field));
    for (const auto& vec : enumerate_span(space)) {
        const auto [f, g] = decode_pair(field, vec);
        if (!funceq::detail::alien_report_unchecked(f, g).equivalent) return false;
    }
    return true;
}

} // namespace serial

bool pairing_kernel_doubles_to_zero(const PrimeField& field) {
    const SolutionSpace space = kernel(build_pairing_system(field));
    for (const auto& vec : enumerate_span(space)) {
        for (std::uint32_t v : vec) {
            if (field.add(v, v) != 0) return false;
        }
    }
    return true;
}

bool char_two_pairing_check() {
    const PrimeField field(2);
    const FnTable identity(field, {0, 1});
    const FnTable one(field, {1, 1});
    const FnTable shifted(field, {1, 0}); // x + 1
    return solves_pairing(identity) && !solves_pairing(one) && !solves_pairing(shifted);
}

std::size_t alien_count(const PrimeField& field) {
    std::size_t count = 0;
    if (field.modulus() >= 5) {
        const SolutionSpace space = kernel(build_equation_system(field));
        for (const auto& vec : enumerate_span(space)) {
            const auto [f, g] = decode_pair(field, vec);
            if (detail::alien_report_unchecked(f, g).is_alien) ++count;
        }
    } else {
        for (const auto& [f, g] : brute_force_solutions(field)) {
            if (detail::alien_report_unchecked(f, g).is_alien) ++count;
        }
    }
    return count;
}

} // namespace funceq
