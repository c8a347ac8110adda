#include "funceq/fn_table.hpp"

#include <stdexcept>
#include <string>

#include "funceq/parallel.hpp"

namespace funceq {

namespace {

void require_same_field(const PrimeField& a, const PrimeField& b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": operands live in different fields (" +
                                    std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()) + ")");
    }
}

} // namespace

FnTable::FnTable(const PrimeField& field, std::vector<std::uint32_t> values)
    : field_(field), values_(std::move(values)) {
    if (values_.size() != field_.modulus()) {
        throw std::invalid_argument("FnTable: expected " + std::to_string(field_.modulus()) +
                                    " values, got " + std::to_string(values_.size()));
    }
    for (std::uint32_t v : values_) {
        if (v >= field_.modulus()) {
            throw std::invalid_argument("FnTable: value " + std::to_string(v) +
                                        " is not a canonical residue mod " +
                                        std::to_string(field_.modulus()));
        }
    }
}

FnTable FnTable::zero(const PrimeField& field) {
    return FnTable(field, std::vector<std::uint32_t>(field.modulus(), 0));
}

bool FnTable::is_zero() const {
    for (std::uint32_t v : values_) {
        if (v != 0) return false;
    }
    return true;
}

PairTable::PairTable(const PrimeField& field, std::vector<std::uint32_t> values)
    : field_(field), values_(std::move(values)) {
    const std::size_t expected = static_cast<std::size_t>(field_.modulus()) * field_.modulus();
    if (values_.size() != expected) {
        throw std::invalid_argument("PairTable: expected " + std::to_string(expected) +
                                    " values, got " + std::to_string(values_.size()));
    }
    for (std::uint32_t v : values_) {
        if (v >= field_.modulus()) {
            throw std::invalid_argument("PairTable: value " + std::to_string(v) +
                                        " is not a canonical residue mod " +
                                        std::to_string(field_.modulus()));
        }
    }
}

ParityParts parity_decompose(const FnTable& f) {
    const PrimeField& F = f.field();
    const std::uint32_t p = F.modulus();
    std::vector<std::uint32_t> odd(p), even(p);
    for (std::uint32_t x = 0; x < p; ++x) {
        const std::uint32_t fx = f(x);
        const std::uint32_t fmx = f(F.neg(x));
        odd[x] = F.sub(fx, fmx);
        even[x] = F.add(fx, fmx);
    }
    return ParityParts{FnTable(F, std::move(odd)), FnTable(F, std::move(even))};
}

bool is_odd(const FnTable& f) {
    const PrimeField& F = f.field();
    for (std::uint32_t x = 0; x < F.modulus(); ++x) {
        if (f(F.neg(x)) != F.neg(f(x))) return false;
    }
    return true;
}

bool is_even(const FnTable& f) {
    const PrimeField& F = f.field();
    for (std::uint32_t x = 0; x < F.modulus(); ++x) {
        if (f(F.neg(x)) != f(x)) return false;
    }
    return true;
}

bool is_additive(const FnTable& f) {
    const PrimeField& F = f.field();
    const std::uint32_t p = F.modulus();
    for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 0; y < p; ++y) {
            if (f(F.add(x, y)) != F.add(f(x), f(y))) return false;
        }
    }
    return true;
}

PairTable cauchy_difference(const FnTable& g) {
    const PrimeField& F = g.field();
    return PairTable::tabulate(F, [&](std::uint32_t x, std::uint32_t y) {
        return F.sub(g(F.add(x, y)), F.add(g(x), g(y)));
    });
}

namespace detail {

// Shared core: symmetry is a p^2 scan, the transfer identity a p^3 scan.
inline bool cocycle_rows_ok(const PairTable& F, std::uint32_t x) {
    const PrimeField& K = F.field();
    const std::uint32_t p = K.modulus();
    for (std::uint32_t y = 0; y < p; ++y) {
        if (F.value(x, y) != F.value(y, x)) return false;
        for (std::uint32_t z = 0; z < p; ++z) {
            const std::uint32_t lhs = K.add(F.value(K.add(x, y), z), F.value(x, y));
            const std::uint32_t rhs = K.add(F.value(x, K.add(y, z)), F.value(y, z));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

} // namespace detail

bool check_cocycle_and_symmetry(const PairTable& F) {
    const std::int64_t p = F.modulus();
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::int64_t x = 0; x < p; ++x) {
        ok = ok && detail::cocycle_rows_ok(F, static_cast<std::uint32_t>(x));
    }
    return ok;
}

namespace serial {

bool check_cocycle_and_symmetry(const PairTable& F) {
    for (std::uint32_t x = 0; x < F.modulus(); ++x) {
        if (!detail::cocycle_rows_ok(F, x)) return false;
    }
    return true;
}

} // namespace serial

std::vector<EquationViolation> check_equation(const FnTable& f, const FnTable& g) {
    require_same_field(f.field(), g.field(), "check_equation");
    const PrimeField& F = f.field();
    const std::uint32_t p = F.modulus();
    std::vector<EquationViolation> violations;
    for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 0; y < p; ++y) {
            const std::uint32_t lhs = F.sub(g(F.add(x, y)), F.add(g(x), g(y)));
            const std::uint32_t rhs = F.add(F.mul(x, f(y)), F.mul(y, f(x)));
            if (lhs != rhs) violations.push_back(EquationViolation{x, y, lhs, rhs});
        }
    }
    return violations;
}

bool solves_equation(const FnTable& f, const FnTable& g) {
    require_same_field(f.field(), g.field(), "solves_equation");
    const PrimeField& F = f.field();
    const std::uint32_t p = F.modulus();
    for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 0; y <= x; ++y) { // both sides are symmetric in (x, y)
            const std::uint32_t lhs = F.sub(g(F.add(x, y)), F.add(g(x), g(y)));
            const std::uint32_t rhs = F.add(F.mul(x, f(y)), F.mul(y, f(x)));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

SolutionIdentityReport check_solution_identities(const FnTable& f, const FnTable& g) {
    if (!solves_equation(f, g)) {
        throw std::invalid_argument("check_solution_identities: (f, g) does not solve the equation");
    }
    return detail::solution_identities_unchecked(f, g);
}

SolutionIdentityReport detail::solution_identities_unchecked(const FnTable& f, const FnTable& g) {
    const PrimeField& F = f.field();
    const std::uint32_t p = F.modulus();
    const ParityParts parts = parity_decompose(f);

    SolutionIdentityReport report;
    report.g_doubling = true;
    report.even_g_factors = true;
    report.f_doubling = true;
    report.odd_part_doubling = true;
    report.even_part_doubling = true;
    for (std::uint32_t x = 0; x < p; ++x) {
        const std::uint32_t two_x = F.add(x, x);
        const std::uint32_t neg_x = F.neg(x);
        report.g_doubling = report.g_doubling &&
            F.sub(g(two_x), F.add(g(x), g(x))) == F.mul(F.add(x, x), f(x));
        report.even_g_factors = report.even_g_factors &&
            F.add(g(x), g(neg_x)) == F.mul(x, F.sub(f(x), f(neg_x)));
        report.f_doubling = report.f_doubling &&
            f(two_x) == F.add(F.mul(3 % p, f(x)), f(neg_x));
        report.odd_part_doubling = report.odd_part_doubling &&
            parts.odd(two_x) == F.add(parts.odd(x), parts.odd(x));
        report.even_part_doubling = report.even_part_doubling &&
            parts.even(two_x) == F.mul(4 % p, parts.even(x));
    }
    return report;
}

} // namespace funceq
