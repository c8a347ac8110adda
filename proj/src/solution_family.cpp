#include "funceq/solution_family.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "funceq/linear_solver.hpp"
#include "funceq/parallel.hpp"

namespace funceq {

namespace {

void require_small_primes_invertible(const PrimeField& field, const char* what) {
    if (field.modulus() < 5) {
        throw std::domain_error(std::string(what) +
                                ": requires 2 and 3 invertible, i.e. p >= 5 (got p = " +
                                std::to_string(field.modulus()) + ")");
    }
}

std::uint32_t eval_poly3(const PrimeField& F, std::uint32_t c3, std::uint32_t c2,
                         std::uint32_t c1, std::uint32_t x) {
    // Horner: ((c3 x + c2) x + c1) x
    return F.mul(F.add(F.mul(F.add(F.mul(c3, x), c2), x), c1), x);
}

} // namespace

FamilyParams family_params(const PrimeField& field, std::int64_t a, std::int64_t b,
                           std::int64_t c) {
    return FamilyParams{field, field.reduce(a), field.reduce(b), field.reduce(c)};
}

std::pair<FnTable, FnTable> family_member(const FamilyParams& params) {
    const PrimeField& F = params.field;
    require_small_primes_invertible(F, "family_member");
    const std::uint32_t third = F.inv(3);
    std::vector<std::uint32_t> f(F.modulus()), g(F.modulus());
    for (std::uint32_t x = 0; x < F.modulus(); ++x) {
        f[x] = eval_poly3(F, 0, params.c, params.a, x);
        g[x] = eval_poly3(F, F.mul(third, params.c), params.a, params.b, x);
    }
    return {FnTable(F, std::move(f)), FnTable(F, std::move(g))};
}

GeneralFamilyReport family_member_general(const FamilyParams& params) {
    const PrimeField& F = params.field;
    const std::uint32_t p = F.modulus();
    GeneralFamilyReport report;
    if (p == 2) {
        report.note = "both defining identities are vacuous mod 2; no table is determined";
        return report;
    }
    if (p == 3) {
        // 4 f = 2 a x + 2 c x^2 still determines f (4 is invertible), but the
        // g-identity has its leading 6 vanish; with x^3 = x it degenerates to
        // the consistency requirement b + c = 0.
        const std::uint32_t inv4 = F.inv(4 % p);
        std::vector<std::uint32_t> f(p);
        for (std::uint32_t x = 0; x < p; ++x) {
            f[x] = F.mul(inv4, eval_poly3(F, 0, F.mul(2, params.c), F.mul(2, params.a), x));
        }
        report.f = FnTable(F, std::move(f));
        report.additive_part_consistent = F.add(params.b, params.c) == 0;
        report.note = "mod 3 only f is determined; the cubic term folds into the linear one";
        return report;
    }
    const std::uint32_t inv4 = F.inv(4 % p);
    const std::uint32_t inv6 = F.inv(6 % p);
    std::vector<std::uint32_t> f(p), g(p);
    for (std::uint32_t x = 0; x < p; ++x) {
        f[x] = F.mul(inv4, eval_poly3(F, 0, F.mul(2, params.c), F.mul(2, params.a), x));
        g[x] = F.mul(inv6, eval_poly3(F, params.c, F.mul(3, params.a), params.b, x));
    }
    report.f = FnTable(F, std::move(f));
    report.g = FnTable(F, std::move(g));
    report.note = "2 and 3 invertible; both tables determined";
    return report;
}

FamilyParams recover_params(const FnTable& f, const FnTable& g) {
    const PrimeField& F = f.field();
    require_small_primes_invertible(F, "recover_params");
    if (g.field() != F) {
        throw std::invalid_argument("recover_params: f and g live in different fields");
    }
    // f(1) = a + c and f(2) = 2a + 4c give a = (4 f(1) - f(2)) / 2 and
    // c = (f(2) - 2 f(1)) / 2; then b = g(1) - a - c/3.
    const std::uint32_t half = F.inv(2);
    const std::uint32_t third = F.inv(3);
    const std::uint32_t f1 = f(1);
    const std::uint32_t f2 = f(2 % F.modulus());
    const std::uint32_t a = F.mul(half, F.sub(F.mul(4 % F.modulus(), f1), f2));
    const std::uint32_t c = F.mul(half, F.sub(f2, F.add(f1, f1)));
    const std::uint32_t b = F.sub(g(1), F.add(a, F.mul(third, c)));
    return FamilyParams{F, a, b, c};
}

namespace detail {

// The three family checks share this per-(a, c) slice so the parallel and
// serial drivers stay in lockstep: membership in the kernel, zero equation
// violations, and exact parameter recovery for every b.
bool family_slice_ok(const PrimeField& F, const SolutionSpace& space, std::uint32_t a,
                     std::uint32_t c) {
    for (std::uint32_t b = 0; b < F.modulus(); ++b) {
        const FamilyParams params{F, a, b, c};
        const auto [f, g] = family_member(params);
        if (!solves_equation(f, g)) return false;
        if (!contains(space, f, g)) return false;
        if (recover_params(f, g) != params) return false;
    }
    return true;
}

} // namespace detail

bool verify_family_exhausts_kernel(const PrimeField& field) {
    require_small_primes_invertible(field, "verify_family_exhausts_kernel");
    const SolutionSpace space = kernel(build_equation_system(field));
    if (space.dimension() != 3) return false;

    const std::int64_t p = field.modulus();
    bool ok = true;
#pragma omp parallel for schedule(dynamic) reduction(&& : ok)
    for (std::int64_t ac = 0; ac < p * p; ++ac) {
        ok = ok && detail::family_slice_ok(field, space,
                                           static_cast<std::uint32_t>(ac / p),
                                           static_cast<std::uint32_t>(ac % p));
    }
    // Injectivity of (a, b, c) plus membership of all p^3 members inside a
    // 3-dimensional space over Z_p forces set equality: both sides have
    // exactly p^3 elements.
    return ok;
}

namespace serial {

bool verify_family_exhausts_kernel(const PrimeField& field) {
    require_small_primes_invertible(field, "verify_family_exhausts_kernel");
    const SolutionSpace space = kernel(build_equation_system(field));
    if (space.dimension() != 3) return false;
    for (std::uint32_t a = 0; a < field.modulus(); ++a) {
        for (std::uint32_t c = 0; c < field.modulus(); ++c) {
            if (!funceq::detail::family_slice_ok(field, space, a, c)) return false;
        }
    }
    return true;
}

} // namespace serial

std::vector<FnTable> same_function_solutions(const PrimeField& field) {
    require_small_primes_invertible(field, "same_function_solutions");
    const std::uint32_t p = field.modulus();
    LinearSystem system = build_equation_system(field);
    // Slice with f = g: one extra row f(t) - g(t) = 0 per point.
    for (std::uint32_t t = 0; t < p; ++t) {
        std::vector<std::uint32_t> row(system.unknowns, 0);
        row[t] = 1;
        row[p + t] = field.neg(1);
        system.rows.push_back(std::move(row));
    }
    const SolutionSpace space = kernel(system);
    std::vector<FnTable> result;
    for (const auto& vec : enumerate_span(space)) {
        auto [f, g] = decode_pair(field, vec);
        result.push_back(std::move(f)); // f == g by construction of the slice
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace funceq
