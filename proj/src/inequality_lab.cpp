#include "funceq/inequality_lab.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "funceq/parallel.hpp"

namespace funceq {

namespace {

void require_same_grid(const GridFunction& a, const GridFunction& b, const char* what) {
    if (!(a.grid() == b.grid())) {
        throw std::invalid_argument(std::string(what) + ": functions live on different grids");
    }
}

} // namespace

Rat sym_product(const GridFunction& f, const Rat& x, const Rat& y) {
    return x * f(y) + y * f(x);
}

namespace detail {

// Scans row i (all ordered pairs (i, j)); appends violations in j order and
// counts core pairs. Shared by the parallel and serial drivers.
inline std::size_t scan_inequality_row(const GridFunction& f, const GridFunction& g,
                                       std::int64_t i, std::vector<GridViolation>& out) {
    const DyadicGrid& grid = f.grid();
    const std::int64_t max = grid.max_index();
    std::size_t core = 0;
    for (std::int64_t j = -max; j <= max; ++j) {
        const std::int64_t s = i + j;
        if (s < -max || s > max) continue;
        ++core;
        const Rat lhs = g.at_index(s) - g.at_index(i) - g.at_index(j);
        const Rat x = grid.point(i);
        const Rat y = grid.point(j);
        const Rat rhs = x * f.at_index(j) + y * f.at_index(i);
        if (lhs < rhs) {
            out.push_back(GridViolation{x, y, lhs, rhs});
        }
    }
    return core;
}

} // namespace detail

InequalityReport check_inequality(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g, "check_inequality");
    const std::int64_t max = f.grid().max_index();
    const std::int64_t rows = 2 * max + 1;

    std::vector<std::vector<GridViolation>> buckets(static_cast<std::size_t>(rows));
    std::size_t core = 0;
#pragma omp parallel for schedule(static) reduction(+ : core)
    for (std::int64_t r = 0; r < rows; ++r) {
        core += detail::scan_inequality_row(f, g, r - max, buckets[static_cast<std::size_t>(r)]);
    }

    InequalityReport report;
    report.core_pairs = core;
    report.total_pairs = static_cast<std::size_t>(rows) * static_cast<std::size_t>(rows);
    for (auto& bucket : buckets) {
        report.violations.insert(report.violations.end(), bucket.begin(), bucket.end());
    }
    return report;
}

namespace serial {

InequalityReport check_inequality(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g, "check_inequality");
    const std::int64_t max = f.grid().max_index();
    InequalityReport report;
    for (std::int64_t i = -max; i <= max; ++i) {
        report.core_pairs += funceq::detail::scan_inequality_row(f, g, i, report.violations);
    }
    const std::size_t rows = static_cast<std::size_t>(2 * max + 1);
    report.total_pairs = rows * rows;
    return report;
}

} // namespace serial

SymProductHypotheses check_sym_product_hypotheses(const GridFunction& f) {
    const DyadicGrid& grid = f.grid();
    const std::int64_t max = grid.max_index();

    SymProductHypotheses hyp;
    hyp.f_odd = is_odd(f);

    hyp.f_doubles_linearly = true;
    hyp.quadratic_doubling_bound = true;
    for (std::int64_t k = -max; k <= max; ++k) {
        if (2 * k < -max || 2 * k > max) continue;
        ++hyp.doubling_points;
        const Rat fx = f.at_index(k);
        const Rat f2x = f.at_index(2 * k);
        if (f2x != Rat(2) * fx) hyp.f_doubles_linearly = false;
        // s(2x, 2x) = 4 x f(2x), s(x, x) = 2 x f(x)
        const Rat x = grid.point(k);
        if (Rat(4) * x * f2x > Rat(4) * (Rat(2) * x * fx)) {
            hyp.quadratic_doubling_bound = false;
        }
    }

    hyp.negation_bound = true;
    hyp.even_under_negation = true;
    for (std::int64_t i = -max; i <= max; ++i) {
        const Rat x = grid.point(i);
        for (std::int64_t j = -max; j <= max; ++j) {
            const Rat y = grid.point(j);
            const Rat s_xy = x * f.at_index(j) + y * f.at_index(i);
            const Rat s_x_negy = x * f.at_index(-j) - y * f.at_index(i);
            const Rat s_negx_negy = -x * f.at_index(-j) - y * f.at_index(-i);
            if (s_x_negy < -s_xy) hyp.negation_bound = false;
            if (s_negx_negy != s_xy) hyp.even_under_negation = false;
        }
    }
    return hyp;
}

GridFunction construct_solution(const GridFunction& f, const GridFunction& A) {
    require_same_grid(f, A, "construct_solution");
    if (!is_additive_on_core(f)) {
        throw std::domain_error("construct_solution: f is not additive on core pairs");
    }
    if (!is_subadditive_on_core(A)) {
        throw std::domain_error("construct_solution: A is not subadditive on core pairs");
    }
    return GridFunction::tabulate(f.grid(), [&](const Rat& x) { return x * f(x) - A(x); });
}

GridFunction extract_remainder(const GridFunction& f, const GridFunction& g) {
    require_same_grid(f, g, "extract_remainder");
    if (!is_additive_on_core(f)) {
        throw std::domain_error("extract_remainder: f is not additive on core pairs");
    }
    if (!check_inequality(f, g).pass()) {
        throw std::domain_error("extract_remainder: (f, g) does not satisfy the inequality");
    }
    GridFunction A =
        GridFunction::tabulate(f.grid(), [&](const Rat& x) { return x * f(x) - g(x); });
    // With f additive, the subadditivity defect of A at a core pair equals the
    // slack of the inequality there, so this certification cannot fail for
    // inputs that passed the check above.
    if (!is_subadditive_on_core(A)) {
        throw std::logic_error("extract_remainder: remainder is not subadditive");
    }
    return A;
}

bool slack_matches_defect(const GridFunction& f, const GridFunction& g, const GridFunction& A) {
    require_same_grid(f, g, "slack_matches_defect");
    require_same_grid(f, A, "slack_matches_defect");
    const DyadicGrid& grid = f.grid();
    const std::int64_t max = grid.max_index();
    for (std::int64_t i = -max; i <= max; ++i) {
        for (std::int64_t j = i; j <= max; ++j) { // both sides symmetric in (i, j)
            const std::int64_t s = i + j;
            if (s < -max || s > max) continue;
            const Rat lhs = g.at_index(s) - g.at_index(i) - g.at_index(j);
            const Rat rhs =
                grid.point(i) * f.at_index(j) + grid.point(j) * f.at_index(i);
            const Rat defect = A.at_index(i) + A.at_index(j) - A.at_index(s);
            if (lhs - rhs != defect) return false;
        }
    }
    return true;
}

HalvingPositivity check_halving_positivity(const GridFunction& g, const Rat& x) {
    const DyadicGrid& grid = g.grid();
    const std::int64_t k0 = grid.index_of(x); // throws for off-grid x

    HalvingPositivity result;
    if (k0 == 0) {
        result.truncation_depth = 0;
        result.satisfied = g.at_index(0) + g.at_index(0) >= Rat(0);
        result.first_good_k = 0;
        return result;
    }

    const unsigned depth = static_cast<unsigned>(
        std::countr_zero(static_cast<std::uint64_t>(k0 < 0 ? -k0 : k0)));
    result.truncation_depth = depth;

    auto level_ok = [&](unsigned k) {
        const std::int64_t idx = k0 / (std::int64_t(1) << k);
        return g.at_index(idx) + g.at_index(-idx) >= Rat(0);
    };

    result.satisfied = level_ok(depth);
    if (result.satisfied) {
        unsigned first = depth;
        while (first > 0 && level_ok(first - 1)) --first;
        result.first_good_k = first;
    }
    return result;
}

NegativePremiseReport check_negative_premise_degeneracy(const GridFunction& f) {
    if (!f.grid().contains(Rat(1))) {
        throw std::domain_error("check_negative_premise_degeneracy: grid must contain 1");
    }
    if (!is_odd(f)) {
        throw std::domain_error("check_negative_premise_degeneracy: f must be odd");
    }
    const std::int64_t max = f.grid().max_index();

    NegativePremiseReport report;
    report.premise_holds = true;
    for (std::int64_t i = -max; i <= max && report.premise_holds; ++i) {
        const Rat x = f.grid().point(i);
        for (std::int64_t j = -max; j <= max; ++j) {
            const Rat s = x * f.at_index(j) + f.grid().point(j) * f.at_index(i);
            if (s > Rat(0)) {
                report.premise_holds = false;
                break;
            }
        }
    }

    report.f_is_zero = true;
    for (const Rat& v : f.values()) {
        if (v != Rat(0)) {
            report.f_is_zero = false;
            break;
        }
    }

    report.consistent = !report.premise_holds || report.f_is_zero;
    return report;
}

} // namespace funceq
