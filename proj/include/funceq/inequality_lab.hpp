#pragma once

#include <cstddef>
#include <vector>

#include "funceq/grid.hpp"
#include "funceq/rational.hpp"

namespace funceq {

/// The symmetrised product s(x, y) = x f(y) + y f(x). Throws if either
/// argument is off the grid.
Rat sym_product(const GridFunction& f, const Rat& x, const Rat& y);

/// One failing pair of the grid inequality, with both sides evaluated.
struct GridViolation {
    Rat x;
    Rat y;
    Rat lhs; // g(x+y) - g(x) - g(y)
    Rat rhs; // x f(y) + y f(x)

    bool operator==(const GridViolation&) const = default;
};

/// Exhaustive scan of g(x+y) - g(x) - g(y) >= x f(y) + y f(x) over all core
/// pairs (those whose sum stays on the grid), in index order.
struct InequalityReport {
    std::vector<GridViolation> violations;
    std::size_t core_pairs = 0;   // ordered pairs with x + y on the grid
    std::size_t total_pairs = 0;  // all ordered grid pairs

    bool pass() const { return violations.empty(); }
};

InequalityReport check_inequality(const GridFunction& f, const GridFunction& g);

namespace serial {
InequalityReport check_inequality(const GridFunction& f, const GridFunction& g);
}

/// Pointwise hypotheses on f and its symmetrised product, each checked
/// exhaustively over the grid (doubling checks only where 2x is on the grid).
struct SymProductHypotheses {
    bool f_odd = false;
    bool f_doubles_linearly = false;    // f(2x) = 2 f(x)
    bool negation_bound = false;        // s(x, -y) >= -s(x, y)
    bool even_under_negation = false;   // s(-x, -y) = s(x, y)
    bool quadratic_doubling_bound = false; // s(2x, 2x) <= 4 s(x, x)
    std::size_t doubling_points = 0;    // points with 2x on the grid

    bool all() const {
        return f_odd && f_doubles_linearly && negation_bound && even_under_negation &&
               quadratic_doubling_bound;
    }
};

SymProductHypotheses check_sym_product_hypotheses(const GridFunction& f);

/// Builds g(x) = x f(x) - A(x). Requires f additive and A subadditive on core
/// pairs; the result then satisfies the grid inequality with slack equal to
/// the subadditivity defect of A.
GridFunction construct_solution(const GridFunction& f, const GridFunction& A);

/// Recovers A(x) = x f(x) - g(x) from a solution. Requires f additive on core
/// pairs and (f, g) to pass check_inequality; certifies A subadditive.
GridFunction extract_remainder(const GridFunction& f, const GridFunction& g);

/// True iff at every core pair the slack of the inequality for (f, g) equals
/// the subadditivity defect A(x) + A(y) - A(x+y). Holds identically when
/// g(x) = x f(x) - A(x) with f additive on core pairs.
bool slack_matches_defect(const GridFunction& f, const GridFunction& g, const GridFunction& A);

/// Eventual positivity of x under repeated halving: whether
/// g(x / 2^k) + g(-x / 2^k) >= 0 for all representable k from some k0 on.
/// Representable means x / 2^k is still a grid point, which bounds k by the
/// 2-adic valuation of the scaled index of x.
struct HalvingPositivity {
    bool satisfied = false;       // holds at the deepest representable level
    unsigned truncation_depth = 0; // largest representable k
    unsigned first_good_k = 0;    // least k0 with positivity from k0 to the bottom
};

HalvingPositivity check_halving_positivity(const GridFunction& g, const Rat& x);

/// Negative-side premise scan: if s(x, y) <= 0 for ALL grid pairs, the only
/// odd f admitting it is the zero map; returns premise_holds and whether the
/// conclusion (f = 0) is consistent with it. The grid must contain 1.
struct NegativePremiseReport {
    bool premise_holds = false; // s(x, y) <= 0 everywhere on the grid
    bool f_is_zero = false;
    /// True unless the premise holds for a nonzero f (which would refute the
    /// degeneracy claim).
    bool consistent = true;
};

NegativePremiseReport check_negative_premise_degeneracy(const GridFunction& f);

} // namespace funceq
