#pragma once

#include <cstdint>
#include <vector>

#include "funceq/rational.hpp"

namespace funceq {

/// The symmetric dyadic grid { k / 2^m : |k| <= K * 2^m }: every multiple of
/// 2^{-m} in [-K, K]. Closed under negation and halving-towards-zero; sums
/// may leave it.
class DyadicGrid {
public:
    DyadicGrid(unsigned m, unsigned K);

    unsigned resolution() const { return m_; }   // denominator exponent
    unsigned half_width() const { return K_; }   // endpoint magnitude

    std::int64_t max_index() const { return max_index_; } // K * 2^m
    std::size_t point_count() const { return 2 * static_cast<std::size_t>(max_index_) + 1; }

    /// The grid point k / 2^m; |k| <= max_index().
    Rat point(std::int64_t k) const;

    bool contains(const Rat& x) const;

    /// Scaled index of a grid point: index_of(point(k)) == k. Throws for
    /// off-grid arguments.
    std::int64_t index_of(const Rat& x) const;

    auto operator<=>(const DyadicGrid&) const = default;

private:
    unsigned m_ = 0;
    unsigned K_ = 0;
    std::int64_t max_index_ = 0;
};

/// A function defined on every point of a dyadic grid, with exact rational
/// values. Storage order follows indices -max..+max.
class GridFunction {
public:
    GridFunction(const DyadicGrid& grid, std::vector<Rat> values);

    static GridFunction zero(const DyadicGrid& grid);
    static GridFunction linear(const DyadicGrid& grid, const Rat& slope);
    static GridFunction abs_multiple(const DyadicGrid& grid, const Rat& scale);

    /// Tabulates fn over the grid; fn maps Rat -> Rat.
    template <typename Fn>
    static GridFunction tabulate(const DyadicGrid& grid, Fn&& fn) {
        std::vector<Rat> values;
        values.reserve(grid.point_count());
        for (std::int64_t k = -grid.max_index(); k <= grid.max_index(); ++k) {
            values.push_back(fn(grid.point(k)));
        }
        return GridFunction(grid, std::move(values));
    }

    const DyadicGrid& grid() const { return grid_; }

    /// Value at the point with scaled index k.
    const Rat& at_index(std::int64_t k) const { return values_[offset(k)]; }

    /// Value at a rational point; throws if x is off the grid.
    const Rat& operator()(const Rat& x) const { return at_index(grid_.index_of(x)); }

    const std::vector<Rat>& values() const { return values_; }

    bool operator==(const GridFunction&) const = default;

private:
    std::size_t offset(std::int64_t k) const {
        return static_cast<std::size_t>(k + grid_.max_index());
    }

    DyadicGrid grid_;
    std::vector<Rat> values_;
};

bool is_odd(const GridFunction& f);

/// Additivity over core pairs: f(x+y) = f(x) + f(y) whenever x + y stays on
/// the grid. On a symmetric dyadic grid this forces f to be linear.
bool is_additive_on_core(const GridFunction& f);

/// Subadditivity over core pairs: A(x+y) <= A(x) + A(y).
bool is_subadditive_on_core(const GridFunction& A);

} // namespace funceq
