#include "funceq/grid.hpp"

#include <stdexcept>
#include <string>

namespace funceq {

namespace {

// Keeps point_count and all pair scans (quadratic in the point count) sane.
constexpr std::int64_t kMaxIndexLimit = std::int64_t(1) << 21;

} // namespace

DyadicGrid::DyadicGrid(unsigned m, unsigned K) : m_(m), K_(K) {
    if (K == 0) {
        throw std::invalid_argument("DyadicGrid: half-width K must be at least 1");
    }
    if (m >= 32) {
        throw std::invalid_argument("DyadicGrid: resolution exponent too large");
    }
    max_index_ = static_cast<std::int64_t>(K) << m;
    if (max_index_ > kMaxIndexLimit) {
        throw std::invalid_argument("DyadicGrid: K * 2^m exceeds " +
                                    std::to_string(kMaxIndexLimit));
    }
}

Rat DyadicGrid::point(std::int64_t k) const {
    if (k < -max_index_ || k > max_index_) {
        throw std::out_of_range("DyadicGrid::point: index " + std::to_string(k) +
                                " outside [-" + std::to_string(max_index_) + ", " +
                                std::to_string(max_index_) + "]");
    }
    return Rat(k, std::int64_t(1) << m_);
}

bool DyadicGrid::contains(const Rat& x) const {
    // Range test first: boost::rational comparison is overflow-safe, and once
    // |x| <= K the scaled index below fits comfortably in 64 bits.
    const Rat bound(static_cast<long long>(K_));
    if (x < -bound || x > bound) return false;
    // x = n/d in lowest terms lies on the grid iff d divides 2^m.
    const std::int64_t scale = std::int64_t(1) << m_;
    return scale % x.denominator() == 0;
}

std::int64_t DyadicGrid::index_of(const Rat& x) const {
    if (!contains(x)) {
        throw std::out_of_range("DyadicGrid::index_of: " + std::to_string(x.numerator()) + "/" +
                                std::to_string(x.denominator()) + " is not a grid point");
    }
    const std::int64_t scale = std::int64_t(1) << m_;
    return x.numerator() * (scale / x.denominator());
}

GridFunction::GridFunction(const DyadicGrid& grid, std::vector<Rat> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.point_count()) {
        throw std::invalid_argument("GridFunction: expected " +
                                    std::to_string(grid_.point_count()) + " values, got " +
                                    std::to_string(values_.size()));
    }
}

GridFunction GridFunction::zero(const DyadicGrid& grid) {
    return GridFunction(grid, std::vector<Rat>(grid.point_count(), Rat(0)));
}

GridFunction GridFunction::linear(const DyadicGrid& grid, const Rat& slope) {
    return tabulate(grid, [&](const Rat& x) { return slope * x; });
}

GridFunction GridFunction::abs_multiple(const DyadicGrid& grid, const Rat& scale) {
    return tabulate(grid, [&](const Rat& x) { return scale * rat_abs(x); });
}

bool is_odd(const GridFunction& f) {
    const std::int64_t max = f.grid().max_index();
    for (std::int64_t k = 1; k <= max; ++k) {
        if (f.at_index(-k) != -f.at_index(k)) return false;
    }
    return f.at_index(0) == Rat(0);
}

bool is_additive_on_core(const GridFunction& f) {
    const std::int64_t max = f.grid().max_index();
    for (std::int64_t i = -max; i <= max; ++i) {
        for (std::int64_t j = i; j <= max; ++j) { // symmetric: j >= i suffices
            const std::int64_t s = i + j;
            if (s < -max || s > max) continue;
            if (f.at_index(s) != f.at_index(i) + f.at_index(j)) return false;
        }
    }
    return true;
}

bool is_subadditive_on_core(const GridFunction& A) {
    const std::int64_t max = A.grid().max_index();
    for (std::int64_t i = -max; i <= max; ++i) {
        for (std::int64_t j = i; j <= max; ++j) {
            const std::int64_t s = i + j;
            if (s < -max || s > max) continue;
            if (A.at_index(s) > A.at_index(i) + A.at_index(j)) return false;
        }
    }
    return true;
}

} // namespace funceq
