#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "funceq/fn_table.hpp"
#include "funceq/prime_field.hpp"

namespace funceq {

/// A homogeneous linear system over Z_p, rows stored densely.
struct LinearSystem {
    PrimeField field;
    std::size_t unknowns = 0;
    std::vector<std::vector<std::uint32_t>> rows;
};

/// One row per ordered pair (x, y), in row-major order, expressing
/// g(x+y) - g(x) - g(y) - x f(y) - y f(x) = 0.
/// Unknowns: columns 0..p-1 hold f(0..p-1), columns p..2p-1 hold g(0..p-1).
/// Coefficients accumulate when index coincidences merge columns.
LinearSystem build_equation_system(const PrimeField& field);

/// One row per ordered pair (x, y) for x f(y) + y f(x) = 0.
/// Unknowns: columns 0..p-1 hold f(0..p-1).
LinearSystem build_pairing_system(const PrimeField& field);

/// Reduces `rows` to reduced row echelon form in place (unit pivots, pivot
/// columns cleared above and below, zero rows last). Returns pivot columns.
std::vector<std::size_t> rref_in_place(std::vector<std::vector<std::uint32_t>>& rows,
                                       const PrimeField& field);

/// The kernel of a homogeneous system, held as an RREF basis so equal
/// subspaces have byte-identical representations.
class SolutionSpace {
public:
    SolutionSpace(const PrimeField& field, std::size_t unknowns,
                  std::vector<std::vector<std::uint32_t>> rref_basis);

    const PrimeField& field() const { return field_; }
    std::size_t unknowns() const { return unknowns_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<std::vector<std::uint32_t>>& basis() const { return basis_; }

    auto operator<=>(const SolutionSpace&) const = default;

private:
    PrimeField field_;
    std::size_t unknowns_;
    std::vector<std::vector<std::uint32_t>> basis_;
};

/// Gaussian elimination + canonical nullspace construction.
SolutionSpace kernel(const LinearSystem& system);

/// Membership test: reduces vec against the RREF basis.
bool contains(const SolutionSpace& space, std::span<const std::uint32_t> vec);

/// Membership of a function pair in a 2p-unknown space (f block then g block).
bool contains(const SolutionSpace& space, const FnTable& f, const FnTable& g);

/// All p^dimension vectors of the span, ordered by p-ary coefficient count-up
/// (first basis vector = most significant digit). Guarded against blow-up.
std::vector<std::vector<std::uint32_t>> enumerate_span(const SolutionSpace& space);

/// Splits a 2p-entry vector into the (f, g) pair it encodes.
std::pair<FnTable, FnTable> decode_pair(const PrimeField& field,
                                        std::span<const std::uint32_t> vec);

/// Exhaustive scan of all p^(2p) function pairs; p <= 5 only. Pairs are
/// returned sorted lexicographically by (f, g) value tables.
std::vector<std::pair<FnTable, FnTable>> brute_force_solutions(const PrimeField& field);

namespace serial {
std::vector<std::pair<FnTable, FnTable>> brute_force_solutions(const PrimeField& field);
}

} // namespace funceq
