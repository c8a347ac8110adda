#include "funceq/linear_solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "funceq/parallel.hpp"

namespace funceq {

LinearSystem build_equation_system(const PrimeField& field) {
    const std::uint32_t p = field.modulus();
    const std::size_t unknowns = 2 * static_cast<std::size_t>(p);
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(static_cast<std::size_t>(p) * p);
    for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 0; y < p; ++y) {
            std::vector<std::uint32_t> row(unknowns, 0);
            auto bump = [&](std::size_t col, std::uint32_t coeff) {
                row[col] = field.add(row[col], coeff);
            };
            bump(p + field.add(x, y), 1);   // +g(x+y)
            bump(p + x, field.neg(1 % p));  // -g(x)
            bump(p + y, field.neg(1 % p));  // -g(y)
            bump(y, field.neg(x));          // -x f(y)
            bump(x, field.neg(y));          // -y f(x)
            rows.push_back(std::move(row));
        }
    }
    return LinearSystem{field, unknowns, std::move(rows)};
}

LinearSystem build_pairing_system(const PrimeField& field) {
    const std::uint32_t p = field.modulus();
    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(static_cast<std::size_t>(p) * p);
    for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 0; y < p; ++y) {
            std::vector<std::uint32_t> row(p, 0);
            row[y] = field.add(row[y], x);
            row[x] = field.add(row[x], y);
            rows.push_back(std::move(row));
        }
    }
    return LinearSystem{field, p, std::move(rows)};
}

std::vector<std::size_t> rref_in_place(std::vector<std::vector<std::uint32_t>>& rows,
                                       const PrimeField& field) {
    if (rows.empty()) return {};
    const std::size_t cols = rows[0].size();
    for (const auto& row : rows) {
        if (row.size() != cols) {
            throw std::invalid_argument("rref_in_place: ragged matrix");
        }
    }

    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);

        const std::uint32_t scale = field.inv(rows[rank][col]);
        if (scale != 1) {
            for (std::size_t j = col; j < cols; ++j) {
                rows[rank][j] = field.mul(rows[rank][j], scale);
            }
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            const std::uint32_t factor = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                rows[i][j] = field.sub(rows[i][j], field.mul(factor, rows[rank][j]));
            }
        }
        pivot_cols.push_back(col);
        ++rank;
    }
    return pivot_cols;
}

SolutionSpace::SolutionSpace(const PrimeField& field, std::size_t unknowns,
                             std::vector<std::vector<std::uint32_t>> rref_basis)
    : field_(field), unknowns_(unknowns), basis_(std::move(rref_basis)) {
    for (const auto& vec : basis_) {
        if (vec.size() != unknowns_) {
            throw std::invalid_argument("SolutionSpace: basis vector length mismatch");
        }
    }
}

SolutionSpace kernel(const LinearSystem& system) {
    std::vector<std::vector<std::uint32_t>> rows = system.rows;
    for (const auto& row : rows) {
        if (row.size() != system.unknowns) {
            throw std::invalid_argument("kernel: row length does not match unknown count");
        }
    }
    const std::vector<std::size_t> pivot_cols = rref_in_place(rows, system.field);

    std::vector<bool> is_pivot(system.unknowns, false);
    for (std::size_t col : pivot_cols) is_pivot[col] = true;

    // Standard nullspace basis: one vector per free column (ascending), with a
    // unit in the free column and the negated pivot-row entries elsewhere.
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free_col = 0; free_col < system.unknowns; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<std::uint32_t> vec(system.unknowns, 0);
        vec[free_col] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) {
            vec[pivot_cols[r]] = system.field.neg(rows[r][free_col]);
        }
        basis.push_back(std::move(vec));
    }

    // Canonical form: the basis matrix is itself reduced, so two computations
    // of the same subspace agree entry for entry.
    rref_in_place(basis, system.field);
    return SolutionSpace(system.field, system.unknowns, std::move(basis));
}

bool contains(const SolutionSpace& space, std::span<const std::uint32_t> vec) {
    if (vec.size() != space.unknowns()) {
        throw std::invalid_argument("contains: vector length " + std::to_string(vec.size()) +
                                    " does not match unknown count " +
                                    std::to_string(space.unknowns()));
    }
    const PrimeField& field = space.field();
    std::vector<std::uint32_t> residue(vec.begin(), vec.end());
    for (const auto& basis_vec : space.basis()) {
        std::size_t lead = 0;
        while (lead < basis_vec.size() && basis_vec[lead] == 0) ++lead;
        if (lead == basis_vec.size()) continue;
        const std::uint32_t factor = residue[lead]; // basis_vec[lead] == 1 in RREF
        if (factor == 0) continue;
        for (std::size_t j = lead; j < residue.size(); ++j) {
            residue[j] = field.sub(residue[j], field.mul(factor, basis_vec[j]));
        }
    }
    return std::all_of(residue.begin(), residue.end(), [](std::uint32_t v) { return v == 0; });
}

bool contains(const SolutionSpace& space, const FnTable& f, const FnTable& g) {
    if (f.field() != space.field() || g.field() != space.field()) {
        throw std::invalid_argument("contains: function pair lives in a different field");
    }
    std::vector<std::uint32_t> vec;
    vec.reserve(2 * static_cast<std::size_t>(f.modulus()));
    vec.insert(vec.end(), f.values().begin(), f.values().end());
    vec.insert(vec.end(), g.values().begin(), g.values().end());
    return contains(space, vec);
}

std::vector<std::vector<std::uint32_t>> enumerate_span(const SolutionSpace& space) {
    const PrimeField& field = space.field();
    const std::uint64_t p = field.modulus();
    const std::size_t dim = space.dimension();

    std::uint64_t count = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (count > (1u << 22) / p) {
            throw std::domain_error("enumerate_span: span has more than 2^22 vectors");
        }
        count *= p;
    }

    std::vector<std::vector<std::uint32_t>> result;
    result.reserve(count);
    std::vector<std::uint32_t> coeffs(dim, 0);
    for (std::uint64_t n = 0; n < count; ++n) {
        std::uint64_t rem = n;
        for (std::size_t i = dim; i-- > 0;) {
            coeffs[i] = static_cast<std::uint32_t>(rem % p);
            rem /= p;
        }
        std::vector<std::uint32_t> vec(space.unknowns(), 0);
        for (std::size_t i = 0; i < dim; ++i) {
            if (coeffs[i] == 0) continue;
            const auto& basis_vec = space.basis()[i];
            for (std::size_t j = 0; j < vec.size(); ++j) {
                vec[j] = field.add(vec[j], field.mul(coeffs[i], basis_vec[j]));
            }
        }
        result.push_back(std::move(vec));
    }
    return result;
}

std::pair<FnTable, FnTable> decode_pair(const PrimeField& field,
                                        std::span<const std::uint32_t> vec) {
    const std::uint32_t p = field.modulus();
    if (vec.size() != 2 * static_cast<std::size_t>(p)) {
        throw std::invalid_argument("decode_pair: expected " + std::to_string(2 * p) +
                                    " entries, got " + std::to_string(vec.size()));
    }
    FnTable f(field, std::vector<std::uint32_t>(vec.begin(), vec.begin() + p));
    FnTable g(field, std::vector<std::uint32_t>(vec.begin() + p, vec.end()));
    return {std::move(f), std::move(g)};
}

namespace detail {

// Writes the base-p digits of n into out, most significant digit first, so
// ascending n enumerates value tables in lexicographic order.
inline void decode_table(std::uint64_t n, std::uint32_t p, std::vector<std::uint32_t>& out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<std::uint32_t>(n % p);
        n /= p;
    }
}

inline std::uint64_t table_count(const PrimeField& field) {
    if (field.modulus() > 5) {
        throw std::domain_error("brute_force_solutions: only p <= 5 is tractable (p^(2p) pairs)");
    }
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < field.modulus(); ++i) count *= field.modulus();
    return count; // p^p
}

// Early-exit solution check on raw tables, avoiding FnTable construction in
// the p^(2p) hot loop.
inline bool tables_solve(const PrimeField& field, const std::vector<std::uint32_t>& f,
                         const std::vector<std::uint32_t>& g) {
    const std::uint32_t p = field.modulus();
    for (std::uint32_t x = 0; x < p; ++x) {
        for (std::uint32_t y = 0; y <= x; ++y) {
            const std::uint32_t lhs = field.sub(g[field.add(x, y)], field.add(g[x], g[y]));
            const std::uint32_t rhs = field.add(field.mul(x, f[y]), field.mul(y, f[x]));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

} // namespace detail

std::vector<std::pair<FnTable, FnTable>> brute_force_solutions(const PrimeField& field) {
    const std::uint64_t tables = detail::table_count(field);
    const std::uint32_t p = field.modulus();

    // One bucket per f-table keeps the output order deterministic regardless
    // of scheduling: buckets are filled independently and concatenated in
    // index order.
    std::vector<std::vector<std::vector<std::uint32_t>>> buckets(tables);
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t fi = 0; fi < static_cast<std::int64_t>(tables); ++fi) {
        std::vector<std::uint32_t> f(p), g(p);
        detail::decode_table(static_cast<std::uint64_t>(fi), p, f);
        auto& bucket = buckets[static_cast<std::size_t>(fi)];
        for (std::uint64_t gi = 0; gi < tables; ++gi) {
            detail::decode_table(gi, p, g);
            if (detail::tables_solve(field, f, g)) bucket.push_back(g);
        }
    }

    std::vector<std::pair<FnTable, FnTable>> result;
    for (std::uint64_t fi = 0; fi < tables; ++fi) {
        if (buckets[fi].empty()) continue;
        std::vector<std::uint32_t> f(p);
        detail::decode_table(fi, p, f);
        for (auto& g : buckets[fi]) {
            result.emplace_back(FnTable(field, f), FnTable(field, std::move(g)));
        }
    }
    return result;
}

namespace serial {

std::vector<std::pair<FnTable, FnTable>> brute_force_solutions(const PrimeField& field) {
    const std::uint64_t tables = detail::table_count(field);
    const std::uint32_t p = field.modulus();
    std::vector<std::pair<FnTable, FnTable>> result;
    std::vector<std::uint32_t> f(p), g(p);
    for (std::uint64_t fi = 0; fi < tables; ++fi) {
        detail::decode_table(fi, p, f);
        for (std::uint64_t gi = 0; gi < tables; ++gi) {
            detail::decode_table(gi, p, g);
            if (detail::tables_solve(field, f, g)) {
                result.emplace_back(FnTable(field, f), FnTable(field, g));
            }
        }
    }
    return result;
}

} // namespace serial

} // namespace funceq
