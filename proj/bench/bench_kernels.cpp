// Timing harness comparing the parallel kernels against their serial
// references. Informational only; correctness equivalence is covered by the
// test suite.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "funceq/alienation.hpp"
#include "funceq/fn_table.hpp"
#include "funceq/grid.hpp"
#include "funceq/inequality_lab.hpp"
#include "funceq/linear_solver.hpp"
#include "funceq/parallel.hpp"
#include "funceq/solution_family.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
    std::printf("%-44s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx\n", name.c_str(),
                serial_ms, parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

} // namespace

int main(int argc, char** argv) {
    bool heavy = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--heavy") heavy = true;
    }
    std::printf("threads available: %d\n\n", omp_get_max_threads());

    {
        const funceq::PrimeField field(3);
        double s = 0, p = 0;
        s = time_ms([&] { (void)funceq::serial::brute_force_solutions(field); });
        p = time_ms([&] { (void)funceq::brute_force_solutions(field); });
        report("exhaustive search, p = 3 (729 pairs)", s, p);
    }
    if (heavy) {
        const funceq::PrimeField field(5);
        double s = 0, p = 0;
        s = time_ms([&] { (void)funceq::serial::brute_force_solutions(field); });
        p = time_ms([&] { (void)funceq::brute_force_solutions(field); });
        report("exhaustive search, p = 5 (~9.8M pairs)", s, p);
    }

    {
        const funceq::PrimeField field(101, 1u << 16);
        const funceq::FnTable g =
            funceq::FnTable::tabulate(field, [&](std::uint32_t x) {
                return static_cast<std::int64_t>(x) * x * x;
            });
        const funceq::PairTable F = funceq::cauchy_difference(g);
        double s = time_ms([&] { (void)funceq::serial::check_cocycle_and_symmetry(F); });
        double p = time_ms([&] { (void)funceq::check_cocycle_and_symmetry(F); });
        report("additivity-defect invariants, p = 101", s, p);
    }

    {
        const funceq::PrimeField field(13);
        double s = time_ms([&] { (void)funceq::serial::verify_family_exhausts_kernel(field); });
        double p = time_ms([&] { (void)funceq::verify_family_exhausts_kernel(field); });
        report("family exhaustiveness, p = 13", s, p);
    }

    {
        const funceq::DyadicGrid grid(heavy ? 7u : 5u, 8);
        const funceq::GridFunction f = funceq::GridFunction::linear(grid, funceq::Rat(3, 2));
        const funceq::GridFunction A = funceq::GridFunction::abs_multiple(grid, funceq::Rat(2));
        const funceq::GridFunction g = funceq::construct_solution(f, A);
        double s = time_ms([&] { (void)funceq::serial::check_inequality(f, g); });
        double p = time_ms([&] { (void)funceq::check_inequality(f, g); });
        report("grid inequality scan, " + std::to_string(grid.point_count()) + " points", s, p);
    }

    return 0;
}
